//! Enriched P-partitions and their generating functions.
//!
//! Everything here reduces to one backtracking enumerator over an abstract
//! totally ordered codomain (letters identified with their ranks, each
//! flagged negative or not). The signed alphabet, its alternative total
//! orders and the product alphabet `P x P^±` are all instances.

use std::collections::HashMap;

use super::{LabelledWeightedPoset, Permutation};
use crate::error::{Error, Result};
use crate::exactpoly::{
    Context, EvalContext, PairContext, PairTruncPoly, Poly, QCoeff, SignedContext, SignedTruncPoly,
    TruncPoly,
};
use crate::signed::TotalSignedOrder;

/// An enriched P-partition `f: [n] -> P^±`, `values[i-1] = f(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EnrichedMap {
    pub values: Vec<i64>,
}

/// Which comparable pairs the enumerator checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum PairCheck {
    Covers,
    #[cfg_attr(not(test), allow(dead_code))]
    AllComparable,
}

/// Calls `visit` with the rank assigned to every node (index `i-1`) for
/// each enriched P-partition into the codomain `negative` (ranks `0..len`).
pub(crate) fn for_each_enriched(
    poset: &LabelledWeightedPoset,
    negative: &[bool],
    check: PairCheck,
    mut visit: impl FnMut(&[usize]),
) {
    let n = poset.size();
    let pairs = match check {
        PairCheck::Covers => poset.covers().to_vec(),
        PairCheck::AllComparable => poset.relations(),
    };
    let order = poset.linear_extension();
    let mut position = vec![0; n + 1];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    // constraints[k] = lower neighbours of order[k]; all placed before it
    let mut constraints: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in &pairs {
        constraints[position[j]].push(i);
    }
    let mut assign = vec![usize::MAX; n];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        order: &[usize],
        constraints: &[Vec<usize>],
        negative: &[bool],
        assign: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == order.len() {
            visit(assign);
            return;
        }
        let j = order[k];
        'letters: for r in 0..negative.len() {
            for &i in &constraints[k] {
                let ri = assign[i - 1];
                // i <_P j: f(i) < f(j), or equal with the sign the labels dictate
                let ok = ri < r || (ri == r && if i < j { !negative[r] } else { negative[r] });
                if !ok {
                    continue 'letters;
                }
            }
            assign[j - 1] = r;
            rec(k + 1, order, constraints, negative, assign, visit);
        }
        assign[j - 1] = usize::MAX;
    }
    rec(0, &order, &constraints, negative, &mut assign, &mut visit);
}

fn letters(order: &TotalSignedOrder, max_abs: usize) -> Result<Vec<i64>> {
    if order.m() < max_abs {
        return Err(Error::LetterOutOfRange(max_abs as i64));
    }
    Ok(order
        .sequence()
        .iter()
        .copied()
        .filter(|v| v.unsigned_abs() as usize <= max_abs)
        .collect())
}

/// All enriched P-partitions with values in `{±1..±max_abs}` under `order`.
pub fn enumerate_enriched(
    poset: &LabelledWeightedPoset,
    order: &TotalSignedOrder,
    max_abs: usize,
) -> Result<Vec<EnrichedMap>> {
    let letters = letters(order, max_abs)?;
    let negative: Vec<bool> = letters.iter().map(|&v| v < 0).collect();
    let mut out = Vec::new();
    for_each_enriched(poset, &negative, PairCheck::Covers, |a| {
        out.push(EnrichedMap {
            values: a.iter().map(|&r| letters[r]).collect(),
        })
    });
    Ok(out)
}

/// Per-letter data for generating-function accumulation.
struct Letter {
    negative: bool,
    slots: Vec<usize>,
}

/// Sum over enriched maps of `prod_i q^{[f(i) neg] * with_q} x^{eps(i) * slots(f(i))}`.
fn accumulate<C: Context>(poset: &LabelledWeightedPoset, letters: &[Letter], with_q: bool, ctx: C) -> Poly<C> {
    let degree = poset.total_weight() * letters.first().map_or(1, |l| l.slots.len());
    if degree > ctx.degree_cap() {
        return Poly::zero(ctx);
    }
    let negative: Vec<bool> = letters.iter().map(|l| l.negative).collect();
    let weights = poset.weights();
    let slots = ctx.slots();
    let mut counts: HashMap<(Vec<u32>, usize), u64> = HashMap::new();
    for_each_enriched(poset, &negative, PairCheck::Covers, |a| {
        let mut exps = vec![0u32; slots];
        let mut negs = 0;
        for (node, &r) in a.iter().enumerate() {
            let l = &letters[r];
            for &s in &l.slots {
                exps[s] += weights[node];
            }
            negs += usize::from(l.negative);
        }
        *counts.entry((exps, if with_q { negs } else { 0 })).or_default() += 1;
    });
    let mut out = Poly::zero(ctx);
    for ((exps, qk), c) in counts {
        out.add_term(exps, &QCoeff::q_pow(qk).scale(&c.into()));
    }
    out
}

/// `Γ^(q)(P) = Σ_f Π_i q^{[f(i)<0]} x_{|f(i)|}^{ε(i)}`, with values restricted
/// to `{±1..±m}` (all other variables set to zero).
pub fn gamma_q(poset: &LabelledWeightedPoset, ctx: EvalContext, order: &TotalSignedOrder) -> Result<TruncPoly> {
    let letters = letters(order, ctx.m)?
        .into_iter()
        .map(|v| Letter {
            negative: v < 0,
            slots: vec![v.unsigned_abs() as usize - 1],
        })
        .collect::<Vec<_>>();
    Ok(accumulate(poset, &letters, true, ctx))
}

/// `Γ^±(P) = Σ_f Π_i x_{f(i)}^{ε(i)}` on the signed alphabet.
pub fn gamma_pm(poset: &LabelledWeightedPoset, ctx: SignedContext, order: &TotalSignedOrder) -> Result<SignedTruncPoly> {
    let letters = letters(order, ctx.m)?
        .into_iter()
        .map(|v| Letter {
            negative: v < 0,
            slots: vec![ctx.slot(v).expect("letter within context")],
        })
        .collect::<Vec<_>>();
    Ok(accumulate(poset, &letters, false, ctx))
}

/// `Γ^(q)(P_π)` on the product alphabet `XY`: P_π-partitions into
/// `[mx] x {±1..±my}` ordered lexicographically, a pair being negative iff
/// its second coordinate is, weighted `q^{[g(i)<0]} x_{f(i)} y_{|g(i)|}`.
pub fn gamma_q_product(pi: &Permutation, mx: usize, my: usize, d: usize) -> PairTruncPoly {
    let ctx = PairContext::new(mx, my, d);
    let inner = TotalSignedOrder::default_order(my);
    let mut letters = Vec::with_capacity(2 * mx * my);
    for a in 0..mx {
        for &b in inner.sequence() {
            letters.push(Letter {
                negative: b < 0,
                slots: vec![a, mx + b.unsigned_abs() as usize - 1],
            });
        }
    }
    accumulate(&LabelledWeightedPoset::chain(pi), &letters, true, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::varpi;
    use crate::tableaux::{enumerate_marked, enumerate_skew_shapes, SkewShape};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn single() -> LabelledWeightedPoset {
        LabelledWeightedPoset::new(1, &[]).unwrap()
    }

    fn values(maps: &[EnrichedMap]) -> Vec<Vec<i64>> {
        maps.iter().map(|m| m.values.clone()).collect()
    }

    #[test]
    fn single_node_maps() {
        let o = TotalSignedOrder::default_order(1);
        assert_eq!(values(&enumerate_enriched(&single(), &o, 1).unwrap()), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn increasing_chain_condition_one() {
        // 1 <_P 2 with 1 < 2: f(1) < f(2) or equal positive
        let o = TotalSignedOrder::default_order(1);
        let p = LabelledWeightedPoset::chain(&perm("1 2"));
        assert_eq!(values(&enumerate_enriched(&p, &o, 1).unwrap()), vec![vec![-1, 1], vec![1, 1]]);
    }

    #[test]
    fn column_poset_condition_two() {
        // cells numbered bottom-up: 2 <_P 1 with 2 > 1, equal negatives allowed
        let o = TotalSignedOrder::default_order(1);
        let p = LabelledWeightedPoset::skew(&"1,1".parse().unwrap());
        let got = values(&enumerate_enriched(&p, &o, 1).unwrap());
        // written as (f(2), f(1))
        let swapped: Vec<Vec<i64>> = got.iter().map(|v| vec![v[1], v[0]]).collect();
        let mut swapped = swapped;
        swapped.sort();
        assert_eq!(swapped, vec![vec![-1, -1], vec![-1, 1]]);
    }

    #[test]
    fn single_node_generating_functions() {
        let o = TotalSignedOrder::default_order(1);
        let ctx = EvalContext::new(1, 2);
        let g = gamma_q(&single(), ctx, &o).unwrap();
        assert_eq!(g, TruncPoly::var(ctx, 1).scale(&QCoeff::from_i64s(&[1, 1])));
        let heavy = single().with_weights(vec![2]).unwrap();
        let g2 = gamma_q(&heavy, ctx, &o).unwrap();
        assert_eq!(g2.len(), 1);
        assert_eq!(g2.coeff(&[2]), QCoeff::from_i64s(&[1, 1]));

        let sctx = SignedContext::new(1, 2);
        let gp = gamma_pm(&single(), sctx, &o).unwrap();
        assert_eq!(gp, &SignedTruncPoly::var(sctx, -1) + &SignedTruncPoly::var(sctx, 1));
        assert_eq!(varpi(&gp), g);
    }

    #[test]
    fn chain_12_generating_function() {
        // 16 candidate maps over {±1, ±2}, filtered by hand:
        // equal |values|: (-a, a), (a, a) -> (1+q) x_a^2
        // distinct a < b: all four sign choices -> (1+q)^2 x_a x_b
        let o = TotalSignedOrder::default_order(2);
        let ctx = EvalContext::new(2, 2);
        let g = gamma_q(&LabelledWeightedPoset::chain(&perm("1 2")), ctx, &o).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.coeff(&[2, 0]), QCoeff::from_i64s(&[1, 1]));
        assert_eq!(g.coeff(&[0, 2]), QCoeff::from_i64s(&[1, 1]));
        assert_eq!(g.coeff(&[1, 1]), QCoeff::from_i64s(&[1, 2, 1]));
    }

    #[test]
    fn chain_21_signed() {
        let o = TotalSignedOrder::default_order(1);
        let sctx = SignedContext::new(1, 2);
        let g = gamma_pm(&LabelledWeightedPoset::chain(&perm("2 1")), sctx, &o).unwrap();
        let x = |v| SignedTruncPoly::var(sctx, v);
        assert_eq!(g, &(&x(-1) * &x(-1)) + &(&x(-1) * &x(1)));
        let img = varpi(&g);
        assert_eq!(img.coeff(&[2]), QCoeff::from_i64s(&[0, 1, 1]));
    }

    #[test]
    fn covers_suffice() {
        let mut posets: Vec<LabelledWeightedPoset> = Permutation::all(4).iter().map(LabelledWeightedPoset::chain).collect();
        posets.extend(enumerate_skew_shapes(4).iter().map(LabelledWeightedPoset::skew));
        posets.push("5\n3 < 2\n1 < 2\n1 < 4\n5 < 3\n5 < 1\n".parse().unwrap());
        posets.push(LabelledWeightedPoset::new(4, &[(4, 1), (4, 2), (1, 3), (2, 3)]).unwrap());
        let negative = [true, false, true, false, false, true];
        for p in &posets {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for_each_enriched(p, &negative, PairCheck::Covers, |x| a.push(x.to_vec()));
            for_each_enriched(p, &negative, PairCheck::AllComparable, |x| b.push(x.to_vec()));
            assert_eq!(a, b, "{p:?}");
        }
    }

    #[test]
    fn enriched_maps_are_marked_tableaux() {
        use crate::posets::skew_cell_labels;
        let o = TotalSignedOrder::default_order(3);
        for shape in enumerate_skew_shapes(4) {
            let p = LabelledWeightedPoset::skew(&shape);
            let labels = skew_cell_labels(&shape);
            let mut from_maps: Vec<Vec<i64>> = enumerate_enriched(&p, &o, 3)
                .unwrap()
                .into_iter()
                .map(|f| labels.iter().map(|&l| f.values[l - 1]).collect())
                .collect();
            let mut from_tableaux: Vec<Vec<i64>> =
                enumerate_marked(&shape, 3).into_iter().map(|t| t.entries().to_vec()).collect();
            from_maps.sort();
            from_tableaux.sort();
            assert_eq!(from_maps, from_tableaux, "{shape}");
        }
    }

    #[test]
    fn weights_do_not_change_the_maps() {
        let src = "5\n3 < 2\n1 < 2\n1 < 4\n5 < 3\n5 < 1\n";
        let plain: LabelledWeightedPoset = src.parse().unwrap();
        let weighted = plain.clone().with_weights(vec![1, 5, 2, 2, 2]).unwrap();
        let o = TotalSignedOrder::default_order(2);
        assert_eq!(
            enumerate_enriched(&plain, &o, 2).unwrap(),
            enumerate_enriched(&weighted, &o, 2).unwrap()
        );
        // weights are exponents: total degree is Σε = 12
        let g = gamma_q(&weighted, EvalContext::new(2, 12), &o).unwrap();
        assert!(!g.is_zero());
        assert!(g.is_homogeneous_of(12));
        assert!(gamma_q(&weighted, EvalContext::new(2, 11), &o).unwrap().is_zero());
    }

    #[test]
    fn product_alphabet_single_node() {
        let g = gamma_q_product(&perm("1"), 2, 2, 2);
        let ctx = *g.context();
        let one_q = QCoeff::from_i64s(&[1, 1]);
        for a in 0..2 {
            for b in 0..2 {
                let mut e = vec![0; 4];
                e[a] = 1;
                e[2 + b] = 1;
                assert_eq!(g.coeff(&e), one_q);
            }
        }
        assert_eq!(g.len(), 4);
        assert_eq!(ctx, PairContext::new(2, 2, 2));
    }

    #[test]
    fn product_alphabet_at_q_zero_drops_negatives() {
        let g = gamma_q_product(&perm("2 1"), 2, 2, 4).specialize_q(0);
        let ctx = PairContext::new(2, 2, 4);
        // positive second coordinates only: P_{21}-partitions into [2]x[2] with
        // the first pair strictly greater than the second in lex order
        let mut expected = PairTruncPoly::zero(ctx);
        let pairs: Vec<(usize, usize)> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
        for &(a1, b1) in &pairs {
            for &(a2, b2) in &pairs {
                // node 2 precedes node 1 in the chain; labels decrease, so strict
                if (a2, b2) < (a1, b1) {
                    let mut e = vec![0; 4];
                    e[a1] += 1;
                    e[a2] += 1;
                    e[2 + b1] += 1;
                    e[2 + b2] += 1;
                    expected.add_term(e, &QCoeff::one());
                }
            }
        }
        assert_eq!(g, expected);
    }

    #[test]
    fn row_gamma_matches_marked_rows() {
        let shape: SkewShape = "3".parse().unwrap();
        let ctx = EvalContext::new(2, 3);
        let o = TotalSignedOrder::default_order(2);
        let g = gamma_q(&LabelledWeightedPoset::skew(&shape), ctx, &o).unwrap();
        let mut expected = TruncPoly::zero(ctx);
        for t in enumerate_marked(&shape, 2) {
            expected = &expected + &t.weight_monomial(ctx).unwrap();
        }
        assert_eq!(g, expected);
    }
}
