use std::collections::BTreeMap;

use super::functions::{gessel_fundamental, l_q_closed};
use super::indexing::SubsetDescent;
use crate::check::Comparison;
use crate::error::Result;
use crate::exactpoly::{EvalContext, PairContext, PairTruncPoly, TruncPoly};
use crate::posets::{gamma_q, gamma_q_product, LabelledWeightedPoset, Permutation};
use crate::signed::TotalSignedOrder;
use crate::symmetric::{hl_s_skew, schur};
use crate::tableaux::{Partition, SkewShape};

fn chain_gamma(pi: &Permutation, ctx: EvalContext) -> Result<TruncPoly> {
    gamma_q(&LabelledWeightedPoset::chain(pi), ctx, &TotalSignedOrder::default_order(ctx.m))
}

fn l_of(pi: &Permutation, ctx: EvalContext) -> TruncPoly {
    l_q_closed(&SubsetDescent::from_permutation(pi), ctx)
}

/// `Γ^(q)` of the chain `P_π` against the closed formula for `(n, Des π)`.
pub fn l_q_consistency(pi: &Permutation, ctx: EvalContext) -> Result<Comparison<EvalContext>> {
    Ok(Comparison::new(pi.to_string(), chain_gamma(pi, ctx)?, l_of(pi, ctx)))
}

/// For every `π ∈ S_n`, `Γ^(q)(P_π)` against `Γ^(q)(P_σ)` where `σ` is the
/// lexicographically first permutation with the same descent set.
pub fn descent_class_check(n: usize, ctx: EvalContext) -> Result<Vec<Comparison<EvalContext>>> {
    let mut reps: BTreeMap<Vec<usize>, (Permutation, TruncPoly)> = BTreeMap::new();
    let mut out = Vec::new();
    for pi in Permutation::all(n) {
        let g = chain_gamma(&pi, ctx)?;
        let (rep, rg) = reps.entry(pi.descents()).or_insert_with(|| (pi.clone(), g.clone()));
        out.push(Comparison::new(format!("{pi} ~ {rep}"), g, rg.clone()));
    }
    Ok(out)
}

/// `L_π L_σ = Σ_{τ ∈ π ⧢ σ̄} L_τ`: the left side multiplies chain
/// generating functions, the right side sums closed formulas.
pub fn product_rule_check(pi: &Permutation, sigma: &Permutation, ctx: EvalContext) -> Result<Comparison<EvalContext>> {
    let left = &chain_gamma(pi, ctx)? * &chain_gamma(sigma, ctx)?;
    let mut right = TruncPoly::zero(ctx);
    for tau in pi.shuffle_shifted(sigma) {
        right = &right + &l_of(&tau, ctx);
    }
    Ok(Comparison::new(format!("{pi} x {sigma}"), left, right))
}

/// `Δ L_π` realized on the concatenated alphabet `x_1<⋯<x_mx<y_1<⋯<y_my`:
/// `L_π(X ∪ Y) = Σ_i L_{std(π_1..π_i)}(X) L_{std(π_{i+1}..π_n)}(Y)`.
pub fn coproduct_check(pi: &Permutation, mx: usize, my: usize, d: usize) -> Result<Comparison<PairContext>> {
    let pair = PairContext::new(mx, my, d);
    let left = chain_gamma(pi, EvalContext::new(mx + my, d))?.recontext(pair)?;
    let (cx, cy) = (EvalContext::new(mx, d), EvalContext::new(my, d));
    let word: Vec<i64> = pi.values().iter().map(|&v| v as i64).collect();
    let mut right = PairTruncPoly::zero(pair);
    for i in 0..=pi.len() {
        let a = Permutation::standardize_word(&word[..i])?;
        let b = Permutation::standardize_word(&word[i..])?;
        let term = &l_of(&a, cx).embed_x(pair) * &l_of(&b, cy).embed_y(pair);
        right = &right + &term;
    }
    Ok(Comparison::new(pi.to_string(), left, right))
}

/// `q_n(XY; -q) = Σ_{λ⊢n} s_λ(X) S_λ(Y; -q)`, the left side as `Γ^(q)` of
/// the identity chain on the product alphabet. Degree cap `2n`.
pub fn cauchy_check(n: usize, mx: usize, my: usize) -> Result<Comparison<PairContext>> {
    let d = 2 * n;
    let pair = PairContext::new(mx, my, d);
    let left = gamma_q_product(&Permutation::identity(n), mx, my, d);
    let (cx, cy) = (EvalContext::new(mx, d), EvalContext::new(my, d));
    let mut right = PairTruncPoly::zero(pair);
    for lambda in Partition::all_of(n) {
        let shape = SkewShape::straight(lambda);
        let term = &schur(&shape, cx).embed_x(pair) * &hl_s_skew(&shape, cy).embed_y(pair);
        right = &right + &term;
    }
    Ok(Comparison::new(format!("n={n}"), left, right))
}

/// `L^(q)_π(XY) = Σ_{σ∘τ=π} L^(0)_σ(X) L^(q)_τ(Y)`, where `σ∘τ` applies `σ`
/// first: `i ↦ τ(σ(i))`. The other reading fails already in `S_3`.
pub fn factorization_check(pi: &Permutation, mx: usize, my: usize) -> Result<Comparison<PairContext>> {
    let n = pi.len();
    let d = 2 * n;
    let pair = PairContext::new(mx, my, d);
    let left = gamma_q_product(pi, mx, my, d);
    let (cx, cy) = (EvalContext::new(mx, d), EvalContext::new(my, d));
    let mut right = PairTruncPoly::zero(pair);
    for tau in Permutation::all(n) {
        let sigma = tau.inverse().compose(pi);
        let lx = gessel_fundamental(&SubsetDescent::from_permutation(&sigma), cx);
        let term = &lx.embed_x(pair) * &l_of(&tau, cy).embed_y(pair);
        right = &right + &term;
    }
    Ok(Comparison::new(pi.to_string(), left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn consistency_small() {
        let c = EvalContext::new(3, 3);
        for n in 0..=3 {
            for pi in Permutation::all(n) {
                assert!(l_q_consistency(&pi, c).unwrap().holds(), "{pi}");
            }
            assert!(descent_class_check(n, c).unwrap().iter().all(Comparison::holds));
        }
        assert_eq!(chain_gamma(&p("1 3 2"), c).unwrap(), chain_gamma(&p("2 3 1"), c).unwrap());
    }

    #[test]
    fn product_small() {
        let c = EvalContext::new(2, 2);
        let cmp = product_rule_check(&p("1"), &p("1"), c).unwrap();
        assert!(cmp.holds());
        let one_q = crate::exactpoly::QCoeff::from_i64s(&[1, 1]);
        let e1 = crate::symmetric::elementary(1, c).scale(&one_q);
        assert_eq!(cmp.left, &e1 * &e1);
        let empty = Permutation::identity(0);
        let cmp = product_rule_check(&empty, &p("2 1"), c).unwrap();
        assert!(cmp.holds());
        assert_eq!(cmp.left, l_of(&p("2 1"), c));
        let c4 = EvalContext::new(4, 4);
        for a in Permutation::all(2) {
            for b in Permutation::all(2) {
                assert!(product_rule_check(&a, &b, c4).unwrap().holds(), "{a} {b}");
            }
        }
    }

    #[test]
    fn coproduct_small() {
        assert!(coproduct_check(&p("1"), 2, 2, 1).unwrap().holds());
        assert!(coproduct_check(&p("2 1"), 2, 2, 2).unwrap().holds());
        for pi in Permutation::all(3) {
            assert!(coproduct_check(&pi, 2, 2, 3).unwrap().holds(), "{pi}");
        }
    }

    #[test]
    fn cauchy_small() {
        for n in 0..=2 {
            assert!(cauchy_check(n, 2, 2).unwrap().holds(), "n={n}");
        }
    }

    #[test]
    fn factorization_small() {
        for n in 0..=3 {
            for pi in Permutation::all(n) {
                assert!(factorization_check(&pi, 2, 2).unwrap().holds(), "{pi}");
            }
        }
    }

    #[test]
    fn factorization_needs_left_to_right_composition() {
        // σ = π ∘ τ^{-1} in the right-to-left reading
        let pi = p("2 3 1");
        let (mx, my, d) = (2, 2, 6);
        let pair = PairContext::new(mx, my, d);
        let mut other = PairTruncPoly::zero(pair);
        for tau in Permutation::all(3) {
            let sigma = pi.compose(&tau.inverse());
            let lx = gessel_fundamental(&SubsetDescent::from_permutation(&sigma), EvalContext::new(mx, d));
            other = &other + &(&lx.embed_x(pair) * &l_of(&tau, EvalContext::new(my, d)).embed_y(pair));
        }
        assert_ne!(other, gamma_q_product(&pi, mx, my, d));
    }
}
