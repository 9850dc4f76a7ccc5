use std::cmp::Ordering;

use super::det::determinant;
use crate::check::Comparison;
use crate::error::{Error, Result};
use crate::exactpoly::{QCoeff, SignedContext, SignedTruncPoly};
use crate::posets::{gamma_pm, LabelledWeightedPoset};
use crate::signed::TotalSignedOrder;
use crate::tableaux::SkewShape;

/// `i R j` iff `i ≼ j` and not `i = j < 0`, for a total order `≼` on the
/// signed letters.
#[derive(Clone, Debug)]
pub struct RelationR {
    order: TotalSignedOrder,
}

impl RelationR {
    pub fn new(order: TotalSignedOrder) -> Self {
        Self { order }
    }

    pub fn order(&self) -> &TotalSignedOrder {
        &self.order
    }

    pub fn relates(&self, i: i64, j: i64) -> bool {
        match self.order.cmp(i, j) {
            Ordering::Less => true,
            Ordering::Equal => i > 0,
            Ordering::Greater => false,
        }
    }

    fn letters(&self) -> &[i64] {
        self.order.sequence()
    }

    pub fn is_transitive(&self) -> bool {
        let l = self.letters();
        l.iter().all(|&a| {
            l.iter()
                .all(|&b| l.iter().all(|&c| !(self.relates(a, b) && self.relates(b, c)) || self.relates(a, c)))
        })
    }

    /// Transitivity of the complement relation.
    pub fn complement_is_transitive(&self) -> bool {
        let l = self.letters();
        l.iter().all(|&a| {
            l.iter().all(|&b| {
                l.iter()
                    .all(|&c| self.relates(a, b) || self.relates(b, c) || !self.relates(a, c))
            })
        })
    }

    /// `a R b R c` implies `a R d` or `d R c`, checked over all quadruples.
    pub fn is_semitransitive(&self) -> bool {
        let l = self.letters();
        for &a in l {
            for &b in l {
                if !self.relates(a, b) {
                    continue;
                }
                for &c in l {
                    if self.relates(b, c) && !l.iter().all(|&d| self.relates(a, d) || self.relates(d, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn check_order(r: &RelationR, ctx: SignedContext) -> Result<()> {
    if r.order.m() != ctx.m {
        return Err(Error::OrderSize {
            order: r.order.m(),
            ctx: ctx.m,
        });
    }
    Ok(())
}

/// `H_n = Σ x_{i_1}⋯x_{i_n}` over chains `i_1 R i_2 R ⋯ R i_n`.
pub fn h_signed(n: i64, r: &RelationR, ctx: SignedContext) -> Result<SignedTruncPoly> {
    check_order(r, ctx)?;
    let mut out = SignedTruncPoly::zero(ctx);
    if n < 0 || n as usize > ctx.d {
        return Ok(out);
    }
    let one = QCoeff::one();
    let mut exps = vec![0u32; 2 * ctx.m];
    fn rec(
        left: usize,
        last: Option<i64>,
        r: &RelationR,
        ctx: SignedContext,
        exps: &mut Vec<u32>,
        out: &mut SignedTruncPoly,
        one: &QCoeff,
    ) {
        if left == 0 {
            out.add_term(exps.clone(), one);
            return;
        }
        for &v in r.letters() {
            if last.is_none_or(|u| r.relates(u, v)) {
                let s = ctx.slot(v).expect("letter within context");
                exps[s] += 1;
                rec(left - 1, Some(v), r, ctx, exps, out, one);
                exps[s] -= 1;
            }
        }
    }
    rec(n as usize, None, r, ctx, &mut exps, &mut out, &one);
    Ok(out)
}

/// `H_n` as `Σ_k Σ_U Σ_V Π x_u Π x_v` with `U` a `k`-subset of the negative
/// letters and `V` an `(n-k)`-multisubset of the positive ones.
pub fn h_signed_subset_form(n: i64, ctx: SignedContext) -> SignedTruncPoly {
    let mut out = SignedTruncPoly::zero(ctx);
    if n < 0 || n as usize > ctx.d {
        return out;
    }
    let one = QCoeff::one();
    let m = ctx.m;
    // walk letters 1..m, choosing at each the multiplicity of -a (0 or 1) and of a
    fn rec(a: usize, left: u32, m: usize, exps: &mut Vec<u32>, out: &mut SignedTruncPoly, one: &QCoeff) {
        if a == m {
            if left == 0 {
                out.add_term(exps.clone(), one);
            }
            return;
        }
        for neg in 0..=left.min(1) {
            for pos in 0..=left - neg {
                exps[2 * a] = neg;
                exps[2 * a + 1] = pos;
                rec(a + 1, left - neg - pos, m, exps, out, one);
            }
        }
        exps[2 * a] = 0;
        exps[2 * a + 1] = 0;
    }
    rec(0, n as u32, m, &mut vec![0; 2 * m], &mut out, &one);
    out
}

/// `Γ^±(P_{λ/μ})` against `det(H_{λ_i - μ_j - i + j})` under the order of `r`.
pub fn det_h_identity(shape: &SkewShape, r: &RelationR, ctx: SignedContext) -> Result<Comparison<SignedContext>> {
    check_order(r, ctx)?;
    let left = gamma_pm(&LabelledWeightedPoset::skew(shape), ctx, r.order())?;
    let k = shape.rows();
    let (lam, mu) = (shape.outer(), shape.inner());
    let mut matrix = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let idx = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            row.push(h_signed(idx, r, ctx)?);
        }
        matrix.push(row);
    }
    let right = determinant(&matrix, ctx);
    Ok(Comparison::new(format!("{shape} [{}]", r.order().name()), left, right))
}
