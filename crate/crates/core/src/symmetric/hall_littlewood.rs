use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bases::{complete, elementary};
use super::det::determinant;
use crate::check::Comparison;
use crate::error::{Error, Result};
use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};
use crate::tableaux::SkewShape;

/// `q_n(X; -q) = Σ_k q^k e_k h_{n-k}`, with `q_0 = 1` and `q_n = 0` for `n < 0`.
pub fn hl_qn(n: i64, ctx: EvalContext) -> TruncPoly {
    if n < 0 {
        return TruncPoly::zero(ctx);
    }
    let n = n as usize;
    let mut acc = TruncPoly::zero(ctx);
    for k in 0..=n.min(ctx.m) {
        let term = &elementary(k, ctx) * &complete(n - k, ctx);
        acc = &acc + &term.scale(&QCoeff::q_pow(k));
    }
    acc
}

/// Evaluates `(1-t) Σ_i x_i^n Π_{j≠i} (x_i - t x_j)/(x_i - x_j)` and, as the
/// second component, `hl_qn(n)` at the same point with `q = -t`.
pub fn hl_qn_ratcheck(n: i64, xs: &[BigRational], t: &BigRational) -> Result<(BigRational, BigRational)> {
    for i in 0..xs.len() {
        if xs[i + 1..].contains(&xs[i]) {
            return Err(Error::RepeatedPoint);
        }
    }
    let closed = match n {
        n if n < 0 => BigRational::zero(),
        0 => BigRational::one(),
        n => {
            let mut sum = BigRational::zero();
            for (i, xi) in xs.iter().enumerate() {
                let mut term = num_traits::pow(xi.clone(), n as usize);
                for (j, xj) in xs.iter().enumerate() {
                    if i != j {
                        term *= (xi - t * xj) / (xi - xj);
                    }
                }
                sum += term;
            }
            (BigRational::one() - t) * sum
        }
    };
    let degree = n.max(0) as usize;
    let q = -t;
    let algebraic = hl_qn(n, EvalContext::new(xs.len(), degree)).eval_rational(xs, &q)?;
    Ok((closed, algebraic))
}

/// Coefficients of `u^0..u^N` in `Π_i (1 + q x_i u)/(1 - x_i u)`, expanded
/// one variable at a time.
pub fn hl_qn_series(n_max: usize, ctx: EvalContext) -> Vec<TruncPoly> {
    let mut series = vec![TruncPoly::zero(ctx); n_max + 1];
    series[0] = TruncPoly::one(ctx);
    let q = QCoeff::q_pow(1);
    for i in 1..=ctx.m {
        let x = TruncPoly::var(ctx, i);
        // times 1/(1 - x u): a_n <- a_n + x a_{n-1}, running upward
        for n in 1..=n_max {
            let add = &x * &series[n - 1];
            series[n] = &series[n] + &add;
        }
        // times (1 + q x u): a_n <- a_n + q x a_{n-1}, running downward
        for n in (1..=n_max).rev() {
            let add = (&x * &series[n - 1]).scale(&q);
            series[n] = &series[n] + &add;
        }
    }
    series
}

/// Compares every series coefficient up to `u^N` with `hl_qn`.
pub fn hl_qn_genfun_check(n_max: usize, ctx: EvalContext) -> Result<Vec<Comparison<EvalContext>>> {
    if n_max > ctx.d {
        return Err(Error::DegreeCapTooSmall {
            cap: ctx.d,
            needed: n_max,
        });
    }
    Ok(hl_qn_series(n_max, ctx)
        .into_iter()
        .enumerate()
        .map(|(n, s)| Comparison::new(format!("n={n}"), s, hl_qn(n as i64, ctx)))
        .collect())
}

/// `S_{λ/μ}(X; -q) = det(q_{λ_i - μ_j - i + j})` over `k = ℓ(λ)` rows.
pub fn hl_s_skew(shape: &SkewShape, ctx: EvalContext) -> TruncPoly {
    let k = shape.rows();
    let lam = shape.outer();
    let mu = shape.inner();
    let mut cache = std::collections::HashMap::new();
    let mut entry = |idx: i64| cache.entry(idx).or_insert_with(|| hl_qn(idx, ctx)).clone();
    let matrix: Vec<Vec<TruncPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| entry(lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&matrix, ctx)
}
