//! Symmetric functions in finitely many variables: the classical bases,
//! Hall–Littlewood `q_n(X; -q)` and `S_{λ/μ}(X; -q)`, and the signed series
//! `H_n` with its determinant.

mod bases;
mod det;
mod hall_littlewood;
mod signed_series;

pub use bases::{complete, elementary, monomial_symmetric, power_sum, schur, Basis};
pub use det::determinant;
pub use hall_littlewood::{hl_qn, hl_qn_genfun_check, hl_qn_ratcheck, hl_qn_series, hl_s_skew};
pub use signed_series::{det_h_identity, h_signed, h_signed_subset_form, RelationR};

use crate::check::Comparison;
use crate::error::Result;
use crate::exactpoly::{EvalContext, QCoeff};

/// `Θ_q(p_n)` through the fundamental expansion against `(1 - (-q)^n) p_n`.
pub fn theta_pn_check(n: usize, ctx: EvalContext) -> Result<Comparison<EvalContext>> {
    let pn = power_sum(n, ctx)?;
    let left = crate::quasisym::theta_q_apply(&pn, n)?;
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let factor = &QCoeff::one() + &QCoeff::q_pow(n).scale(&sign.into());
    Ok(Comparison::new(format!("n={n}"), left, pn.scale(&factor)))
}
