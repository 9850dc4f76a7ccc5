use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::functions::{gessel_fundamental, is_quasisymmetric, l_q_closed, monomial_qsym};
use super::indexing::SubsetDescent;
use crate::error::{Error, Result};
use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum QSymBasis {
    /// `M_α`, indexed through `α ↔ I` by partial sums.
    #[serde(rename = "M")]
    Monomial,
    /// Gessel's `L^(0)_{n,I}`.
    #[serde(rename = "L0")]
    FundamentalQ0,
}

/// A homogeneous degree-`n` quasisymmetric function written in a basis
/// indexed by subsets of `[n-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymExpansion {
    pub n: usize,
    pub basis: QSymBasis,
    /// Nonzero coefficients, keyed by the sorted subset.
    pub coeffs: BTreeMap<Vec<usize>, QCoeff>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpansionJson {
    n: usize,
    basis: QSymBasis,
    coeffs: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    #[serde(rename = "I")]
    set: Vec<usize>,
    coeff: Vec<Number>,
}

impl QSymExpansion {
    pub fn coeff(&self, set: &[usize]) -> QCoeff {
        self.coeffs.get(set).cloned().unwrap_or_default()
    }

    /// Rebuild the polynomial in `ctx`.
    pub fn evaluate(&self, ctx: EvalContext) -> TruncPoly {
        let mut out = TruncPoly::zero(ctx);
        for (set, c) in &self.coeffs {
            let idx = SubsetDescent::new(self.n, set.clone()).expect("stored subsets are valid");
            let f = match self.basis {
                QSymBasis::Monomial => monomial_qsym(&idx.to_composition(), ctx),
                QSymBasis::FundamentalQ0 => gessel_fundamental(&idx, ctx),
            };
            out = &out + &f.scale(c);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let repr = ExpansionJson {
            n: self.n,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| CoeffJson {
                    set: s.clone(),
                    coeff: c.to_json_numbers(),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: ExpansionJson = serde_json::from_str(s)?;
        let mut coeffs = BTreeMap::new();
        for c in repr.coeffs {
            let idx = SubsetDescent::new(repr.n, c.set.clone())?;
            if idx.set() != c.set.as_slice() {
                return Err(Error::Parse(format!("subset {:?} is not sorted", c.set)));
            }
            let q = QCoeff::from_json_numbers(&c.coeff)?;
            if q.is_zero() {
                return Err(Error::Parse("zero coefficient in expansion".into()));
            }
            if coeffs.insert(c.set, q).is_some() {
                return Err(Error::Parse("duplicate subset in expansion".into()));
            }
        }
        Ok(Self {
            n: repr.n,
            basis: repr.basis,
            coeffs,
        })
    }
}

fn check_expandable(f: &TruncPoly, n: usize) -> Result<()> {
    let ctx = f.context();
    if ctx.d < n {
        return Err(Error::DegreeCapTooSmall { cap: ctx.d, needed: n });
    }
    if ctx.m < n {
        return Err(Error::Unfaithful { n, m: ctx.m });
    }
    if !f.is_homogeneous_of(n) {
        return Err(Error::NotHomogeneous(n));
    }
    if !is_quasisymmetric(f) {
        return Err(Error::NotQuasisymmetric);
    }
    Ok(())
}

/// Coefficients `d_α` of `f = Σ d_α M_α`, read from front-packed monomials.
pub fn expand_monomial(f: &TruncPoly, n: usize) -> Result<QSymExpansion> {
    check_expandable(f, n)?;
    let m = f.context().m;
    let mut coeffs = BTreeMap::new();
    for idx in SubsetDescent::all(n) {
        let mut exps = vec![0u32; m];
        for (slot, &p) in idx.to_composition().parts().iter().enumerate() {
            exps[slot] = p as u32;
        }
        let c = f.coeff(&exps);
        if !c.is_zero() {
            coeffs.insert(idx.set().to_vec(), c);
        }
    }
    Ok(QSymExpansion {
        n,
        basis: QSymBasis::Monomial,
        coeffs,
    })
}

/// `f = Σ_I c_I L^(0)_{n,I}`. Since `L^(0)_I = Σ_{J⊇I} M_J`, inversion gives
/// `c_I = Σ_{J⊆I} (-1)^{|I-J|} d_J`.
pub fn expand_fundamental_q0(f: &TruncPoly, n: usize) -> Result<QSymExpansion> {
    let mono = expand_monomial(f, n)?;
    let mut coeffs = BTreeMap::new();
    for idx in SubsetDescent::all(n) {
        let mut c = QCoeff::zero();
        for j in idx.subsets() {
            let d = mono.coeff(j.set());
            if (idx.set().len() - j.set().len()) % 2 == 0 {
                c += &d;
            } else {
                c -= &d;
            }
        }
        if !c.is_zero() {
            coeffs.insert(idx.set().to_vec(), c);
        }
    }
    Ok(QSymExpansion {
        n,
        basis: QSymBasis::FundamentalQ0,
        coeffs,
    })
}

/// `Θ_q` on a homogeneous degree-`n` input: `L^(0)_{n,I} ↦ L^(q)_{n,I}`.
pub fn theta_q_apply(f: &TruncPoly, n: usize) -> Result<TruncPoly> {
    let ctx = *f.context();
    let exp = expand_fundamental_q0(f, n)?;
    let mut out = TruncPoly::zero(ctx);
    for (set, c) in &exp.coeffs {
        let idx = SubsetDescent::new(n, set.clone()).expect("valid subset");
        out = &out + &l_q_closed(&idx, ctx).scale(c);
    }
    Ok(out)
}

/// `Θ_q` on an arbitrary quasisymmetric input, one homogeneous component
/// at a time.
pub fn theta_q(f: &TruncPoly) -> Result<TruncPoly> {
    let mut out = TruncPoly::zero(*f.context());
    for n in f.degrees() {
        out = &out + &theta_q_apply(&f.component(n), n)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasisym::Composition;
    use crate::symmetric::{complete, hl_qn, hl_s_skew, power_sum, schur};
    use crate::tableaux::{enumerate_skew_shapes, enumerate_syt};

    #[test]
    fn h_n_is_l_empty() {
        let c = EvalContext::new(4, 4);
        let e = expand_fundamental_q0(&complete(4, c), 4).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff(&[]), QCoeff::one());
    }

    #[test]
    fn schur_21_expansion() {
        let c = EvalContext::new(3, 3);
        let e = expand_fundamental_q0(&schur(&"2,1".parse().unwrap(), c), 3).unwrap();
        assert_eq!(e.coeffs.len(), 2);
        assert_eq!(e.coeff(&[1]), QCoeff::one());
        assert_eq!(e.coeff(&[2]), QCoeff::one());
    }

    #[test]
    fn m11_is_l1() {
        let c = EvalContext::new(2, 2);
        let m11 = monomial_qsym(&Composition::new(vec![1, 1]).unwrap(), c);
        let e = expand_fundamental_q0(&m11, 2).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff(&[1]), QCoeff::one());
    }

    #[test]
    fn schur_expands_over_syt_descents() {
        let c = EvalContext::new(5, 5);
        for shape in enumerate_skew_shapes(5) {
            let n = shape.size();
            let mut expected: BTreeMap<Vec<usize>, QCoeff> = BTreeMap::new();
            for t in enumerate_syt(&shape) {
                *expected.entry(t.descent_set()).or_default() += &QCoeff::one();
            }
            let e = expand_fundamental_q0(&schur(&shape, c), n).unwrap();
            assert_eq!(e.coeffs, expected, "{shape}");
        }
    }

    #[test]
    fn rejections() {
        let c = EvalContext::new(2, 3);
        assert!(matches!(expand_fundamental_q0(&complete(3, c), 3), Err(Error::Unfaithful { .. })));
        let c = EvalContext::new(3, 3);
        assert!(matches!(
            expand_fundamental_q0(&TruncPoly::var(c, 1), 1),
            Err(Error::NotQuasisymmetric)
        ));
        let mixed = &complete(1, c) + &complete(2, c);
        assert!(matches!(expand_fundamental_q0(&mixed, 2), Err(Error::NotHomogeneous(2))));
        assert!(matches!(
            expand_fundamental_q0(&complete(2, EvalContext::new(3, 1)), 2),
            Err(Error::DegreeCapTooSmall { .. })
        ));
    }

    #[test]
    fn theta_examples() {
        let c = EvalContext::new(4, 4);
        for n in 1..=4 {
            assert_eq!(theta_q_apply(&complete(n, c), n).unwrap(), hl_qn(n as i64, c));
        }
        let p2 = power_sum(2, c).unwrap();
        assert_eq!(theta_q_apply(&p2, 2).unwrap(), p2.scale(&QCoeff::from_i64s(&[1, 0, -1])));
        for shape in enumerate_skew_shapes(4) {
            let s = schur(&shape, c);
            assert_eq!(theta_q_apply(&s, shape.size()).unwrap(), hl_s_skew(&shape, c), "{shape}");
        }
    }

    #[test]
    fn theta_by_degree() {
        let c = EvalContext::new(3, 3);
        let f = TruncPoly::one(c) + complete(1, c) + complete(3, c);
        let expected = TruncPoly::one(c) + hl_qn(1, c) + hl_qn(3, c);
        assert_eq!(theta_q(&f).unwrap(), expected);
    }

    #[test]
    fn json_round_trip() {
        let c = EvalContext::new(3, 3);
        let e = expand_fundamental_q0(&schur(&"2,1".parse().unwrap(), c), 3).unwrap();
        let s = e.to_json();
        assert_eq!(s, r#"{"n":3,"basis":"L0","coeffs":[{"I":[1],"coeff":[1]},{"I":[2],"coeff":[1]}]}"#);
        assert_eq!(QSymExpansion::from_json(&s).unwrap(), e);
        assert!(QSymExpansion::from_json(r#"{"n":3,"basis":"L0","coeffs":[{"I":[3],"coeff":[1]}]}"#).is_err());
        assert_eq!(e.evaluate(c), schur(&"2,1".parse().unwrap(), c));
    }
}
