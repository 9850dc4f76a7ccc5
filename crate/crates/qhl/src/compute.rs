//! `qhl compute`: one polynomial, printed as canonical JSON.

use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qhl_core::exactpoly::{EvalContext, SignedContext};
use qhl_core::posets::{gamma_q, LabelledWeightedPoset, Permutation};
use qhl_core::quasisym::{l_q_closed, SubsetDescent};
use qhl_core::signed::TotalSignedOrder;
use qhl_core::symmetric::{h_signed, hl_qn, hl_s_skew, schur, RelationR};
use qhl_core::tableaux::SkewShape;

use crate::suites::LIMITS;
use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Qn,
    S,
    L,
    Schur,
    Hn,
    Gamma,
}

impl FromStr for What {
    type Err = UsageError;
    fn from_str(s: &str) -> Result<Self, UsageError> {
        Ok(match s {
            "qn" => What::Qn,
            "S" => What::S,
            "L" => What::L,
            "schur" => What::Schur,
            "Hn" => What::Hn,
            "gamma" => What::Gamma,
            _ => return Err(UsageError(format!("unknown quantity {s:?}: expected qn, S, L, schur, Hn or gamma"))),
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct ComputeArgs {
    pub n: Option<i64>,
    pub m: Option<usize>,
    /// Defaults to the degree of the requested quantity.
    pub d: Option<usize>,
    pub q: Option<i64>,
    pub shape: Option<String>,
    pub descents: Option<String>,
    pub perm: Option<String>,
    pub order: Option<String>,
    pub seed: u64,
}

fn missing(flag: &str) -> UsageError {
    UsageError(format!("{flag} is required"))
}

fn bad(flag: &str, e: impl std::fmt::Display) -> UsageError {
    UsageError(format!("{flag}: {e}"))
}

fn parse_order(name: &str, m: usize, seed: u64) -> Result<TotalSignedOrder, UsageError> {
    Ok(match name {
        "default" => TotalSignedOrder::default_order(m),
        "positive-first" => TotalSignedOrder::positive_first(m),
        "negatives-block" => TotalSignedOrder::negatives_block(m),
        "random" => TotalSignedOrder::random(m, &mut ChaCha8Rng::seed_from_u64(seed)),
        _ => {
            return Err(UsageError(format!(
                "--order {name:?}: expected default, positive-first, negatives-block or random"
            )))
        }
    })
}

impl ComputeArgs {
    fn n(&self) -> Result<i64, UsageError> {
        self.n.ok_or_else(|| missing("--n"))
    }

    fn shape(&self) -> Result<SkewShape, UsageError> {
        let s = self.shape.as_deref().ok_or_else(|| missing("--shape"))?;
        s.parse().map_err(|e| bad("--shape", e))
    }

    fn ctx(&self, natural_degree: usize) -> Result<EvalContext, UsageError> {
        let m = self.m.unwrap_or(4);
        let d = self.d.unwrap_or(natural_degree);
        if m == 0 || m > LIMITS.m {
            return Err(UsageError(format!("--m {m} outside 1..={}", LIMITS.m)));
        }
        if d > LIMITS.d {
            return Err(UsageError(format!("--D {d} exceeds the documented maximum {}", LIMITS.d)));
        }
        Ok(EvalContext::new(m, d))
    }
}

/// The requested polynomial as canonical JSON, with `q` specialized if asked.
pub fn compute(what: What, a: &ComputeArgs) -> Result<String, UsageError> {
    let spec = |p: qhl_core::exactpoly::TruncPoly| match a.q {
        Some(q) => p.specialize_q(q),
        None => p,
    };
    let json = match what {
        What::Qn => {
            let n = a.n()?;
            let ctx = a.ctx(n.max(0) as usize)?;
            spec(hl_qn(n, ctx)).to_json()
        }
        What::S | What::Schur => {
            let shape = a.shape()?;
            let ctx = a.ctx(shape.size())?;
            let p = if what == What::S { hl_s_skew(&shape, ctx) } else { schur(&shape, ctx) };
            spec(p).to_json()
        }
        What::L => {
            let n = a.n()?;
            let n = usize::try_from(n).map_err(|_| bad("--n", "must be nonnegative"))?;
            let raw = a.descents.as_deref().ok_or_else(|| missing("--I"))?;
            let idx = SubsetDescent::parse(n, raw).map_err(|e| bad("--I", e))?;
            let ctx = a.ctx(n)?;
            spec(l_q_closed(&idx, ctx)).to_json()
        }
        What::Hn => {
            let n = a.n()?;
            let ctx = a.ctx(n.max(0) as usize)?;
            let order = parse_order(a.order.as_deref().unwrap_or("default"), ctx.m, a.seed)?;
            let sctx = SignedContext::new(ctx.m, ctx.d);
            let h = h_signed(n, &RelationR::new(order), sctx).map_err(|e| bad("--order", e))?;
            match a.q {
                Some(q) => h.specialize_q(q).to_json(),
                None => h.to_json(),
            }
        }
        What::Gamma => {
            let poset = match (&a.shape, &a.perm) {
                (Some(_), None) => LabelledWeightedPoset::skew(&a.shape()?),
                (None, Some(p)) => LabelledWeightedPoset::chain(&p.parse::<Permutation>().map_err(|e| bad("--perm", e))?),
                _ => return Err(UsageError("gamma needs exactly one of --shape or --perm".into())),
            };
            let ctx = a.ctx(poset.total_weight())?;
            let order = parse_order(a.order.as_deref().unwrap_or("default"), ctx.m, a.seed)?;
            spec(gamma_q(&poset, ctx, &order).map_err(|e| bad("--order", e))?).to_json()
        }
    };
    Ok(json)
}
