//! The identity suites behind `qhl verify`. Each case computes its two sides
//! through separate code paths; the comments on each suite say which.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use qhl_core::exactpoly::{varpi, EvalContext, SignedContext, TruncPoly};
use qhl_core::posets::{gamma_q, LabelledWeightedPoset, Permutation};
use qhl_core::quasisym::{
    cauchy_check, coproduct_check, descent_class_check, factorization_check, gessel_fundamental, l_q_closed,
    l_q_consistency, product_rule_check, rank_check_generic, rank_check_peak, theta_q_apply, SubsetDescent,
};
use qhl_core::signed::TotalSignedOrder;
use qhl_core::symmetric::{
    complete, det_h_identity, h_signed, h_signed_subset_form, hl_qn, hl_qn_genfun_check, hl_qn_ratcheck, hl_s_skew,
    schur, theta_pn_check, RelationR,
};
use qhl_core::tableaux::{enumerate_marked, enumerate_skew_shapes, enumerate_syt, SkewShape};

use crate::report::{CaseResult, VerificationReport};
use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    ThmSg,
    ThmSl,
    Theta,
    Cauchy,
    Product,
    Coproduct,
    OrderFree,
    Gessel,
    Stembridge,
    DetH,
    QnRoutes,
    Ranks,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::ThmSg,
        Suite::ThmSl,
        Suite::Theta,
        Suite::Cauchy,
        Suite::Product,
        Suite::Coproduct,
        Suite::OrderFree,
        Suite::Gessel,
        Suite::Stembridge,
        Suite::DetH,
        Suite::QnRoutes,
        Suite::Ranks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ThmSg => "thm-sg",
            Suite::ThmSl => "thm-sl",
            Suite::Theta => "theta",
            Suite::Cauchy => "cauchy",
            Suite::Product => "product",
            Suite::Coproduct => "coproduct",
            Suite::OrderFree => "order-free",
            Suite::Gessel => "gessel",
            Suite::Stembridge => "stembridge",
            Suite::DetH => "det-h",
            Suite::QnRoutes => "qn-routes",
            Suite::Ranks => "ranks",
        }
    }

    /// Desk-scale defaults.
    pub fn default_bounds(self) -> Bounds {
        let base = Bounds {
            max_outer: 5,
            m: 4,
            d: 6,
            n: 4,
            mx: 3,
            my: 3,
            points: 20,
            seed: 0,
        };
        match self {
            Suite::ThmSl => Bounds { max_outer: 6, ..base },
            Suite::Theta => Bounds { m: 5, ..base },
            Suite::OrderFree => Bounds { m: 3, ..base },
            Suite::DetH => Bounds { max_outer: 4, m: 3, ..base },
            Suite::QnRoutes => Bounds { n: 5, ..base },
            _ => base,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = UsageError;
    fn from_str(s: &str) -> Result<Self, UsageError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| UsageError(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `|λ|` for shape-indexed suites.
    pub max_outer: usize,
    pub m: usize,
    pub d: usize,
    /// Degree or permutation size for the suites that take one.
    pub n: usize,
    pub mx: usize,
    pub my: usize,
    /// Random rational points for `qn-routes`.
    pub points: usize,
    pub seed: u64,
}

/// Largest accepted value of each bound.
pub const LIMITS: Bounds = Bounds {
    max_outer: 7,
    m: 6,
    d: 10,
    n: 5,
    mx: 4,
    my: 4,
    points: 1000,
    seed: u64::MAX,
};

impl Bounds {
    pub fn check(&self) -> Result<(), UsageError> {
        let over = |flag: &str, v: usize, max: usize| {
            if v > max {
                Err(UsageError(format!("{flag} {v} exceeds the documented maximum {max}")))
            } else {
                Ok(())
            }
        };
        over("--max-outer", self.max_outer, LIMITS.max_outer)?;
        over("--m", self.m, LIMITS.m)?;
        over("--D", self.d, LIMITS.d)?;
        over("--n", self.n, LIMITS.n)?;
        over("--mx", self.mx, LIMITS.mx)?;
        over("--my", self.my, LIMITS.my)?;
        over("--points", self.points, LIMITS.points)?;
        if self.m == 0 || self.mx == 0 || self.my == 0 {
            return Err(UsageError("--m, --mx and --my must be positive".into()));
        }
        Ok(())
    }

    fn need_d(&self, needed: usize, what: &str) -> Result<(), UsageError> {
        if self.d < needed {
            return Err(UsageError(format!("--D {} is below {what} {needed}", self.d)));
        }
        Ok(())
    }
}

type Job<'a> = Box<dyn Fn() -> CaseResult + Send + Sync + 'a>;

fn run(jobs: Vec<Job<'_>>) -> Vec<CaseResult> {
    jobs.par_iter().map(|j| j()).collect()
}

fn shapes(max_outer: usize) -> Vec<SkewShape> {
    enumerate_skew_shapes(max_outer)
}

fn skew_gamma(shape: &SkewShape, ctx: EvalContext) -> TruncPoly {
    let order = TotalSignedOrder::default_order(ctx.m);
    gamma_q(&LabelledWeightedPoset::skew(shape), ctx, &order).expect("order covers the context")
}

fn syt_sum(shape: &SkewShape, ctx: EvalContext) -> TruncPoly {
    let n = shape.size();
    let mut acc = TruncPoly::zero(ctx);
    for t in enumerate_syt(shape) {
        let idx = SubsetDescent::new(n, t.descent_set()).expect("descents lie in [n-1]");
        acc = &acc + &l_q_closed(&idx, ctx);
    }
    acc
}

fn marked_sum(shape: &SkewShape, ctx: EvalContext) -> TruncPoly {
    let mut acc = TruncPoly::zero(ctx);
    for t in enumerate_marked(shape, ctx.m) {
        acc = &acc + &t.weight_monomial(ctx).expect("entries within m");
    }
    acc
}

fn orders(m: usize, seed: u64) -> Vec<TotalSignedOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        TotalSignedOrder::default_order(m),
        TotalSignedOrder::positive_first(m),
        TotalSignedOrder::negatives_block(m),
        TotalSignedOrder::random(m, &mut rng),
    ]
}

fn order_names(m: usize, seed: u64) -> Vec<String> {
    orders(m, seed).iter().map(|o| format!("{}{:?}", o.name(), o.sequence())).collect()
}

/// Run one suite. Refuses bounds above [`LIMITS`].
pub fn verify(suite: Suite, b: &Bounds) -> Result<VerificationReport, UsageError> {
    b.check()?;
    let (params, cases) = match suite {
        // enriched P-partition enumeration vs determinant of q_n
        Suite::ThmSg => {
            b.need_d(b.max_outer, "--max-outer")?;
            let ctx = EvalContext::new(b.m, b.d);
            let shapes = shapes(b.max_outer);
            let jobs: Vec<Job> = shapes
                .iter()
                .map(|s| -> Job { Box::new(move || CaseResult::from_polys(s.to_string(), &skew_gamma(s, ctx), &hl_s_skew(s, ctx))) })
                .collect();
            (json!({"max_outer": b.max_outer, "m": b.m, "D": b.d}), run(jobs))
        }
        // closed-form L^(q) summed over SYT descents vs determinant
        Suite::ThmSl => {
            b.need_d(b.max_outer, "--max-outer")?;
            let ctx = EvalContext::new(b.m, b.d);
            let shapes = shapes(b.max_outer);
            let jobs: Vec<Job> = shapes
                .iter()
                .map(|s| -> Job { Box::new(move || CaseResult::from_polys(s.to_string(), &syt_sum(s, ctx), &hl_s_skew(s, ctx))) })
                .collect();
            (json!({"max_outer": b.max_outer, "m": b.m, "D": b.d}), run(jobs))
        }
        // q = 0 slice of the SYT sum vs Schur from semistandard tableaux
        Suite::Gessel => {
            b.need_d(b.max_outer, "--max-outer")?;
            let ctx = EvalContext::new(b.m, b.d);
            let shapes = shapes(b.max_outer);
            let jobs: Vec<Job> = shapes
                .iter()
                .map(|s| -> Job {
                    Box::new(move || {
                        let n = s.size();
                        let mut gessel = TruncPoly::zero(ctx);
                        for t in enumerate_syt(s) {
                            let idx = SubsetDescent::new(n, t.descent_set()).expect("valid");
                            gessel = &gessel + &gessel_fundamental(&idx, ctx);
                        }
                        let closed = syt_sum(s, ctx).specialize_q(0);
                        let ok = closed == gessel;
                        let mut c = CaseResult::from_polys(s.to_string(), &closed, &schur(s, ctx));
                        c.pass &= ok;
                        c
                    })
                })
                .collect();
            (json!({"max_outer": b.max_outer, "m": b.m, "D": b.d, "q": 0}), run(jobs))
        }
        // q = 1 slice of the SYT sum vs marked tableaux, and vs the determinant
        Suite::Stembridge => {
            b.need_d(b.max_outer, "--max-outer")?;
            let ctx = EvalContext::new(b.m, b.d);
            let shapes = shapes(b.max_outer);
            let jobs: Vec<Job> = shapes
                .iter()
                .map(|s| -> Job {
                    Box::new(move || {
                        let closed = syt_sum(s, ctx).specialize_q(1);
                        let det_ok = closed == hl_s_skew(s, ctx).specialize_q(1);
                        let mut c = CaseResult::from_polys(s.to_string(), &closed, &marked_sum(s, ctx).specialize_q(1));
                        c.pass &= det_ok;
                        c
                    })
                })
                .collect();
            (json!({"max_outer": b.max_outer, "m": b.m, "D": b.d, "q": 1}), run(jobs))
        }
        // fundamental expansion then L^(q) vs q_n, determinant, (1-(-q)^n) p_n
        Suite::Theta => {
            b.need_d(b.max_outer, "--max-outer")?;
            if b.m < b.max_outer {
                return Err(UsageError(format!(
                    "theta needs --m >= --max-outer for a faithful expansion (got {} < {})",
                    b.m, b.max_outer
                )));
            }
            let ctx = EvalContext::new(b.m, b.d);
            let mut jobs: Vec<Job> = Vec::new();
            for n in 1..=b.max_outer {
                jobs.push(Box::new(move || {
                    let left = theta_q_apply(&complete(n, ctx), n).expect("h_n expands");
                    CaseResult::from_polys(format!("h/{n}"), &left, &hl_qn(n as i64, ctx))
                }));
                jobs.push(Box::new(move || {
                    CaseResult::from_comparison(&theta_pn_check(n, ctx).expect("p_n expands")).with_prefix("p/")
                }));
            }
            for s in shapes(b.max_outer) {
                jobs.push(Box::new(move || {
                    let left = theta_q_apply(&schur(&s, ctx), s.size()).expect("Schur expands");
                    CaseResult::from_polys(format!("s/{s}"), &left, &hl_s_skew(&s, ctx))
                }));
            }
            (json!({"max_outer": b.max_outer, "m": b.m, "D": b.d}), run(jobs))
        }
        // product-alphabet enumeration vs Schur x determinant; and the
        // factorization over σ∘τ = π
        Suite::Cauchy => {
            let mut jobs: Vec<Job> = Vec::new();
            let (mx, my) = (b.mx, b.my);
            for n in 0..=b.n {
                jobs.push(Box::new(move || {
                    CaseResult::from_comparison(&cauchy_check(n, mx, my).expect("valid")).with_prefix("cauchy/")
                }));
                for pi in Permutation::all(n) {
                    jobs.push(Box::new(move || {
                        CaseResult::from_comparison(&factorization_check(&pi, mx, my).expect("valid"))
                            .with_prefix(&format!("factor/{n}/"))
                    }));
                }
            }
            (json!({"n": b.n, "mx": b.mx, "my": b.my, "D": 2 * b.n}), run(jobs))
        }
        // product of chain generating functions vs closed forms over shuffles
        Suite::Product => {
            b.need_d(b.n, "--n")?;
            let ctx = EvalContext::new(b.m, b.d);
            let mut jobs: Vec<Job> = Vec::new();
            for a in 1..b.n {
                for c in 1..=b.n - a {
                    for pi in Permutation::all(a) {
                        for sigma in Permutation::all(c) {
                            let pi = pi.clone();
                            jobs.push(Box::new(move || {
                                CaseResult::from_comparison(&product_rule_check(&pi, &sigma, ctx).expect("valid"))
                            }));
                        }
                    }
                }
            }
            (json!({"n": b.n, "m": b.m, "D": b.d}), run(jobs))
        }
        // chain enumeration on X ∪ Y vs deconcatenation of closed forms
        Suite::Coproduct => {
            b.need_d(b.n, "--n")?;
            let (mx, my, d) = (b.mx, b.my, b.d);
            let mut jobs: Vec<Job> = Vec::new();
            for n in 0..=b.n {
                for pi in Permutation::all(n) {
                    jobs.push(Box::new(move || {
                        CaseResult::from_comparison(&coproduct_check(&pi, mx, my, d).expect("valid"))
                    }));
                }
            }
            let ctx = EvalContext::new(b.m, b.d);
            for n in 0..=b.n {
                jobs.push(Box::new(move || {
                    let cmps = descent_class_check(n, ctx).expect("valid");
                    let consistent: Vec<_> = Permutation::all(n)
                        .iter()
                        .map(|pi| l_q_consistency(pi, ctx).expect("valid"))
                        .collect();
                    let pass = cmps.iter().all(|c| c.holds()) && consistent.iter().all(|c| c.holds());
                    let left: Vec<String> = consistent.iter().map(|c| c.left.to_json()).collect();
                    let right: Vec<String> = consistent.iter().map(|c| c.right.to_json()).collect();
                    let mut c = CaseResult::from_json(format!("des-only/{n}"), &left.join(","), &right.join(","));
                    c.pass &= pass;
                    c
                }));
            }
            (json!({"n": b.n, "mx": b.mx, "my": b.my, "m": b.m, "D": b.d}), run(jobs))
        }
        // chains under several orders vs subset form; ϖ(H_n) vs e/h sum
        Suite::OrderFree => {
            let mut jobs: Vec<Job> = Vec::new();
            let n_max = b.n;
            for m in 1..=b.m {
                let ctx = SignedContext::new(m, n_max);
                for n in 0..=n_max as i64 {
                    for o in orders(m, b.seed) {
                        jobs.push(Box::new(move || {
                            let left = h_signed(n, &RelationR::new(o.clone()), ctx).expect("order fits");
                            CaseResult::from_polys(
                                format!("H/m={m}/n={n}/{}", o.name()),
                                &left,
                                &h_signed_subset_form(n, ctx),
                            )
                        }));
                    }
                    jobs.push(Box::new(move || {
                        let r = RelationR::new(TotalSignedOrder::default_order(m));
                        let left = varpi(&h_signed(n, &r, ctx).expect("order fits"));
                        CaseResult::from_polys(format!("varpi/m={m}/n={n}"), &left, &hl_qn(n, ctx.plain()))
                    }));
                }
                for o in orders(m, b.seed) {
                    jobs.push(Box::new(move || {
                        let r = RelationR::new(o.clone());
                        let ok = r.is_semitransitive() && r.complement_is_transitive();
                        CaseResult::from_json(format!("R/m={m}/{}", o.name()), &ok.to_string(), "true")
                    }));
                }
            }
            (
                json!({"n": b.n, "m": b.m, "orders": order_names(b.m, b.seed)}),
                run(jobs),
            )
        }
        // signed enriched maps vs det(H) under every order
        Suite::DetH => {
            let ctx = SignedContext::new(b.m, b.max_outer);
            let mut jobs: Vec<Job> = Vec::new();
            for o in orders(b.m, b.seed) {
                let r = RelationR::new(o);
                for s in shapes(b.max_outer) {
                    let r = r.clone();
                    jobs.push(Box::new(move || {
                        CaseResult::from_comparison(&det_h_identity(&s, &r, ctx).expect("order fits"))
                    }));
                }
            }
            (
                json!({"max_outer": b.max_outer, "m": b.m, "D": b.max_outer, "orders": order_names(b.m, b.seed)}),
                run(jobs),
            )
        }
        // e/h sum vs u-series coefficients; vs the rational sum formula
        Suite::QnRoutes => {
            b.need_d(b.n, "--n")?;
            let ctx = EvalContext::new(b.m, b.d);
            let mut cases: Vec<CaseResult> = hl_qn_genfun_check(b.n, ctx)
                .expect("n <= D")
                .iter()
                .map(|c| CaseResult::from_comparison(c).with_prefix("series/"))
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
            let mut jobs: Vec<Job> = Vec::new();
            for p in 0..b.points {
                let (xs, t) = random_point(&mut rng, b.m);
                for n in 0..=b.n as i64 {
                    let (xs, t) = (xs.clone(), t.clone());
                    jobs.push(Box::new(move || {
                        let (closed, algebraic) = hl_qn_ratcheck(n, &xs, &t).expect("distinct points");
                        CaseResult::from_json(
                            format!("point/{p:03}/n={n}"),
                            &json!(closed.to_string()).to_string(),
                            &json!(algebraic.to_string()).to_string(),
                        )
                    }));
                }
            }
            cases.extend(run(jobs));
            (json!({"n": b.n, "m": b.m, "D": b.d, "points": b.points}), cases)
        }
        // Bareiss rank over Q(q) and peak-family ranks at q = 1
        Suite::Ranks => {
            let mut jobs: Vec<Job> = Vec::new();
            for n in 1..=b.n {
                jobs.push(Box::new(move || {
                    let r = rank_check_generic(n);
                    CaseResult::from_json(format!("generic/{n}"), &r.rank.to_string(), &(1usize << (n - 1)).to_string())
                }));
                jobs.push(Box::new(move || {
                    let r = rank_check_peak(n);
                    let left = json!({"full": r.full_rank, "sparse": r.sparse_rank}).to_string();
                    let right = json!({"full": r.sparse.len(), "sparse": r.sparse.len()}).to_string();
                    CaseResult::from_json(format!("peak/{n}"), &left, &right)
                }));
            }
            (json!({"n": b.n}), run(jobs))
        }
    };
    Ok(VerificationReport::new(suite.name(), params, b.seed, cases))
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-30..=30);
    let den: i64 = rng.gen_range(1..=9);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `k` pairwise distinct rationals and a rational `t`.
fn random_point<R: Rng>(rng: &mut R, k: usize) -> (Vec<BigRational>, BigRational) {
    let mut xs: Vec<BigRational> = Vec::with_capacity(k);
    while xs.len() < k {
        let x = random_rational(rng);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    (xs, random_rational(rng))
}

/// Every suite at its defaults, merged into one report with case ids
/// prefixed by the suite name.
pub fn verify_all(seed: u64) -> Result<VerificationReport, UsageError> {
    let mut params = serde_json::Map::new();
    let mut cases = Vec::new();
    for s in Suite::ALL {
        let b = Bounds { seed, ..s.default_bounds() };
        let r = verify(s, &b)?;
        params.insert(s.name().to_string(), r.params);
        cases.extend(r.cases.into_iter().map(|c| c.with_prefix(&format!("{}/", s.name()))));
    }
    Ok(VerificationReport::new("all", Value::Object(params), seed, cases))
}

impl CaseResult {
    pub fn with_prefix(mut self, prefix: &str) -> Self {
        self.id = format!("{prefix}{}", self.id);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_outer: 3,
            m: 3,
            d: 4,
            n: 3,
            mx: 2,
            my: 2,
            points: 3,
            seed: 1,
        }
    }

    #[test]
    fn every_suite_passes_small() {
        for s in Suite::ALL {
            let r = verify(s, &small()).unwrap();
            assert!(r.pass, "{s}: {:?}", r.failures().collect::<Vec<_>>());
            assert!(!r.cases.is_empty(), "{s}");
        }
    }

    #[test]
    fn bounds_refused() {
        let b = Bounds { max_outer: 9, ..Suite::ThmSg.default_bounds() };
        let e = verify(Suite::ThmSg, &b).unwrap_err();
        assert!(e.0.contains("maximum 7"), "{e}");
        let b = Bounds { d: 2, ..Suite::ThmSg.default_bounds() };
        assert!(verify(Suite::ThmSg, &b).is_err());
        let b = Bounds { m: 3, ..Suite::Theta.default_bounds() };
        assert!(verify(Suite::Theta, &b).is_err());
    }

    #[test]
    fn deterministic_reports() {
        let b = small();
        let a = verify(Suite::QnRoutes, &b).unwrap().to_json();
        let c = verify(Suite::QnRoutes, &b).unwrap().to_json();
        assert_eq!(a, c);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
