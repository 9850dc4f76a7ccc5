//! `qhl selftest`: module invariants at small sizes, seeded.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use qhl_core::exactpoly::{varpi, Context, EvalContext, PairContext, Poly, QCoeff, SignedContext, SignedTruncPoly, TruncPoly};
use qhl_core::posets::Permutation;
use qhl_core::quasisym::{QSymBasis, QSymExpansion, SubsetDescent};

use crate::report::{CaseResult, VerificationReport};

pub const SAMPLES: usize = 200;

fn random_poly<C: Context, R: Rng>(rng: &mut R, ctx: C, slots: usize) -> Poly<C> {
    let mut p = Poly::zero(ctx);
    for _ in 0..rng.gen_range(0..6) {
        let exps: Vec<u32> = (0..slots).map(|_| rng.gen_range(0..=2)).collect();
        let coeffs: Vec<i64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(-9..=9)).collect();
        p.add_term(exps, &QCoeff::from_i64s(&coeffs));
    }
    p
}

fn ring_case(k: usize, rng: &mut ChaCha8Rng) -> CaseResult {
    let ctx = EvalContext::new(3, 4);
    let [a, b, c]: [TruncPoly; 3] = std::array::from_fn(|_| random_poly(rng, ctx, 3));
    let left = [
        &a * &b,
        &(&a * &b) * &c,
        &a * &(&b + &c),
        &a + &b,
        &a * &TruncPoly::one(ctx),
    ];
    let right = [
        &b * &a,
        &a * &(&b * &c),
        &(&a * &b) + &(&a * &c),
        &b + &a,
        a.clone(),
    ];
    let join = |ps: &[TruncPoly]| ps.iter().map(|p| p.to_json()).collect::<Vec<_>>().join("\n");
    CaseResult::from_json(format!("ring/{k:03}"), &join(&left), &join(&right))
}

fn varpi_case(k: usize, rng: &mut ChaCha8Rng) -> CaseResult {
    let ctx = SignedContext::new(2, 4);
    let a: SignedTruncPoly = random_poly(rng, ctx, 4);
    let b: SignedTruncPoly = random_poly(rng, ctx, 4);
    let left = format!("{}\n{}", varpi(&(&a * &b)).to_json(), varpi(&(&a + &b)).to_json());
    let right = format!("{}\n{}", (&varpi(&a) * &varpi(&b)).to_json(), (&varpi(&a) + &varpi(&b)).to_json());
    CaseResult::from_json(format!("varpi/{k:03}"), &left, &right)
}

fn serde_case(k: usize, rng: &mut ChaCha8Rng) -> CaseResult {
    let plain: TruncPoly = random_poly(rng, EvalContext::new(3, 4), 3);
    let signed: SignedTruncPoly = random_poly(rng, SignedContext::new(2, 4), 4);
    let pair: Poly<PairContext> = random_poly(rng, PairContext::new(2, 1, 4), 3);
    let n = rng.gen_range(1..=4);
    let mut exp = QSymExpansion { n, basis: QSymBasis::FundamentalQ0, coeffs: Default::default() };
    for idx in SubsetDescent::all(n) {
        if rng.gen_bool(0.5) {
            exp.coeffs.insert(idx.set().to_vec(), QCoeff::from_i64s(&[rng.gen_range(-5..=5), 1]));
        }
    }
    let originals = [plain.to_json(), signed.to_json(), pair.to_json(), exp.to_json()];
    let again = [
        TruncPoly::from_json(&originals[0]).map(|p| p.to_json()),
        SignedTruncPoly::from_json(&originals[1]).map(|p| p.to_json()),
        Poly::<PairContext>::from_json(&originals[2]).map(|p| p.to_json()),
        QSymExpansion::from_json(&originals[3]).map(|e| e.to_json()),
    ];
    let again: Vec<String> = again.into_iter().map(|r| r.unwrap_or_else(|e| format!("error: {e}"))).collect();
    CaseResult::from_json(format!("serde/{k:03}"), &originals.join("\n"), &again.join("\n"))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// RSK on all of `S_n`: distinct pairs, equal shapes, `Des π = Des Q`.
fn rsk_case(n: usize) -> CaseResult {
    let mut pairs = BTreeSet::new();
    let mut shapes_agree = true;
    let mut descents_agree = true;
    for pi in Permutation::all(n) {
        let (p, q) = pi.rsk();
        shapes_agree &= p.shape() == q.shape();
        descents_agree &= pi.descents() == q.descent_set();
        pairs.insert((p, q));
    }
    let left = json!({"pairs": pairs.len(), "shapes": shapes_agree, "descents": descents_agree}).to_string();
    let right = json!({"pairs": factorial(n), "shapes": true, "descents": true}).to_string();
    CaseResult::from_json(format!("rsk/{n}"), &left, &right)
}

pub fn selftest(seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for k in 0..SAMPLES {
        cases.push(ring_case(k, &mut rng));
    }
    for k in 0..SAMPLES {
        cases.push(varpi_case(k, &mut rng));
    }
    for k in 0..SAMPLES / 4 {
        cases.push(serde_case(k, &mut rng));
    }
    for n in 0..=5 {
        cases.push(rsk_case(n));
    }
    VerificationReport::new("selftest", json!({"samples": SAMPLES, "rsk_max_n": 5}), seed, cases)
}
