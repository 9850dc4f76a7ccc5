use crate::error::{Error, Result};
use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};
use crate::tableaux::{enumerate_ssyt, Partition, SkewShape};

/// An element of one of the classical bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Basis {
    E(usize),
    H(usize),
    P(usize),
    M(Partition),
}

impl Basis {
    pub fn eval(&self, ctx: EvalContext) -> Result<TruncPoly> {
        match self {
            Basis::E(k) => Ok(elementary(*k, ctx)),
            Basis::H(k) => Ok(complete(*k, ctx)),
            Basis::P(k) => power_sum(*k, ctx),
            Basis::M(l) => Ok(monomial_symmetric(l, ctx)),
        }
    }
}

// Exponent vectors of length m and total degree k with every entry <= cap.
fn bounded_exponents(m: usize, k: usize, cap: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(i: usize, rem: u32, cap: u32, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if i + 1 == cur.len() {
            if rem <= cap {
                cur[i] = rem;
                visit(cur);
                cur[i] = 0;
            }
            return;
        }
        for a in 0..=rem.min(cap) {
            cur[i] = a;
            rec(i + 1, rem - a, cap, cur, visit);
        }
        cur[i] = 0;
    }
    if m == 0 {
        if k == 0 {
            visit(&[]);
        }
        return;
    }
    rec(0, k as u32, cap, &mut vec![0; m], &mut visit);
}

fn sum_of_exponents(k: usize, cap: u32, ctx: EvalContext) -> TruncPoly {
    let mut out = TruncPoly::zero(ctx);
    if k > ctx.d {
        return out;
    }
    let one = QCoeff::one();
    bounded_exponents(ctx.m, k, cap, |e| out.add_term(e.to_vec(), &one));
    out
}

/// `e_k`; zero when `k > m`.
pub fn elementary(k: usize, ctx: EvalContext) -> TruncPoly {
    sum_of_exponents(k, 1, ctx)
}

/// `h_k`.
pub fn complete(k: usize, ctx: EvalContext) -> TruncPoly {
    sum_of_exponents(k, k as u32, ctx)
}

/// `p_k` for `k >= 1`.
pub fn power_sum(k: usize, ctx: EvalContext) -> Result<TruncPoly> {
    if k == 0 {
        return Err(Error::PowerSumZero);
    }
    let mut out = TruncPoly::zero(ctx);
    for i in 0..ctx.m {
        let mut e = vec![0; ctx.m];
        e[i] = k as u32;
        out.add_term(e, &QCoeff::one());
    }
    Ok(out)
}

/// `m_λ`: every distinct rearrangement of `λ` padded with zeros.
pub fn monomial_symmetric(lambda: &Partition, ctx: EvalContext) -> TruncPoly {
    let mut out = TruncPoly::zero(ctx);
    if lambda.len() > ctx.m || lambda.size() > ctx.d {
        return out;
    }
    // distinct values with multiplicities, zero included
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &p in lambda.parts() {
        match values.last_mut() {
            Some((v, c)) if *v == p as u32 => *c += 1,
            _ => values.push((p as u32, 1)),
        }
    }
    values.push((0, ctx.m - lambda.len()));
    fn rec(cur: &mut Vec<u32>, values: &mut [(u32, usize)], out: &mut TruncPoly) {
        if cur.len() == out.context().m {
            out.add_term(cur.clone(), &QCoeff::one());
            return;
        }
        for i in 0..values.len() {
            if values[i].1 > 0 {
                values[i].1 -= 1;
                cur.push(values[i].0);
                rec(cur, values, out);
                cur.pop();
                values[i].1 += 1;
            }
        }
    }
    rec(&mut Vec::with_capacity(ctx.m), &mut values, &mut out);
    out
}

/// `s_{λ/μ}` as the sum of `x^T` over semistandard tableaux.
pub fn schur(shape: &SkewShape, ctx: EvalContext) -> TruncPoly {
    let mut out = TruncPoly::zero(ctx);
    if shape.size() > ctx.d {
        return out;
    }
    let one = QCoeff::one();
    for t in enumerate_ssyt(shape, ctx.m) {
        let mut e = vec![0u32; ctx.m];
        for &v in t.entries() {
            e[v - 1] += 1;
        }
        out.add_term(e, &one);
    }
    out
}
