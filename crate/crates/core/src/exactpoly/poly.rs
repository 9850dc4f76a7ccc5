//! Truncated sparse multivariate polynomials over `Z[q]`.
//!
//! One generic container [`Poly`] serves the plain alphabet `X`, the signed
//! alphabet `X^±` and the two-alphabet setting `(X, Y)`; only the
//! [`Context`] differs. Monomials of total degree above the context's cap
//! are discarded eagerly by every operation.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::QCoeff;
use crate::error::{Error, Result};

/// Shape of the variable set a polynomial lives over.
pub trait Context: Clone + PartialEq + Eq + fmt::Debug {
    /// Number of exponent slots.
    fn slots(&self) -> usize;
    /// Total-degree truncation cap.
    fn degree_cap(&self) -> usize;
    fn with_degree_cap(&self, d: usize) -> Self;
}

/// `m` visible variables `x_1..x_m`, truncated at total degree `d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalContext {
    pub m: usize,
    #[serde(rename = "D")]
    pub d: usize,
}

impl EvalContext {
    pub fn new(m: usize, d: usize) -> Self {
        Self { m, d }
    }
}

impl Context for EvalContext {
    fn slots(&self) -> usize {
        self.m
    }
    fn degree_cap(&self) -> usize {
        self.d
    }
    fn with_degree_cap(&self, d: usize) -> Self {
        Self { m: self.m, d }
    }
}

/// Signed alphabet `x_{-1}, x_1, ..., x_{-m}, x_m`; slots are interleaved in
/// exactly that order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedContext {
    pub m: usize,
    #[serde(rename = "D")]
    pub d: usize,
}

impl SignedContext {
    pub fn new(m: usize, d: usize) -> Self {
        Self { m, d }
    }

    pub fn plain(&self) -> EvalContext {
        EvalContext::new(self.m, self.d)
    }

    /// Slot of the signed letter `v` (nonzero, `|v| <= m`).
    pub fn slot(&self, v: i64) -> Option<usize> {
        let a = v.unsigned_abs() as usize;
        if v == 0 || a > self.m {
            return None;
        }
        Some(2 * (a - 1) + usize::from(v > 0))
    }

    pub fn letter(slot: usize) -> i64 {
        let a = (slot / 2 + 1) as i64;
        if slot.is_multiple_of(2) {
            -a
        } else {
            a
        }
    }
}

impl From<EvalContext> for SignedContext {
    fn from(c: EvalContext) -> Self {
        Self::new(c.m, c.d)
    }
}

impl Context for SignedContext {
    fn slots(&self) -> usize {
        2 * self.m
    }
    fn degree_cap(&self) -> usize {
        self.d
    }
    fn with_degree_cap(&self, d: usize) -> Self {
        Self { m: self.m, d }
    }
}

/// Two commuting alphabets: slots `x_1..x_mx` followed by `y_1..y_my`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairContext {
    pub mx: usize,
    pub my: usize,
    #[serde(rename = "D")]
    pub d: usize,
}

impl PairContext {
    pub fn new(mx: usize, my: usize, d: usize) -> Self {
        Self { mx, my, d }
    }
}

impl Context for PairContext {
    fn slots(&self) -> usize {
        self.mx + self.my
    }
    fn degree_cap(&self) -> usize {
        self.d
    }
    fn with_degree_cap(&self, d: usize) -> Self {
        Self { d, ..*self }
    }
}

/// Exponent vector ordered graded-lexicographically: lower total degree
/// first, then larger leading exponents first (`x1^2 < x1 x2 < x2^2`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent {
    degree: usize,
    exps: Vec<u32>,
}

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| e as usize).sum();
        Self { degree, exps }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.exps
    }

    fn product(&self, other: &Exponent) -> Exponent {
        Exponent {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C: Context> {
    ctx: C,
    terms: BTreeMap<Exponent, QCoeff>,
}

pub type TruncPoly = Poly<EvalContext>;
pub type SignedTruncPoly = Poly<SignedContext>;
pub type PairTruncPoly = Poly<PairContext>;

impl<C: Context> Poly<C> {
    pub fn zero(ctx: C) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: C, c: QCoeff) -> Self {
        let mut p = Self::zero(ctx);
        let slots = p.ctx.slots();
        p.add_term(vec![0; slots], &c);
        p
    }

    pub fn one(ctx: C) -> Self {
        Self::constant(ctx, QCoeff::one())
    }

    /// A single monomial; returns zero when the monomial exceeds the cap.
    pub fn monomial(ctx: C, exps: Vec<u32>, coeff: QCoeff) -> Result<Self> {
        if exps.len() != ctx.slots() {
            return Err(Error::BadExponentLength {
                expected: ctx.slots(),
                got: exps.len(),
            });
        }
        let mut p = Self::zero(ctx);
        p.add_term(exps, &coeff);
        Ok(p)
    }

    pub fn context(&self) -> &C {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in canonical graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &QCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> QCoeff {
        self.terms
            .get(&Exponent::new(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Accumulate `c * x^exps`, dropping it if it exceeds the degree cap.
    ///
    /// Panics if `exps` does not have one entry per slot.
    pub fn add_term(&mut self, exps: Vec<u32>, c: &QCoeff) {
        assert_eq!(exps.len(), self.ctx.slots(), "exponent length mismatch");
        let e = Exponent::new(exps);
        self.add_exponent(e, c);
    }

    fn add_exponent(&mut self, e: Exponent, c: &QCoeff) {
        if c.is_zero() || e.degree > self.ctx.degree_cap() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                format!("{:?}", self.ctx),
                format!("{:?}", other.ctx),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_exponent(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_exponent(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let cap = self.ctx.degree_cap();
        let mut acc: BTreeMap<Exponent, QCoeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            // terms are sorted by degree, so the inner loop can stop early
            for (eb, cb) in &other.terms {
                if ea.degree + eb.degree > cap {
                    break;
                }
                let prod = ca * cb;
                match acc.entry(ea.product(eb)) {
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    Entry::Occupied(mut o) => *o.get_mut() += &prod,
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            ctx: self.ctx.clone(),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &QCoeff) -> Self {
        self.map_coeffs(|a| a * c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ctx.clone());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&QCoeff) -> QCoeff) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let c = f(c);
            if !c.is_zero() {
                terms.insert(e.clone(), c);
            }
        }
        Self {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Substitute an integer for `q` in every coefficient.
    pub fn specialize_q(&self, q: i64) -> Self {
        let q = BigInt::from(q);
        self.map_coeffs(|c| c.specialize(&q))
    }

    /// Re-truncate to a (usually smaller) degree cap.
    pub fn truncate(&self, d: usize) -> Self {
        Self {
            ctx: self.ctx.with_degree_cap(d),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree <= d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degree-`n` homogeneous part.
    pub fn component(&self, n: usize) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree == n)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Total degrees that carry at least one term, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(|e| e.degree).collect();
        out.dedup();
        out
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|e| e.degree == n)
    }

    /// Rebuild the polynomial in a different context with the same slot count.
    pub fn recontext<D: Context>(&self, ctx: D) -> Result<Poly<D>> {
        if ctx.slots() != self.ctx.slots() {
            return Err(Error::BadExponentLength {
                expected: ctx.slots(),
                got: self.ctx.slots(),
            });
        }
        let mut out = Poly::zero(ctx);
        for (e, c) in &self.terms {
            out.add_exponent(e.clone(), c);
        }
        Ok(out)
    }

    /// Exact evaluation at rational coordinates (one per slot) and a rational `q`.
    pub fn eval_rational(&self, xs: &[BigRational], q: &BigRational) -> Result<BigRational> {
        if xs.len() != self.ctx.slots() {
            return Err(Error::PointCount {
                expected: self.ctx.slots(),
                got: xs.len(),
            });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.eval(q);
            for (x, &k) in xs.iter().zip(e.as_slice()) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    pub(crate) fn from_parts(ctx: C, terms: BTreeMap<Exponent, QCoeff>) -> Self {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            p.add_exponent(e, &c);
        }
        p
    }
}

impl TruncPoly {
    /// The variable `x_i`, 1-based.
    pub fn var(ctx: EvalContext, i: usize) -> Self {
        assert!(i >= 1 && i <= ctx.m, "variable x_{i} outside 1..={}", ctx.m);
        let mut exps = vec![0; ctx.m];
        exps[i - 1] = 1;
        let mut p = Self::zero(ctx);
        p.add_term(exps, &QCoeff::one());
        p
    }

    /// Place this polynomial on the `X` slots of a two-alphabet context.
    pub fn embed_x(&self, ctx: PairContext) -> PairTruncPoly {
        assert_eq!(self.ctx.m, ctx.mx);
        self.embed_at(ctx, 0)
    }

    /// Place this polynomial on the `Y` slots of a two-alphabet context.
    pub fn embed_y(&self, ctx: PairContext) -> PairTruncPoly {
        assert_eq!(self.ctx.m, ctx.my);
        self.embed_at(ctx, ctx.mx)
    }

    fn embed_at(&self, ctx: PairContext, offset: usize) -> PairTruncPoly {
        let mut out = PairTruncPoly::zero(ctx);
        for (e, c) in &self.terms {
            let mut exps = vec![0; ctx.slots()];
            exps[offset..offset + self.ctx.m].copy_from_slice(e.as_slice());
            out.add_term(exps, c);
        }
        out
    }
}

impl SignedTruncPoly {
    /// The variable `x_v` for a nonzero signed letter `v`.
    pub fn var(ctx: SignedContext, v: i64) -> Self {
        let slot = ctx.slot(v).expect("signed letter outside the context");
        let mut exps = vec![0; ctx.slots()];
        exps[slot] = 1;
        let mut p = Self::zero(ctx);
        p.add_term(exps, &QCoeff::one());
        p
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a, C: Context> $tr<&'a Poly<C>> for &'a Poly<C> {
            type Output = Poly<C>;
            /// Panics on a context mismatch; use the `try_*` form to get an error instead.
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$try(rhs).expect("polynomial context mismatch")
            }
        }

        impl<C: Context> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Context> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.map_coeffs(|c| -c)
    }
}

impl<C: Context> std::iter::Sum for Poly<C> {
    /// Panics on an empty iterator: the context cannot be inferred.
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

impl<C: Context> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]{{", self.ctx)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({c}){:?}", e.as_slice())?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |i| format!("x{}", i + 1))
    }
}

impl fmt::Display for SignedTruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |i| format!("x[{}]", SignedContext::letter(i)))
    }
}

impl fmt::Display for PairTruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mx = self.ctx.mx;
        write_terms(f, self, |i| {
            if i < mx {
                format!("x{}", i + 1)
            } else {
                format!("y{}", i - mx + 1)
            }
        })
    }
}

fn write_terms<C: Context>(
    f: &mut fmt::Formatter<'_>,
    p: &Poly<C>,
    name: impl Fn(usize) -> String,
) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (k, (e, c)) in p.terms.iter().enumerate() {
        if k > 0 {
            f.write_str(" + ")?;
        }
        let mono: Vec<String> = e
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| if x == 1 { name(i) } else { format!("{}^{x}", name(i)) })
            .collect();
        if mono.is_empty() {
            write!(f, "({c})")?;
        } else if c.is_one() {
            f.write_str(&mono.join("*"))?;
        } else {
            write!(f, "({c})*{}", mono.join("*"))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(ctx: EvalContext, i: usize) -> TruncPoly {
        TruncPoly::var(ctx, i)
    }

    #[test]
    fn square_of_sum() {
        let ctx = EvalContext::new(2, 2);
        let s = &x(ctx, 1) + &x(ctx, 2);
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&[2, 0]), QCoeff::one());
        assert_eq!(sq.coeff(&[1, 1]), QCoeff::constant(2));
        assert_eq!(sq.coeff(&[0, 2]), QCoeff::one());
    }

    #[test]
    fn truncation_drops_high_degree() {
        let ctx = EvalContext::new(1, 1);
        assert!((&x(ctx, 1) * &x(ctx, 1)).is_zero());
    }

    #[test]
    fn coefficient_ring_multiplication() {
        let ctx = EvalContext::new(2, 2);
        let one_q = QCoeff::from_i64s(&[1, 1]);
        let p = &x(ctx, 1).scale(&one_q) * &x(ctx, 2).scale(&one_q);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&[1, 1]), QCoeff::from_i64s(&[1, 2, 1]));
    }

    #[test]
    fn context_mismatch_rejected() {
        let a = x(EvalContext::new(2, 2), 1);
        let b = x(EvalContext::new(2, 3), 1);
        assert!(matches!(a.try_mul(&b), Err(Error::ContextMismatch(..))));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let ctx = EvalContext::new(2, 2);
        let s = &x(ctx, 1) + &x(ctx, 2);
        let p = &(&s * &s) + &TruncPoly::one(ctx);
        let exps: Vec<Vec<u32>> = p.terms().map(|(e, _)| e.as_slice().to_vec()).collect();
        assert_eq!(exps, vec![vec![0, 0], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn rational_evaluation() {
        let ctx = EvalContext::new(2, 2);
        let p = &x(ctx, 1) + &x(ctx, 2);
        let pts = [BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())];
        let v = p.eval_rational(&pts, &BigRational::from_integer(7.into())).unwrap();
        assert_eq!(v, BigRational::new(5.into(), 6.into()));

        let ctx1 = EvalContext::new(1, 1);
        let qx = x(ctx1, 1).scale(&QCoeff::q_pow(1));
        let v = qx
            .eval_rational(&[BigRational::from_integer(2.into())], &BigRational::from_integer(3.into()))
            .unwrap();
        assert_eq!(v, BigRational::from_integer(6.into()));
        assert!(matches!(qx.eval_rational(&[], &v), Err(Error::PointCount { .. })));
    }

    #[test]
    fn signed_slots_interleave() {
        let ctx = SignedContext::new(3, 2);
        let order: Vec<i64> = (0..6).map(SignedContext::letter).collect();
        assert_eq!(order, vec![-1, 1, -2, 2, -3, 3]);
        for (s, &v) in order.iter().enumerate() {
            assert_eq!(ctx.slot(v), Some(s));
        }
        assert_eq!(ctx.slot(4), None);
        assert_eq!(ctx.slot(0), None);
    }

    #[test]
    fn embedding_into_pair_context() {
        let pc = PairContext::new(2, 3, 2);
        let px = x(EvalContext::new(2, 2), 2).embed_x(pc);
        let py = x(EvalContext::new(3, 2), 1).embed_y(pc);
        let prod = &px * &py;
        assert_eq!(prod.coeff(&[0, 1, 1, 0, 0]), QCoeff::one());
        assert_eq!(prod.to_string(), "x2*y1");
    }
}
