//! Exact arithmetic over `Z[q]`: coefficients, truncated polynomials on the
//! plain, signed and two-alphabet variable sets, and the substitution
//! `x_{-i} -> q x_i` from signed to plain variables.

mod json;
mod poly;
mod qcoeff;

pub use poly::{
    Context, EvalContext, Exponent, PairContext, PairTruncPoly, Poly, SignedContext,
    SignedTruncPoly, TruncPoly,
};
pub use qcoeff::QCoeff;

/// The substitution homomorphism `x_{-i} -> q x_i`, `x_i -> x_i`.
pub fn varpi(f: &SignedTruncPoly) -> TruncPoly {
    let sctx = *f.context();
    let mut out = TruncPoly::zero(sctx.plain());
    for (e, c) in f.terms() {
        let e = e.as_slice();
        let mut exps = vec![0u32; sctx.m];
        let mut negatives = 0usize;
        for (a, slot) in exps.iter_mut().enumerate() {
            let neg = e[2 * a];
            *slot = neg + e[2 * a + 1];
            negatives += neg as usize;
        }
        out.add_term(exps, &c.shift(negatives));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn varpi_on_negative_letter() {
        let ctx = SignedContext::new(1, 1);
        let f = SignedTruncPoly::var(ctx, -1);
        let expected = TruncPoly::var(ctx.plain(), 1).scale(&QCoeff::q_pow(1));
        assert_eq!(varpi(&f), expected);
    }

    #[test]
    fn varpi_fixes_positive_terms() {
        let ctx = SignedContext::new(2, 2);
        let f = &SignedTruncPoly::var(ctx, 1) * &SignedTruncPoly::var(ctx, 2);
        let p = ctx.plain();
        assert_eq!(varpi(&f), &TruncPoly::var(p, 1) * &TruncPoly::var(p, 2));
    }

    #[test]
    fn varpi_mixed_signs() {
        let ctx = SignedContext::new(2, 2);
        let x = |v| SignedTruncPoly::var(ctx, v);
        let f = &(&x(-1) * &x(-2)) + &(&x(1) * &x(-2));
        // q^2 x1x2 + q x1x2
        let img = varpi(&f);
        assert_eq!(img.len(), 1);
        assert_eq!(img.coeff(&[1, 1]), QCoeff::from_i64s(&[0, 1, 1]));
    }
}
