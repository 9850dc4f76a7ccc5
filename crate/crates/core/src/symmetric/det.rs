use std::collections::HashMap;

use crate::exactpoly::{Context, Poly};

/// Determinant of a square matrix over the truncated polynomial ring, by
/// Laplace expansion along rows with minors memoized on the set of columns
/// still in play. `ctx` supplies the `1` of the empty matrix.
pub fn determinant<C: Context>(matrix: &[Vec<Poly<C>>], ctx: C) -> Poly<C> {
    let k = matrix.len();
    assert!(k < 32, "matrix too large for cofactor expansion");
    assert!(matrix.iter().all(|r| r.len() == k), "matrix is not square");
    let mut memo: HashMap<u32, Poly<C>> = HashMap::new();
    minor(matrix, (1u32 << k) - 1, &ctx, &mut memo)
}

// Determinant of the bottom rows against the columns in `cols`.
fn minor<C: Context>(m: &[Vec<Poly<C>>], cols: u32, ctx: &C, memo: &mut HashMap<u32, Poly<C>>) -> Poly<C> {
    if cols == 0 {
        return Poly::one(ctx.clone());
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let row = m.len() - cols.count_ones() as usize;
    let mut acc = Poly::zero(ctx.clone());
    let mut sign_neg = false;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let a = &m[row][j];
        if !a.is_zero() {
            let term = a * &minor(m, cols & !(1 << j), ctx, memo);
            acc = if sign_neg { &acc - &term } else { &acc + &term };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};

    fn c(v: i64) -> TruncPoly {
        TruncPoly::constant(EvalContext::new(2, 4), QCoeff::constant(v))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<TruncPoly>> {
        rows.iter().map(|r| r.iter().map(|&v| c(v)).collect()).collect()
    }

    // Leibniz formula over all permutations, as an oracle.
    fn leibniz(m: &[Vec<TruncPoly>]) -> TruncPoly {
        let k = m.len();
        let mut acc = TruncPoly::zero(EvalContext::new(2, 4));
        for p in crate::posets::Permutation::all(k) {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p.values()[i] > p.values()[j])
                .count();
            let mut term = TruncPoly::one(EvalContext::new(2, 4));
            for i in 0..k {
                term = &term * &m[i][p.values()[i] - 1];
            }
            acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(determinant(&mat(&[]), EvalContext::new(2, 4)), c(1));
        assert_eq!(determinant(&mat(&[&[1, 2], &[3, 4]]), EvalContext::new(2, 4)), c(-2));
        let m = mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(determinant(&m, EvalContext::new(2, 4)), c(6));
    }

    #[test]
    fn matches_leibniz_on_polynomial_entries() {
        let ctx = EvalContext::new(2, 4);
        let x = TruncPoly::var(ctx, 1);
        let y = TruncPoly::var(ctx, 2);
        let q = TruncPoly::constant(ctx, QCoeff::q_pow(1));
        let m = vec![
            vec![x.clone(), c(1), y.clone(), c(0)],
            vec![c(2), &x * &y, c(0), q.clone()],
            vec![q.clone(), c(0), c(1), x.clone()],
            vec![y.clone(), c(-1), &q + &x, c(3)],
        ];
        assert_eq!(determinant(&m, ctx), leibniz(&m));
    }

    #[test]
    fn row_swap_flips_sign() {
        let ctx = EvalContext::new(2, 4);
        let x = TruncPoly::var(ctx, 1);
        let m = vec![
            vec![x.clone(), c(1), c(2)],
            vec![c(3), &x * &x, c(0)],
            vec![c(1), c(1), x.clone()],
        ];
        let mut swapped = m.clone();
        swapped.swap(0, 2);
        assert_eq!(determinant(&swapped, ctx), -&determinant(&m, ctx));
        let cols: Vec<Vec<TruncPoly>> = m.iter().map(|r| vec![r[1].clone(), r[0].clone(), r[2].clone()]).collect();
        assert_eq!(determinant(&cols, ctx), -&determinant(&m, ctx));
    }
}
