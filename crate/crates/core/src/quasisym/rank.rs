use super::indexing::SubsetDescent;
use super::functions::l_q_closed;
use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};

/// Rank over `Q(q)` of a matrix with entries in `Z[q]`, by fraction-free
/// (Bareiss) elimination. Columns without a pivot are skipped; every
/// intermediate entry is a minor of the input, so divisions are exact.
pub fn rank_bareiss(mut rows: Vec<Vec<QCoeff>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = QCoeff::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            for c in col + 1..ncols {
                let num = &(&pivot * &rows[r][c]) - &(&factor * &rows[rank][c]);
                rows[r][c] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            rows[r][col] = QCoeff::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Coefficients of a degree-`n` quasisymmetric `f` on `M_α`, `α` running over
/// the compositions of `n` in subset-bitmask order. Needs `m >= n`.
fn monomial_row(f: &TruncPoly, n: usize) -> Vec<QCoeff> {
    let m = f.context().m;
    SubsetDescent::all(n)
        .iter()
        .map(|idx| {
            let mut exps = vec![0u32; m];
            for (slot, &p) in idx.to_composition().parts().iter().enumerate() {
                exps[slot] = p as u32;
            }
            f.coeff(&exps)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub n: usize,
    pub family_size: usize,
    pub rank: usize,
}

impl RankReport {
    pub fn independent(&self) -> bool {
        self.rank == self.family_size
    }
}

/// Rank over `Q(q)` of `{L^(q)_{n,I} : I ⊆ [n-1]}` in the monomial basis,
/// computed with `m = n` variables.
pub fn rank_check_generic(n: usize) -> RankReport {
    let ctx = EvalContext::new(n, n);
    let rows: Vec<Vec<QCoeff>> = SubsetDescent::all(n)
        .iter()
        .map(|idx| monomial_row(&l_q_closed(idx, ctx), n))
        .collect();
    RankReport {
        n,
        family_size: rows.len(),
        rank: rank_bareiss(rows),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakRankReport {
    pub n: usize,
    /// Rank of every `L^(1)_{n,I}`.
    pub full_rank: usize,
    /// The subsets with `I ∪ {0}` free of consecutive pairs.
    pub sparse: Vec<SubsetDescent>,
    pub sparse_rank: usize,
}

impl PeakRankReport {
    /// The sparse subfamily is independent and spans the whole family.
    pub fn holds(&self) -> bool {
        self.sparse_rank == self.sparse.len() && self.full_rank == self.sparse_rank
    }
}

/// At `q = 1`: ranks of the full family and of the sparse subfamily.
pub fn rank_check_peak(n: usize) -> PeakRankReport {
    let ctx = EvalContext::new(n, n);
    let row = |idx: &SubsetDescent| monomial_row(&l_q_closed(idx, ctx).specialize_q(1), n);
    let all = SubsetDescent::all(n);
    let sparse: Vec<SubsetDescent> = all.iter().filter(|i| i.is_sparse()).cloned().collect();
    PeakRankReport {
        n,
        full_rank: rank_bareiss(all.iter().map(row).collect()),
        sparse_rank: rank_bareiss(sparse.iter().map(row).collect()),
        sparse,
    }
}
