use std::fmt;
use std::str::FromStr;

use super::shape::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::exactpoly::{EvalContext, QCoeff, TruncPoly};
use crate::signed::default_rank;

/// Filling of a skew shape by `1..n`, each once, increasing along rows and
/// down columns. Entries are stored in reading order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardTableau {
    shape: SkewShape,
    entries: Vec<usize>,
}

/// Positive entries, weakly increasing in rows, strictly down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SemistandardTableau {
    shape: SkewShape,
    entries: Vec<usize>,
}

/// Nonzero signed entries under `-1 < 1 < -2 < 2 < ...`, weakly increasing
/// along rows and columns; a negative value appears at most once per row and
/// a positive value at most once per column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MarkedTableau {
    shape: SkewShape,
    entries: Vec<i64>,
}

fn check_len(shape: &SkewShape, len: usize) -> Result<()> {
    if shape.size() != len {
        return Err(Error::InvalidTableau(format!(
            "{len} entries for a shape with {} cells",
            shape.size()
        )));
    }
    Ok(())
}

fn row_col_ok<T: Copy>(
    shape: &SkewShape,
    entries: &[T],
    row: impl Fn(T, T) -> bool,
    col: impl Fn(T, T) -> bool,
) -> bool {
    shape.neighbours().iter().enumerate().all(|(i, &(left, up))| {
        left.is_none_or(|l| row(entries[l], entries[i]))
            && up.is_none_or(|u| col(entries[u], entries[i]))
    })
}

fn standard_ok(a: usize, b: usize) -> bool {
    a < b
}

fn marked_row_ok(a: i64, b: i64) -> bool {
    default_rank(a) < default_rank(b) || (a == b && b > 0)
}

fn marked_col_ok(a: i64, b: i64) -> bool {
    default_rank(a) < default_rank(b) || (a == b && b < 0)
}

impl StandardTableau {
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        check_len(&shape, entries.len())?;
        let mut seen = vec![false; entries.len()];
        for &e in &entries {
            if e == 0 || e > entries.len() || std::mem::replace(&mut seen[e - 1], true) {
                return Err(Error::InvalidTableau("entries are not 1..n".into()));
            }
        }
        if !row_col_ok(&shape, &entries, standard_ok, standard_ok) {
            return Err(Error::InvalidTableau("rows or columns not increasing".into()));
        }
        Ok(Self { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries in reading order.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `{i : i lies in a strictly higher row than i+1}`, ascending.
    pub fn descent_set(&self) -> Vec<usize> {
        let n = self.entries.len();
        let cells = self.shape.cells();
        let mut row_of = vec![0; n + 1];
        for (cell, &e) in cells.iter().zip(&self.entries) {
            row_of[e] = cell.row;
        }
        (1..n).filter(|&i| row_of[i] < row_of[i + 1]).collect()
    }
}

impl SemistandardTableau {
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        check_len(&shape, entries.len())?;
        if entries.contains(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if !row_col_ok(&shape, &entries, |a, b| a <= b, |a, b| a < b) {
            return Err(Error::InvalidTableau("not semistandard".into()));
        }
        Ok(Self { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `x^T`, the product of `x_e` over entries.
    pub fn weight_monomial(&self, ctx: EvalContext) -> Result<TruncPoly> {
        let mut exps = vec![0u32; ctx.m];
        for &e in &self.entries {
            if e > ctx.m {
                return Err(Error::EntryOutOfRange { entry: e as i64, m: ctx.m });
            }
            exps[e - 1] += 1;
        }
        TruncPoly::monomial(ctx, exps, QCoeff::one())
    }

    /// Relabel by `1..n`: smaller values first, equal values left to right.
    pub fn standardize(&self) -> StandardTableau {
        let cells = self.shape.cells();
        relabel(&self.shape, |i| (self.entries[i], cells[i].col))
    }
}

impl MarkedTableau {
    pub fn new(shape: SkewShape, entries: Vec<i64>) -> Result<Self> {
        check_len(&shape, entries.len())?;
        if entries.contains(&0) {
            return Err(Error::InvalidTableau("entries must be nonzero".into()));
        }
        if !row_col_ok(&shape, &entries, marked_row_ok, marked_col_ok) {
            return Err(Error::InvalidTableau("not a marked semistandard tableau".into()));
        }
        Ok(Self { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of negative entries.
    pub fn neg(&self) -> usize {
        self.entries.iter().filter(|&&e| e < 0).count()
    }

    /// `q^neg(T) * prod x_|e|`.
    pub fn weight_monomial(&self, ctx: EvalContext) -> Result<TruncPoly> {
        let mut exps = vec![0u32; ctx.m];
        for &e in &self.entries {
            let a = e.unsigned_abs() as usize;
            if a > ctx.m {
                return Err(Error::EntryOutOfRange { entry: e, m: ctx.m });
            }
            exps[a - 1] += 1;
        }
        TruncPoly::monomial(ctx, exps, QCoeff::q_pow(self.neg()))
    }

    /// Relabel by `1..n` keeping the signed order of distinct entries;
    /// equal negative entries are numbered top to bottom, equal positive
    /// entries left to right.
    pub fn standardize(&self) -> StandardTableau {
        let cells = self.shape.cells();
        relabel(&self.shape, |i| {
            let e = self.entries[i];
            let tiebreak = if e < 0 { cells[i].row } else { cells[i].col };
            (default_rank(e), tiebreak)
        })
    }
}

fn relabel<K: Ord>(shape: &SkewShape, key: impl Fn(usize) -> K) -> StandardTableau {
    let n = shape.size();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| key(i));
    let mut entries = vec![0; n];
    for (label, &i) in idx.iter().enumerate() {
        entries[i] = label + 1;
    }
    StandardTableau {
        shape: shape.clone(),
        entries,
    }
}

/// All standard fillings of `shape`, in lexicographic order of the
/// reading-order entry vector.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<StandardTableau> {
    let n = shape.size();
    let nb = shape.neighbours();
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    let mut used = vec![false; n + 1];
    fn rec(
        i: usize,
        nb: &[(Option<usize>, Option<usize>)],
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        shape: &SkewShape,
        out: &mut Vec<StandardTableau>,
    ) {
        if i == cur.len() {
            out.push(StandardTableau {
                shape: shape.clone(),
                entries: cur.clone(),
            });
            return;
        }
        let (left, up) = nb[i];
        let lo = left.map_or(0, |l| cur[l]).max(up.map_or(0, |u| cur[u])) + 1;
        for v in lo..=cur.len() {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur[i] = v;
            rec(i + 1, nb, cur, used, shape, out);
            used[v] = false;
        }
    }
    rec(0, &nb, &mut cur, &mut used, shape, &mut out);
    out
}

/// All semistandard fillings with entries in `1..=max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<SemistandardTableau> {
    let n = shape.size();
    let nb = shape.neighbours();
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(
        i: usize,
        max: usize,
        nb: &[(Option<usize>, Option<usize>)],
        cur: &mut Vec<usize>,
        shape: &SkewShape,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if i == cur.len() {
            out.push(SemistandardTableau {
                shape: shape.clone(),
                entries: cur.clone(),
            });
            return;
        }
        let (left, up) = nb[i];
        let lo = left.map_or(1, |l| cur[l]).max(up.map_or(1, |u| cur[u] + 1));
        for v in lo..=max {
            cur[i] = v;
            rec(i + 1, max, nb, cur, shape, out);
        }
    }
    rec(0, max_entry, &nb, &mut cur, shape, &mut out);
    out
}

/// All marked fillings with `|entry| <= max_abs`.
pub fn enumerate_marked(shape: &SkewShape, max_abs: usize) -> Vec<MarkedTableau> {
    let n = shape.size();
    let nb = shape.neighbours();
    let letters: Vec<i64> = (1..=max_abs as i64).flat_map(|a| [-a, a]).collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(
        i: usize,
        letters: &[i64],
        nb: &[(Option<usize>, Option<usize>)],
        cur: &mut Vec<i64>,
        shape: &SkewShape,
        out: &mut Vec<MarkedTableau>,
    ) {
        if i == cur.len() {
            out.push(MarkedTableau {
                shape: shape.clone(),
                entries: cur.clone(),
            });
            return;
        }
        let (left, up) = nb[i];
        for &v in letters {
            if left.is_some_and(|l| !marked_row_ok(cur[l], v)) {
                continue;
            }
            if up.is_some_and(|u| !marked_col_ok(cur[u], v)) {
                continue;
            }
            cur[i] = v;
            rec(i + 1, letters, nb, cur, shape, out);
        }
    }
    rec(0, &letters, &nb, &mut cur, shape, &mut out);
    out
}

/// Rows of text, `.` for cells of the inner shape.
fn parse_grid(s: &str) -> Result<(SkewShape, Vec<i64>)> {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut entries = Vec::new();
    for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let mut dots = 0;
        let mut len = 0;
        for tok in line.split_whitespace() {
            if tok == "." {
                if len > dots {
                    return Err(Error::Parse(format!("'.' after an entry in row {line:?}")));
                }
                dots += 1;
            } else {
                entries.push(
                    tok.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?,
                );
            }
            len += 1;
        }
        outer.push(len);
        inner.push(dots);
    }
    while inner.last() == Some(&0) {
        inner.pop();
    }
    let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
    Ok((shape, entries))
}

fn positive(entries: Vec<i64>) -> Result<Vec<usize>> {
    entries
        .into_iter()
        .map(|e| usize::try_from(e).map_err(|_| Error::InvalidTableau(format!("negative entry {e}"))))
        .collect()
}

fn render<T: fmt::Display>(f: &mut fmt::Formatter<'_>, shape: &SkewShape, entries: &[T]) -> fmt::Result {
    let mut k = 0;
    for r in 0..shape.rows() {
        let mut toks = vec![".".to_string(); shape.inner().part(r)];
        for _ in shape.inner().part(r)..shape.outer().part(r) {
            toks.push(entries[k].to_string());
            k += 1;
        }
        writeln!(f, "{}", toks.join(" "))?;
    }
    Ok(())
}

impl FromStr for StandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (shape, e) = parse_grid(s)?;
        Self::new(shape, positive(e)?)
    }
}

impl FromStr for SemistandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (shape, e) = parse_grid(s)?;
        Self::new(shape, positive(e)?)
    }
}

impl FromStr for MarkedTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (shape, e) = parse_grid(s)?;
        Self::new(shape, e)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.shape, &self.entries)
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.shape, &self.entries)
    }
}

impl fmt::Display for MarkedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &self.shape, &self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    const T1: &str = ". . 3 3 3 12\n. 1 5 10\n1 2\n6\n12\n";
    const T2: &str = ". . -4 4 4 18\n. -3 -9 9\n2 -3\n-9\n18\n";
    const T3: &str = ". . 4 5 6 11\n. 2 7 9\n1 3\n8\n10\n";

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn figure_tableaux_parse() {
        let t1: SemistandardTableau = T1.parse().unwrap();
        let t2: MarkedTableau = T2.parse().unwrap();
        let t3: StandardTableau = T3.parse().unwrap();
        for s in [t1.shape(), t2.shape(), t3.shape()] {
            assert_eq!(s, &shape("6,4,2,1,1/2,1"));
        }
        assert_eq!(t3.to_string(), T3);
        assert_eq!(t2.to_string(), T2);
    }

    #[test]
    fn figure_statistics() {
        let t2: MarkedTableau = T2.parse().unwrap();
        let t3: StandardTableau = T3.parse().unwrap();
        assert_eq!(t3.descent_set(), vec![2, 6, 7, 9]);
        assert_eq!(t2.neg(), 5);
        assert!(enumerate_syt(&shape("6,4,2,1,1/2,1")).contains(&t3));
    }

    #[test]
    fn figure_standardization() {
        let t1: SemistandardTableau = T1.parse().unwrap();
        let t2: MarkedTableau = T2.parse().unwrap();
        let t3: StandardTableau = T3.parse().unwrap();
        assert_eq!(t1.standardize(), t3);
        assert_eq!(t2.standardize(), t3);
        // a standard tableau read as a semistandard one is its own standardization
        let as_ssyt = SemistandardTableau::new(t3.shape().clone(), t3.entries().to_vec()).unwrap();
        assert_eq!(as_ssyt.standardize(), t3);
        let as_marked =
            MarkedTableau::new(t3.shape().clone(), t3.entries().iter().map(|&e| e as i64).collect()).unwrap();
        assert_eq!(as_marked.standardize(), t3);
    }

    #[test]
    fn invalid_tableaux_rejected() {
        assert!(". 1\n2 1\n".parse::<StandardTableau>().is_err());
        assert!("-1 1\n".parse::<MarkedTableau>().is_ok());
        assert!("1 -1\n".parse::<MarkedTableau>().is_err());
        assert!("-1 -1\n".parse::<MarkedTableau>().is_err());
        assert!("1\n1\n".parse::<MarkedTableau>().is_err());
        assert!("-1\n-1\n".parse::<MarkedTableau>().is_ok());
        assert!("1\n1\n".parse::<SemistandardTableau>().is_err());
        assert!("1 . 2\n".parse::<SemistandardTableau>().is_err());
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&shape("2,1")).len(), 2);
        for n in 1..6 {
            assert_eq!(enumerate_syt(&SkewShape::straight(Partition::new(vec![n]).unwrap())).len(), 1);
        }
        assert_eq!(enumerate_syt(&shape("3,2,1")).len(), 16);
        assert_eq!(enumerate_syt(&shape("2,1/1")).len(), 2);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn syt_matches_brute_force() {
        for n in 1..=5 {
            for lam in Partition::all_of(n) {
                let s = SkewShape::straight(lam);
                let brute = permutations(n)
                    .into_iter()
                    .filter(|p| StandardTableau::new(s.clone(), p.clone()).is_ok())
                    .count();
                assert_eq!(enumerate_syt(&s).len(), brute, "{s}");
            }
        }
    }

    #[test]
    fn ssyt_small_cases() {
        assert_eq!(enumerate_ssyt(&shape("1"), 3).len(), 3);
        let col = enumerate_ssyt(&shape("1,1"), 2);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].entries(), &[1, 2]);
        let row: Vec<Vec<usize>> = enumerate_ssyt(&shape("2"), 2).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(row, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn marked_small_cases() {
        let single: Vec<Vec<i64>> = enumerate_marked(&shape("1"), 1).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(single, vec![vec![-1], vec![1]]);
        let row: Vec<Vec<i64>> = enumerate_marked(&shape("2"), 1).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(row, vec![vec![-1, 1], vec![1, 1]]);
        let col: Vec<Vec<i64>> = enumerate_marked(&shape("1,1"), 1).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(col, vec![vec![-1, -1], vec![-1, 1]]);
    }

    #[test]
    fn marked_matches_brute_force() {
        for s in ["2,1", "2,2/1", "3,1/1", "2,1,1"] {
            let s = shape(s);
            let n = s.size();
            let letters: Vec<i64> = vec![-2, -1, 1, 2];
            let mut brute = 0;
            for code in 0..letters.len().pow(n as u32) {
                let mut c = code;
                let e: Vec<i64> = (0..n)
                    .map(|_| {
                        let v = letters[c % 4];
                        c /= 4;
                        v
                    })
                    .collect();
                if MarkedTableau::new(s.clone(), e).is_ok() {
                    brute += 1;
                }
            }
            assert_eq!(enumerate_marked(&s, 2).len(), brute, "{s}");
        }
    }

    #[test]
    fn weight_monomials() {
        let ctx = EvalContext::new(2, 2);
        let t: MarkedTableau = "-1 1\n".parse().unwrap();
        let w = t.weight_monomial(ctx).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.coeff(&[2, 0]), QCoeff::q_pow(1));

        let s: SemistandardTableau = "1 2\n".parse().unwrap();
        assert_eq!(s.weight_monomial(ctx).unwrap().coeff(&[1, 1]), QCoeff::one());

        let b: MarkedTableau = "-2\n".parse().unwrap();
        assert_eq!(b.weight_monomial(ctx).unwrap().coeff(&[0, 1]), QCoeff::q_pow(1));
        assert!(b.weight_monomial(EvalContext::new(1, 2)).is_err());
    }

    #[test]
    fn standardization_partitions_marked_fillings() {
        for s in super::super::enumerate_skew_shapes(4) {
            let all = enumerate_marked(&s, 2);
            let syt = enumerate_syt(&s);
            let mut fibres: BTreeMap<StandardTableau, usize> = BTreeMap::new();
            for t in &all {
                let std = t.standardize();
                assert!(syt.contains(&std), "{s}: {t}");
                *fibres.entry(std).or_default() += 1;
            }
            assert_eq!(fibres.values().sum::<usize>(), all.len());
        }
    }

    #[test]
    fn descent_set_extremes() {
        let row: StandardTableau = "1 2 3 4\n".parse().unwrap();
        assert!(row.descent_set().is_empty());
        let col: StandardTableau = "1\n2\n3\n4\n".parse().unwrap();
        assert_eq!(col.descent_set(), vec![1, 2, 3]);
    }
}
