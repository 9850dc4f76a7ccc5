use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition: positive parts, weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, largest first part first.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` (including the empty one).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=outer[i].min(cap) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A cell of a diagram; rows and columns are 1-based, row 1 on top.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// The skew diagram `λ/μ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells `|λ| - |μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows `ℓ(λ)`, which is also the determinant size.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }

    /// Cells in reading order: top row first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.rows() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                out.push(Cell { row: r + 1, col: c });
            }
        }
        out
    }

    /// For each cell in reading order, the reading-order indices of its
    /// left and upper neighbours inside the shape.
    pub(crate) fn neighbours(&self) -> Vec<(Option<usize>, Option<usize>)> {
        let cells = self.cells();
        let index = |row: usize, col: usize| cells.iter().position(|c| c.row == row && c.col == col);
        cells
            .iter()
            .map(|c| {
                let left = if self.contains_cell(c.row, c.col - 1) {
                    index(c.row, c.col - 1)
                } else {
                    None
                };
                let up = if c.row > 1 && self.contains_cell(c.row - 1, c.col) {
                    index(c.row - 1, c.col)
                } else {
                    None
                };
                (left, up)
            })
            .collect()
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    /// `"6,4,2,1,1/2,1"`; the inner part may be empty (`"2/"`) or omitted (`"2"`).
    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o.parse()?, i.parse()?),
            None => (s.parse()?, Partition::empty()),
        };
        Self::new(outer, inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

/// Every skew shape `λ/μ` with `1 <= |λ| <= max_outer_size` and at least one
/// cell, ordered by `|λ|`, then `λ`, then `μ`.
pub fn enumerate_skew_shapes(max_outer_size: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=max_outer_size {
        for outer in Partition::all_of(n) {
            for inner in outer.subpartitions() {
                if inner.size() < outer.size() {
                    out.push(SkewShape {
                        outer: outer.clone(),
                        inner,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("3,1,1".parse::<Partition>().unwrap().size(), 5);
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn shapes_up_to_two() {
        // brute force: every pair of partitions of size <= 2 with containment
        let all: Vec<Partition> = (0..=2).flat_map(Partition::all_of).collect();
        let mut expected = Vec::new();
        for o in &all {
            for i in &all {
                if o.size() >= 1 && o.contains(i) && o.size() > i.size() {
                    expected.push(SkewShape::new(o.clone(), i.clone()).unwrap());
                }
            }
        }
        let mut got = enumerate_skew_shapes(2);
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        for s in ["1/", "2/", "1,1/", "2/1", "1,1/1"] {
            assert!(got.contains(&shape(s)), "{s}");
        }
        assert_eq!(got.len(), 5);
    }

    #[test]
    fn skew_with_empty_row() {
        let s = shape("2,1/2");
        assert_eq!(s.size(), 1);
        assert_eq!(s.cells(), vec![Cell { row: 2, col: 1 }]);
    }

    #[test]
    fn shape_parsing() {
        assert_eq!(shape("6,4,2,1,1/2,1").to_string(), "6,4,2,1,1/2,1");
        assert_eq!(shape("2/"), shape("2"));
        assert!("1/2".parse::<SkewShape>().is_err());
        assert!("1,1/2".parse::<SkewShape>().is_err());
    }

    #[test]
    fn neighbours_respect_inner_shape() {
        let s = shape("2,2/1");
        // cells: (1,2) (2,1) (2,2)
        assert_eq!(s.neighbours(), vec![(None, None), (None, None), (Some(1), Some(0))]);
    }
}
