use std::fmt;
use std::str::FromStr;

use super::Permutation;
use crate::error::{Error, Result};
use crate::tableaux::SkewShape;

/// A partial order on `[n]` with a positive weight per node.
///
/// The order is stored transitively closed; covering pairs are cached since
/// the enriched P-partition conditions only need those.
#[derive(Clone, PartialEq, Eq)]
pub struct LabelledWeightedPoset {
    n: usize,
    // less[i][j] <=> i+1 <_P j+1
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl LabelledWeightedPoset {
    /// Build from generating relations `(i, j)` meaning `i <_P j` (1-based);
    /// the transitive closure is taken. All weights are 1.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![vec![false; n]; n];
        for &(i, j) in relations {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidPoset(format!("relation {i} < {j} outside [{n}]")));
            }
            less[i - 1][j - 1] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::InvalidPoset("relations contain a cycle".into()));
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]) {
                    covers.push((i + 1, j + 1));
                }
            }
        }
        Ok(Self {
            n,
            less,
            covers,
            weights: vec![1; n],
        })
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.n || weights.contains(&0) {
            return Err(Error::InvalidPoset("weights must be positive, one per node".into()));
        }
        self.weights = weights;
        Ok(self)
    }

    /// The chain `π_1 <_π π_2 <_π ... <_π π_n`.
    pub fn chain(pi: &Permutation) -> Self {
        let rels: Vec<(usize, usize)> = pi.values().windows(2).map(|w| (w[0], w[1])).collect();
        Self::new(pi.len(), &rels).expect("a chain is acyclic")
    }

    /// The poset of a skew diagram: cells numbered left to right, bottom row
    /// first; `i <_P j` iff cell `i` lies weakly northwest of cell `j`.
    pub fn skew(shape: &SkewShape) -> Self {
        let labels = skew_cell_labels(shape);
        let mut rels = Vec::new();
        for (idx, &(left, up)) in shape.neighbours().iter().enumerate() {
            for nb in [left, up].into_iter().flatten() {
                rels.push((labels[nb], labels[idx]));
            }
        }
        Self::new(shape.size(), &rels).expect("diagram order is acyclic")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `i <_P j` for 1-based labels.
    pub fn less_than(&self, i: usize, j: usize) -> bool {
        self.less[i - 1][j - 1]
    }

    /// Covering pairs `(i, j)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// All comparable pairs `(i, j)` with `i <_P j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.less[i][j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> usize {
        self.weights.iter().map(|&w| w as usize).sum()
    }

    /// A linear extension: repeatedly take the smallest label whose
    /// predecessors are all placed.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = vec![false; self.n];
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let next = (0..self.n)
                .find(|&j| !placed[j] && (0..self.n).all(|i| !self.less[i][j] || placed[i]))
                .expect("acyclic");
            placed[next] = true;
            out.push(next + 1);
        }
        out
    }
}

/// Label of each cell of `shape`, listed in reading order (top row first).
pub fn skew_cell_labels(shape: &SkewShape) -> Vec<usize> {
    let cells = shape.cells();
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(cells[i].row), cells[i].col));
    let mut labels = vec![0; cells.len()];
    for (k, &i) in order.iter().enumerate() {
        labels[i] = k + 1;
    }
    labels
}

impl FromStr for LabelledWeightedPoset {
    type Err = Error;
    /// Fixture format: first line `n`, then `i < j` covering relations, then
    /// optional `w i k` weight lines.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty poset fixture".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the node count".into()))?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {t:?}")));
        let mut rels = Vec::new();
        let mut weights = vec![1u32; n];
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [i, "<", j] => rels.push((num(i)?, num(j)?)),
                ["w", i, k] => {
                    let i = num(i)?;
                    if i == 0 || i > n {
                        return Err(Error::Parse(format!("weight for unknown node {i}")));
                    }
                    weights[i - 1] = num(k)? as u32;
                }
                _ => return Err(Error::Parse(format!("bad poset line {line:?}"))),
            }
        }
        Self::new(n, &rels)?.with_weights(weights)
    }
}

impl fmt::Display for LabelledWeightedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (i, j) in &self.covers {
            writeln!(f, "{i} < {j}")?;
        }
        for (i, &w) in self.weights.iter().enumerate() {
            if w != 1 {
                writeln!(f, "w {} {w}", i + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LabelledWeightedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?}, weights={:?})", self.n, self.covers, self.weights)
    }
}
