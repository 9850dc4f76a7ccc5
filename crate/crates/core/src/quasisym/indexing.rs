use std::fmt;

use crate::error::{Error, Result};
use crate::posets::Permutation;

/// A pair `(n, I)` with `I ⊆ [n-1]`, indexing `L_{n,I}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubsetDescent {
    n: usize,
    set: Vec<usize>,
}

impl SubsetDescent {
    /// The set is sorted and deduplicated.
    pub fn new(n: usize, mut set: Vec<usize>) -> Result<Self> {
        set.sort_unstable();
        set.dedup();
        if set.iter().any(|&j| j == 0 || j >= n) {
            return Err(Error::InvalidDescentSet { n, set });
        }
        Ok(Self { n, set })
    }

    /// Parse `"1,3"` (or `"{1,3}"`, `""`) as a subset of `[n-1]`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let set = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad set element {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, set)
    }

    pub fn from_permutation(pi: &Permutation) -> Self {
        Self {
            n: pi.len(),
            set: pi.descents(),
        }
    }

    /// All `2^{n-1}` subsets, ordered by the bitmask `Σ_{j∈I} 2^{j-1}`.
    pub fn all(n: usize) -> Vec<Self> {
        let bits = n.saturating_sub(1);
        (0u64..1 << bits)
            .map(|mask| Self {
                n,
                set: (1..=bits).filter(|j| mask >> (j - 1) & 1 == 1).collect(),
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &[usize] {
        &self.set
    }

    pub fn contains(&self, j: usize) -> bool {
        self.set.binary_search(&j).is_ok()
    }

    /// `{j ∈ I : j-1 ∉ I, 2 <= j <= n-1}`: the peak set shared by every
    /// permutation whose descent set is `I`.
    pub fn peak_set(&self) -> Vec<usize> {
        self.set
            .iter()
            .copied()
            .filter(|&j| j >= 2 && !self.contains(j - 1))
            .collect()
    }

    /// `I ∪ {0}` has no two consecutive elements.
    pub fn is_sparse(&self) -> bool {
        !self.contains(1) && self.set.windows(2).all(|w| w[1] > w[0] + 1)
    }

    /// Every `J ⊆ I`.
    pub fn subsets(&self) -> Vec<Self> {
        let k = self.set.len();
        (0u64..1 << k)
            .map(|mask| Self {
                n: self.n,
                set: (0..k).filter(|b| mask >> b & 1 == 1).map(|b| self.set[b]).collect(),
            })
            .collect()
    }

    pub fn to_composition(&self) -> Composition {
        if self.n == 0 {
            return Composition(Vec::new());
        }
        let mut cuts = vec![0];
        cuts.extend(&self.set);
        cuts.push(self.n);
        Composition(cuts.windows(2).map(|w| w[1] - w[0]).collect())
    }
}

impl fmt::Display for SubsetDescent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.set.iter().map(|j| j.to_string()).collect();
        write!(f, "{}:{{{}}}", self.n, s.join(","))
    }
}

/// A composition of `n`: positive parts in order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums, dropping the last.
    pub fn to_subset(&self) -> SubsetDescent {
        let mut acc = 0;
        let mut set = Vec::with_capacity(self.0.len());
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            set.push(acc);
        }
        SubsetDescent { n: self.size(), set }
    }

    pub fn all(n: usize) -> Vec<Self> {
        SubsetDescent::all(n).iter().map(SubsetDescent::to_composition).collect()
    }
}
