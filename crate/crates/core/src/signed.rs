//! Signed letters `±1, ±2, ...` and total orders on them.

use std::cmp::Ordering;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Position of `v` in the default order `-1 < 1 < -2 < 2 < ...`.
pub fn default_rank(v: i64) -> usize {
    debug_assert!(v != 0);
    2 * (v.unsigned_abs() as usize - 1) + usize::from(v > 0)
}

/// Comparison in the default order `-1 < 1 < -2 < 2 < ...`.
pub fn signed_cmp(a: i64, b: i64) -> Ordering {
    default_rank(a).cmp(&default_rank(b))
}

/// A total order on `{±1, ..., ±m}` given by an explicit rank table.
#[derive(Clone, PartialEq, Eq)]
pub struct TotalSignedOrder {
    name: String,
    sequence: Vec<i64>,
    // indexed by default_rank
    rank: Vec<usize>,
}

impl TotalSignedOrder {
    /// Build from the letters listed smallest first.
    pub fn from_sequence(name: impl Into<String>, sequence: Vec<i64>) -> Result<Self> {
        let m = sequence.len() / 2;
        if sequence.len() != 2 * m {
            return Err(Error::Parse("order must list an even number of letters".into()));
        }
        let mut rank = vec![usize::MAX; 2 * m];
        for (pos, &v) in sequence.iter().enumerate() {
            if v == 0 || v.unsigned_abs() as usize > m {
                return Err(Error::LetterOutOfRange(v));
            }
            let slot = default_rank(v);
            if rank[slot] != usize::MAX {
                return Err(Error::RepeatedEntry(v));
            }
            rank[slot] = pos;
        }
        Ok(Self {
            name: name.into(),
            sequence,
            rank,
        })
    }

    /// `-1 < 1 < -2 < 2 < ... < -m < m`.
    pub fn default_order(m: usize) -> Self {
        let seq = (1..=m as i64).flat_map(|a| [-a, a]).collect();
        Self::from_sequence("default", seq).expect("valid")
    }

    /// `1 < -1 < 2 < -2 < ...`: the default with signs swapped inside each block.
    pub fn positive_first(m: usize) -> Self {
        let seq = (1..=m as i64).flat_map(|a| [a, -a]).collect();
        Self::from_sequence("positive-first", seq).expect("valid")
    }

    /// `-m < ... < -1 < 1 < ... < m`.
    pub fn negatives_block(m: usize) -> Self {
        let seq = (1..=m as i64).rev().map(|a| -a).chain(1..=m as i64).collect();
        Self::from_sequence("negatives-block", seq).expect("valid")
    }

    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        let mut seq: Vec<i64> = (1..=m as i64).flat_map(|a| [-a, a]).collect();
        seq.shuffle(rng);
        Self::from_sequence("random", seq).expect("valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> usize {
        self.sequence.len() / 2
    }

    /// Letters smallest first.
    pub fn sequence(&self) -> &[i64] {
        &self.sequence
    }

    pub fn rank(&self, v: i64) -> Option<usize> {
        if v == 0 || v.unsigned_abs() as usize > self.m() {
            return None;
        }
        Some(self.rank[default_rank(v)])
    }

    /// Panics if either letter is outside `{±1..±m}`.
    pub fn cmp(&self, a: i64, b: i64) -> Ordering {
        let ra = self.rank(a).expect("letter outside order");
        let rb = self.rank(b).expect("letter outside order");
        ra.cmp(&rb)
    }
}

impl fmt::Debug for TotalSignedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.name, self.sequence)
    }
}
