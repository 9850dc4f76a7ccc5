use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableaux::{Partition, SkewShape, StandardTableau};

/// A permutation in one-line notation, values `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(values));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Self(cur.clone())];
        // next_permutation
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Self(cur.clone()));
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Self(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    /// `{i : π(i) > π(i+1)}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `{i : π(i-1) < π(i) > π(i+1)}`, `2 <= i <= n-1`.
    pub fn peaks(&self) -> Vec<usize> {
        let v = &self.0;
        (2..v.len()).filter(|&i| v[i - 2] < v[i - 1] && v[i - 1] > v[i]).collect()
    }

    /// The permutation order-isomorphic to a word of distinct integers.
    pub fn standardize_word(word: &[i64]) -> Result<Self> {
        let mut idx: Vec<usize> = (0..word.len()).collect();
        idx.sort_by_key(|&i| word[i]);
        for w in idx.windows(2) {
            if word[w[0]] == word[w[1]] {
                return Err(Error::RepeatedEntry(word[w[0]]));
            }
        }
        let mut out = vec![0; word.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank + 1;
        }
        Ok(Self(out))
    }

    /// Every interleaving of `self` with `other` shifted up by `self.len()`.
    pub fn shuffle_shifted(&self, other: &Permutation) -> Vec<Permutation> {
        let n = self.len();
        let shifted: Vec<usize> = other.0.iter().map(|&v| v + n).collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n + other.len());
        fn rec(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if a.is_empty() && b.is_empty() {
                out.push(Permutation(cur.clone()));
                return;
            }
            if let Some((&h, t)) = a.split_first() {
                cur.push(h);
                rec(t, b, cur, out);
                cur.pop();
            }
            if let Some((&h, t)) = b.split_first() {
                cur.push(h);
                rec(a, t, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, &shifted, &mut cur, &mut out);
        out
    }

    /// Robinson–Schensted row insertion: `(P, Q)` = (insertion, recording).
    pub fn rsk(&self) -> (StandardTableau, StandardTableau) {
        let mut p_rows: Vec<Vec<usize>> = Vec::new();
        let mut q_rows: Vec<Vec<usize>> = Vec::new();
        for (step, &x) in self.0.iter().enumerate() {
            let mut bumped = x;
            let mut r = 0;
            loop {
                if r == p_rows.len() {
                    p_rows.push(vec![bumped]);
                    q_rows.push(vec![step + 1]);
                    break;
                }
                let row = &mut p_rows[r];
                match row.iter().position(|&y| y > bumped) {
                    Some(pos) => {
                        bumped = std::mem::replace(&mut row[pos], bumped);
                        r += 1;
                    }
                    None => {
                        row.push(bumped);
                        q_rows[r].push(step + 1);
                        break;
                    }
                }
            }
        }
        let shape = SkewShape::straight(
            Partition::new(p_rows.iter().map(Vec::len).collect()).expect("insertion yields a partition"),
        );
        let p = StandardTableau::new(shape.clone(), p_rows.concat()).expect("standard");
        let q = StandardTableau::new(shape, q_rows.concat()).expect("standard");
        (p, q)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    /// One-line notation separated by spaces or commas: `"2 3 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descents_and_peaks() {
        assert_eq!(p("1 3 2").descents(), vec![2]);
        assert!(Permutation::identity(4).descents().is_empty());
        assert_eq!(p("3 2 1").descents(), vec![1, 2]);
        assert_eq!(p("1 3 2").peaks(), vec![2]);
        assert!(p("2 1").peaks().is_empty());
        assert_eq!(p("2 1 4 3").peaks(), vec![3]);
    }

    #[test]
    fn standardization() {
        assert_eq!(Permutation::standardize_word(&[5, 2, 9]).unwrap(), p("2 1 3"));
        assert!(Permutation::standardize_word(&[]).unwrap().is_empty());
        assert_eq!(Permutation::standardize_word(&[4, 3]).unwrap(), p("2 1"));
        assert!(matches!(
            Permutation::standardize_word(&[1, 7, 1]),
            Err(Error::RepeatedEntry(1))
        ));
    }

    #[test]
    fn shuffles() {
        let one = p("1");
        let s: Vec<Permutation> = one.shuffle_shifted(&one);
        assert_eq!(s, vec![p("1 2"), p("2 1")]);
        let empty = Permutation::identity(0);
        assert_eq!(empty.shuffle_shifted(&p("2 1")), vec![p("2 1")]);
        let s: BTreeSet<Permutation> = p("1 2").shuffle_shifted(&one).into_iter().collect();
        assert_eq!(s, [p("1 2 3"), p("1 3 2"), p("3 1 2")].into_iter().collect());
    }

    #[test]
    fn shuffle_sizes_are_binomial() {
        for n in 0..=3 {
            for m in 0..=3 {
                for a in Permutation::all(n) {
                    for b in Permutation::all(m) {
                        let s = a.shuffle_shifted(&b);
                        let distinct: BTreeSet<_> = s.iter().cloned().collect();
                        let binom = (1..=m).fold(1, |acc, k| acc * (n + k) / k);
                        assert_eq!(s.len(), binom);
                        assert_eq!(distinct.len(), binom);
                    }
                }
            }
        }
    }

    #[test]
    fn all_permutations() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(3)[1], p("1 3 2"));
    }

    #[test]
    fn rsk_small() {
        let (pt, qt) = p("2 1").rsk();
        assert_eq!(pt.to_string(), "1\n2\n");
        assert_eq!(qt, pt);
        let (pt, qt) = Permutation::identity(4).rsk();
        assert_eq!(pt.to_string(), "1 2 3 4\n");
        assert_eq!(qt, pt);
    }

    #[test]
    fn rsk_bijective_and_descent_preserving() {
        for n in 1..=5 {
            let mut pairs = BTreeSet::new();
            for pi in Permutation::all(n) {
                let (pt, qt) = pi.rsk();
                assert_eq!(pi.descents(), qt.descent_set(), "{pi}");
                assert_eq!(pi.inverse().descents(), pt.descent_set(), "{pi}");
                pairs.insert((pt, qt));
            }
            assert_eq!(pairs.len(), (1..=n).product::<usize>());
        }
        let total: usize = Partition::all_of(4)
            .into_iter()
            .map(|l| crate::tableaux::enumerate_syt(&SkewShape::straight(l)).len().pow(2))
            .sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn composition_and_inverse() {
        let a = p("2 3 1");
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
        assert_eq!(a.compose(&p("2 1 3")), p("3 2 1"));
    }

    #[test]
    fn parse_rejects_non_permutations() {
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("x".parse::<Permutation>().is_err());
        assert_eq!(p("2,3,1"), p("2 3 1"));
    }
}
