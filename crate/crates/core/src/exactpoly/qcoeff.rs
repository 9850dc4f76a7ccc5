//! Univariate polynomials in the formal parameter `q` with big-integer
//! coefficients. Every coefficient in the crate lives here.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q]`, stored low degree first with trailing zeros stripped.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QCoeff {
    coeffs: Vec<BigInt>,
}

impl QCoeff {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `(1 + q)^k`, used all over the q-fundamental formulas.
    pub fn one_plus_q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for _ in 0..k {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `q`; `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// The constant polynomial obtained by substituting an integer for `q`.
    pub fn specialize(&self, q: &BigInt) -> Self {
        Self::from_coeffs(vec![self.eval_int(q)])
    }

    /// Exact quotient `self / divisor` in `Z[q]`, or `None` when the
    /// division leaves a remainder or a non-integral coefficient.
    pub fn div_exact(&self, divisor: &QCoeff) -> Option<QCoeff> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < dlen {
            return None;
        }
        let lead = &divisor.coeffs[dlen - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl From<i64> for QCoeff {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for QCoeff {
    fn from(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }
}

impl<'a> Add<&'a QCoeff> for &'a QCoeff {
    type Output = QCoeff;
    fn add(self, rhs: &QCoeff) -> QCoeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QCoeff> for QCoeff {
    fn add_assign(&mut self, rhs: &QCoeff) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&QCoeff> for QCoeff {
    fn sub_assign(&mut self, rhs: &QCoeff) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl<'a> Sub<&'a QCoeff> for &'a QCoeff {
    type Output = QCoeff;
    fn sub(self, rhs: &QCoeff) -> QCoeff {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a QCoeff> for &'a QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: &QCoeff) -> QCoeff {
        if self.is_zero() || rhs.is_zero() {
            return QCoeff::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QCoeff::from_coeffs(coeffs)
    }
}

impl Neg for &QCoeff {
    type Output = QCoeff;
    fn neg(self) -> QCoeff {
        QCoeff {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QCoeff {
    type Output = QCoeff;
    fn neg(self) -> QCoeff {
        -&self
    }
}

impl Add for QCoeff {
    type Output = QCoeff;
    fn add(self, rhs: QCoeff) -> QCoeff {
        &self + &rhs
    }
}

impl Sub for QCoeff {
    type Output = QCoeff;
    fn sub(self, rhs: QCoeff) -> QCoeff {
        &self - &rhs
    }
}

impl Mul for QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: QCoeff) -> QCoeff {
        &self * &rhs
    }
}

impl fmt::Display for QCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QCoeff({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schoolbook(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn binomial_square() {
        let a = QCoeff::from_i64s(&[1, 1]);
        assert_eq!(&a * &a, QCoeff::from_i64s(&[1, 2, 1]));
    }

    #[test]
    fn zero_absorbs() {
        let p = QCoeff::from_i64s(&[3, -1, 7]);
        assert!((&p * &QCoeff::zero()).is_zero());
    }

    #[test]
    fn cyclotomic_product() {
        let a = [1, -1];
        let b = [1, 1, 1];
        let expected = schoolbook(&a, &b);
        assert_eq!(expected, vec![1, 0, 0, -1]);
        assert_eq!(
            &QCoeff::from_i64s(&a) * &QCoeff::from_i64s(&b),
            QCoeff::from_i64s(&expected)
        );
    }

    #[test]
    fn trailing_zeros_stripped() {
        let a = QCoeff::from_i64s(&[1, 1]);
        let b = QCoeff::from_i64s(&[0, 1]);
        assert_eq!(&a - &b, QCoeff::one());
        assert_eq!((&a - &a).coeffs().len(), 0);
    }

    #[test]
    fn exact_division() {
        let num = QCoeff::from_i64s(&[1, 0, 0, -1]);
        let den = QCoeff::from_i64s(&[1, -1]);
        assert_eq!(num.div_exact(&den), Some(QCoeff::from_i64s(&[1, 1, 1])));
        assert_eq!(QCoeff::from_i64s(&[1, 1]).div_exact(&QCoeff::constant(2)), None);
        assert_eq!(QCoeff::from_i64s(&[1, 0, 1]).div_exact(&den), None);
    }

    #[test]
    fn no_overflow() {
        let big = QCoeff::constant(i64::MAX);
        let sq = big.pow(4);
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX).pow(4));
    }

    #[test]
    fn one_plus_q_matches_pow() {
        for k in 0..6 {
            assert_eq!(QCoeff::one_plus_q_pow(k), QCoeff::from_i64s(&[1, 1]).pow(k as u32));
        }
    }

    #[test]
    fn display() {
        assert_eq!(QCoeff::from_i64s(&[1, -2, 0, 1]).to_string(), "1 - 2*q + q^3");
        assert_eq!(QCoeff::zero().to_string(), "0");
    }
}
