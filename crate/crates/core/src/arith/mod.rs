//! Exact scalars (`Q` and `Q(zeta_r)`), dense matrices and sparse echelon forms.

mod cyclotomic;
mod matrix;
mod sparse;

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use matrix::Matrix;
pub use sparse::SparseEchelon;

pub type Rational = BigRational;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// `a (a-1) ... (a-b+1)`, taken literally for negative `a`.
pub fn falling_factorial(a: i64, b: usize) -> BigInt {
    (0..b as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(a - i))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = falling_factorial(n, k as usize);
    for i in 1..=k {
        acc /= BigInt::from(i);
    }
    acc
}

/// Field operations needed by the matrix routines.
///
/// Zero and one come from an existing value because a cyclotomic element needs
/// its field to build them.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn try_inverse(&self) -> Option<Self>;

    fn is_one_value(&self) -> bool {
        *self == self.one_like()
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Rational as `a` or `a/b`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        (!b.is_zero()).then(|| Rational::new(a, b))
    } else {
        s.parse::<BigInt>().ok().map(Rational::from_integer)
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_literal() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(1, 2), BigInt::from(0));
        assert_eq!(falling_factorial(-1, 2), BigInt::from(2));
        assert_eq!(falling_factorial(3, 0), BigInt::from(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(1, 2), BigInt::from(0));
        assert_eq!(binomial(0, 2), BigInt::from(0));
    }

    #[test]
    fn rational_text() {
        assert_eq!(fmt_rational(&frac(6, -4)), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(frac(-3, 2)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
