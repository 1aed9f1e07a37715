//! Exact arithmetic in ℚ(α), α = (1 + √5)/2.
//!
//! Elements are stored as `u + vα` with rational coordinates. The product
//! rule follows from `α² = α + 1`. β = 1 − α and √5 = 2α − 1 are derived
//! constants, so every element has exactly one representation and equality
//! is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::integers::{BigInt, Index, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    /// Coefficient of 1.
    pub u: Rational,
    /// Coefficient of α.
    pub v: Rational,
}

impl QuadNum {
    pub fn new(u: Rational, v: Rational) -> Self {
        QuadNum { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        QuadNum::new(
            Rational::from_integer(u.into()),
            Rational::from_integer(v.into()),
        )
    }

    pub fn rational(u: Rational) -> Self {
        QuadNum::new(u, Rational::zero())
    }

    pub fn integer(u: impl Into<BigInt>) -> Self {
        QuadNum::rational(Rational::from_integer(u.into()))
    }

    pub fn zero() -> Self {
        QuadNum::from_ints(0, 0)
    }

    pub fn one() -> Self {
        QuadNum::from_ints(1, 0)
    }

    pub fn alpha() -> Self {
        QuadNum::from_ints(0, 1)
    }

    pub fn beta() -> Self {
        QuadNum::from_ints(1, -1)
    }

    pub fn sqrt5() -> Self {
        QuadNum::from_ints(-1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// The rational value, if the α-part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.u)
    }

    /// The field automorphism α ↦ β: `u + vα ↦ (u + v) − vα`.
    pub fn conj(&self) -> Self {
        QuadNum::new(&self.u + &self.v, -&self.v)
    }

    /// `a · conj(a) = u² + uv − v²`, always rational.
    pub fn norm(&self) -> Rational {
        &self.u * &self.u + &self.u * &self.v - &self.v * &self.v
    }

    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::NotInvertible);
        }
        let c = self.conj();
        Ok(QuadNum::new(c.u / &norm, c.v / norm))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadNum::new(&self.u * k, &self.v * k)
    }

    /// Integer power by binary exponentiation; negative powers go through
    /// [`QuadNum::inv`]. `a^0 = 1` for every `a`, including zero.
    pub fn pow(&self, e: Index) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_unsigned(e.unsigned_abs()))
    }

    fn pow_unsigned(&self, mut e: u64) -> Self {
        let mut acc = QuadNum::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(p, q)` with `self = p + q√5`.
    pub fn root5_parts(&self) -> (Rational, Rational) {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let q = &self.v * &half;
        (&self.u + &q, q)
    }
}

/// α^n for any integer n; its coordinates are `(F_{n-1}, F_n)`.
pub fn alpha_pow(n: Index) -> QuadNum {
    QuadNum::alpha()
        .pow(n)
        .expect("α is a unit and always invertible")
}

/// β^n for any integer n.
pub fn beta_pow(n: Index) -> QuadNum {
    alpha_pow(n).conj()
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl From<Rational> for QuadNum {
    fn from(u: Rational) -> Self {
        QuadNum::rational(u)
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        // (u1 + v1 α)(u2 + v2 α) = (u1u2 + v1v2) + (u1v2 + u2v1 + v1v2) α
        let vv = &self.v * &rhs.v;
        QuadNum::new(
            &self.u * &rhs.u + &vv,
            &self.u * &rhs.v + &rhs.u * &self.v + vv,
        )
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::new(-&self.u, -&self.v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl std::iter::Sum for QuadNum {
    fn sum<I: Iterator<Item = QuadNum>>(iter: I) -> QuadNum {
        iter.fold(QuadNum::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        let r5 = QuadNum::sqrt5();
        assert_eq!(&r5 * &r5, QuadNum::from_ints(5, 0));
        assert_eq!(
            QuadNum::alpha() * QuadNum::beta(),
            QuadNum::from_ints(-1, 0)
        );
        assert_eq!(
            QuadNum::alpha() + QuadNum::beta(),
            QuadNum::from_ints(1, 0)
        );
        assert_eq!(
            QuadNum::alpha() - QuadNum::beta(),
            QuadNum::sqrt5()
        );
        assert_eq!(-QuadNum::alpha(), QuadNum::from_ints(0, -1));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(QuadNum::alpha().conj(), QuadNum::beta());
        assert_eq!(QuadNum::from_ints(5, 0).conj(), QuadNum::from_ints(5, 0));
        assert_eq!(alpha_pow(5).conj(), QuadNum::from_ints(8, -5));
        let b5 = (0..5).fold(QuadNum::one(), |acc, _| acc * QuadNum::beta());
        assert_eq!(b5, QuadNum::from_ints(8, -5));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(QuadNum::alpha().inv().unwrap(), QuadNum::from_ints(-1, 1));
        assert_eq!(
            QuadNum::from_ints(2, 0).inv().unwrap(),
            QuadNum::rational(q(1, 2))
        );
        assert_eq!(QuadNum::zero().inv(), Err(Error::NotInvertible));
        let a = QuadNum::new(q(3, 7), q(-2, 5));
        assert_eq!(&a * &a.inv().unwrap(), QuadNum::one());
    }

    #[test]
    fn alpha_pow_examples() {
        assert_eq!(alpha_pow(5), QuadNum::from_ints(3, 5));
        assert_eq!(alpha_pow(0), QuadNum::one());
        assert_eq!(alpha_pow(-1), QuadNum::from_ints(-1, 1));
        assert_eq!(beta_pow(1), QuadNum::beta());
    }

    #[test]
    fn zero_power_conventions() {
        assert_eq!(QuadNum::zero().pow(0).unwrap(), QuadNum::one());
        assert_eq!(QuadNum::zero().pow(3).unwrap(), QuadNum::zero());
        assert!(QuadNum::zero().pow(-1).is_err());
    }

    #[test]
    fn root5_parts_examples() {
        assert_eq!(QuadNum::alpha().root5_parts(), (q(1, 2), q(1, 2)));
        assert_eq!(QuadNum::from_ints(7, 0).root5_parts(), (q(7, 1), q(0, 1)));
        let two = QuadNum::integer(2);
        assert_eq!((&two * &alpha_pow(4)).root5_parts(), (q(7, 1), q(3, 1)));
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = QuadNum::new(q(3, 2), q(-1, 3));
        let b = QuadNum::new(q(-5, 4), q(7, 1));
        assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        assert_eq!(QuadNum::alpha().norm(), q(-1, 1));
    }
}
