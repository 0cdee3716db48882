//! Gaussian integers: the scalar ring Z[i] with arbitrary-precision parts.
//!
//! Every determinant in this crate is computed exactly over this ring;
//! no floating point appears anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// An element of Z[i].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// |z|^2 = re^2 + im^2, always a nonnegative rational integer.
    pub fn norm_sqr(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// i^k for any signed exponent.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianInt::one(),
            1 => GaussianInt::i(),
            2 => -GaussianInt::one(),
            _ => -GaussianInt::i(),
        }
    }

    /// True for 1, i, -1, -i.
    pub fn is_unit(&self) -> bool {
        self.norm_sqr() == BigInt::from(1)
    }

    /// Exact quotient self / d in Z[i].
    ///
    /// Panics if `d` is zero or does not divide `self`; the Bareiss
    /// elimination only ever requests divisions that are exact.
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero in Z[i]");
        let num = self * &d.conjugate();
        let den = d.norm_sqr();
        let (qr, rr) = (&num.re / &den, &num.re % &den);
        let (qi, ri) = (&num.im / &den, &num.im % &den);
        assert!(
            rr.is_zero() && ri.is_zero(),
            "inexact division in Z[i]: {} / {}",
            self,
            d
        );
        GaussianInt { re: qr, im: qi }
    }

    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.re.to_i64()?, self.im.to_i64()?))
    }
}

impl From<i64> for GaussianInt {
    fn from(v: i64) -> Self {
        GaussianInt::new(v, 0)
    }
}

impl From<(i64, i64)> for GaussianInt {
    fn from((re, im): (i64, i64)) -> Self {
        GaussianInt::new(re, im)
    }
}

impl<'a, 'b> Add<&'b GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &'b GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a, 'b> Sub<&'b GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &'b GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a, 'b> Mul<&'b GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &'b GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        &self + &rhs
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        &self - &rhs
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        &self * &rhs
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = if self.im == BigInt::from(1) {
            "i".to_string()
        } else if self.im == BigInt::from(-1) {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{}", im_part)
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, im_part)
        } else {
            write!(f, "{}+{}", self.re, im_part)
        }
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_products() {
        let i = GaussianInt::i();
        let neg_i = -GaussianInt::i();
        assert_eq!(&i * &neg_i, GaussianInt::one());
        assert_eq!(neg_i.conjugate(), i);
    }

    #[test]
    fn norm_of_one_plus_i() {
        assert_eq!(GaussianInt::new(1, 1).norm_sqr(), BigInt::from(2));
    }

    #[test]
    fn i_pow_cycles() {
        assert_eq!(GaussianInt::i_pow(0), GaussianInt::one());
        assert_eq!(GaussianInt::i_pow(1), GaussianInt::i());
        assert_eq!(GaussianInt::i_pow(2), -GaussianInt::one());
        assert_eq!(GaussianInt::i_pow(3), -GaussianInt::i());
        assert_eq!(GaussianInt::i_pow(-1), -GaussianInt::i());
        assert_eq!(GaussianInt::i_pow(-3), GaussianInt::i());
    }

    #[test]
    fn exact_division() {
        let a = GaussianInt::new(5, 5);
        let b = GaussianInt::new(1, 1);
        assert_eq!(a.exact_div(&b), GaussianInt::new(5, 0));
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn inexact_division_panics() {
        let a = GaussianInt::new(1, 0);
        let b = GaussianInt::new(1, 1);
        let _ = a.exact_div(&b);
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianInt::new(0, 0).to_string(), "0");
        assert_eq!(GaussianInt::new(0, -1).to_string(), "-i");
        assert_eq!(GaussianInt::new(2, 1).to_string(), "2+i");
        assert_eq!(GaussianInt::new(-1, -2).to_string(), "-1-2i");
        assert_eq!(GaussianInt::new(0, 3).to_string(), "3i");
    }
}
