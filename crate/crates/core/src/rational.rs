//! Arbitrary-precision rational scalar.
//!
//! Every value is kept in lowest terms with a positive denominator, so
//! structural equality is numeric equality. The textual form is `p/q`, or
//! `p` when the denominator is one, with a leading `-` for negatives.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseRationalError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// `numer / denom`; panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        Self(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Integer power; negative exponents invert. `0^0` is one.
    pub fn pow(&self, exp: i32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self(num_traits::Pow::pow(&self.0, exp))
    }

    /// `(-1)^k` as a rational.
    pub fn sign_power(k: usize) -> Self {
        if k % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Lossy conversion, for human-facing summaries only.
    pub fn to_f64_lossy(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl From<BigInt> for ExactRational {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

impl From<BigUint> for ExactRational {
    fn from(value: BigUint) -> Self {
        Self::from_integer(BigInt::from(value))
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactRational {
            fn from(value: $t) -> Self {
                Self::from_integer(BigInt::from(value))
            }
        }
    )*};
}

from_primitive!(i32, i64, u32, u64, usize, i128, u128);

macro_rules! binary_op {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }

        impl<'a> $trait<ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }

        impl<'a, 'b> $trait<&'b ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'b ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }

        impl $assign_trait<ExactRational> for ExactRational {
            fn $assign_method(&mut self, rhs: ExactRational) {
                self.0.$assign_method(rhs.0);
            }
        }

        impl<'a> $assign_trait<&'a ExactRational> for ExactRational {
            fn $assign_method(&mut self, rhs: &'a ExactRational) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

binary_op!(Add, add, AddAssign, add_assign);
binary_op!(Sub, sub, SubAssign, sub_assign);
binary_op!(Mul, mul, MulAssign, mul_assign);
binary_op!(Div, div, DivAssign, div_assign);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a ExactRational> for ExactRational {
    fn product<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with an optional leading sign on `p`; the result
    /// is reduced, so `"2/4"` parses to `1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (numer, denom) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let numer: BigInt = numer.parse().map_err(|_| err())?;
        let denom: BigInt = match denom {
            Some(q) => {
                if q.starts_with(['+', '-']) {
                    return Err(err());
                }
                q.parse().map_err(|_| err())?
            }
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(err());
        }
        Ok(Self::new(numer, denom))
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Shorthand for `ExactRational::new(p, q)` on machine integers.
pub fn q(numer: i64, denom: i64) -> ExactRational {
    ExactRational::new(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_after_construction() {
        let x = ExactRational::new(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
    }

    #[test]
    fn display_drops_unit_denominator() {
        assert_eq!(q(10, 5).to_string(), "2");
        assert_eq!(q(0, 7).to_string(), "0");
        assert_eq!(q(-1, 12).to_string(), "-1/12");
    }

    #[test]
    fn parse_accepts_canonical_and_reducible_forms() {
        assert_eq!("1/2".parse::<ExactRational>().unwrap(), q(1, 2));
        assert_eq!("-19/720".parse::<ExactRational>().unwrap(), q(-19, 720));
        assert_eq!("4/8".parse::<ExactRational>().unwrap(), q(1, 2));
        assert_eq!("7".parse::<ExactRational>().unwrap(), q(7, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "1/-2", "a/b", "1/2/3", "0.5"] {
            assert!(bad.parse::<ExactRational>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let x = q(1, 6) + q(1, 3);
        assert_eq!(x, q(1, 2));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(q(2, 3) * q(3, 4), q(1, 2));
        assert_eq!(q(1, 2) / q(1, 4), q(2, 1));
        assert_eq!(-q(1, 2) - q(1, 2), q(-1, 1));
    }

    #[test]
    fn pow_handles_zero_and_negative_exponents() {
        assert_eq!(q(2, 3).pow(3), q(8, 27));
        assert_eq!(q(2, 3).pow(-2), q(9, 4));
        assert_eq!(ExactRational::zero().pow(0), ExactRational::one());
        assert_eq!(ExactRational::sign_power(5), q(-1, 1));
    }

    #[test]
    fn serde_uses_string_form() {
        let json = serde_json::to_string(&vec![q(1, 2), q(-3, 1)]).unwrap();
        assert_eq!(json, r#"["1/2","-3"]"#);
        let back: Vec<ExactRational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![q(1, 2), q(-3, 1)]);
    }
}
