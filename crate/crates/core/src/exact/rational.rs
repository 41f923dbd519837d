use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{Field, Ring};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as an exact fraction")]
pub struct ParseRationalError(pub String);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let d: BigInt = denom.into();
        assert!(!d.is_zero(), "zero denominator");
        Rational(BigRational::new(numer.into(), d))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an integer, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.0.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, exp: i32) -> Self {
        if exp >= 0 {
            Ring::pow(self, exp as u32)
        } else {
            Ring::pow(&self.recip(), exp.unsigned_abs())
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Rational::new(n, d))
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| err())?;
                Ok(Rational::from_integer(n))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn inverse(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.0.is_zero()).then(|| Rational(&self.0 / &divisor.0))
    }
}

impl Field for Rational {}

/// Shorthand for `Rational::new(n, d)` with machine integers.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_drops_unit_denominator() {
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(q(-2, 4).to_string(), "-1/2");
        assert_eq!(q(3, -9).to_string(), "-1/3");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "5/24", "-11/3750"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap(), q(2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn canonical_form() {
        let r = q(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn inverse_and_exact_div() {
        assert_eq!(q(2, 3).inverse(), Some(q(3, 2)));
        assert_eq!(Rational::zero().inverse(), None);
        assert_eq!(q(1, 2).exact_div(&q(1, 4)), Some(Rational::from(2)));
        assert_eq!(q(1, 2).exact_div(&Rational::zero()), None);
    }

    #[test]
    fn pow_and_powi() {
        assert_eq!(Ring::pow(&q(2, 3), 3), q(8, 27));
        assert_eq!(q(2, 3).powi(-2), q(9, 4));
        assert_eq!(Ring::pow(&q(5, 1), 0), Rational::one());
    }
}
