use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

/// Commutative ring with exact equality.
///
/// Every value is kept in canonical form, so `==` is structural equality.
/// `inverse` answers the "is this a unit" question used by series division;
/// `exact_div` is the quotient used by fraction-free elimination and must
/// return `None` whenever the division would leave a remainder.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// `self / divisor` when the quotient exists in the ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// Rings in which every nonzero element is a unit.
pub trait Field: Ring {}
