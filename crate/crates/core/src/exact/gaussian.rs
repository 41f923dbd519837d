use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::rational::Rational;
use super::ring::{Field, Ring};

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `z·conj(z)`, a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, self.im.abs())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::from_rational(r)
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        self + &rhs
    }
}

impl<'a> Sub<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - &rhs.re, self.im - &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        self - &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussianRational::new(re, im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        self * &rhs
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        self * rhs.inverse().expect("division by zero")
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }

    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn from_bigint(n: &BigInt) -> Self {
        GaussianRational::from_rational(Rational::from_bigint(n))
    }

    fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let inv = n.inverse()?;
        Some(GaussianRational::new(&self.re * &inv, -(&self.im * &inv)))
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inverse().map(|d| self.clone() * &d)
    }
}

impl Field for GaussianRational {}
