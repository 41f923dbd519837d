use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::ring::Ring;

/// Dense univariate polynomial, `coeffs[i]` is the coefficient of the i-th
/// power. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

/// Polynomials in q over the rationals.
pub type QPolynomial = Poly<Rational>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn x() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(v)
    }

    /// Divide by `x^k`, `None` if a low coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x + c)
    }

    /// `p(x^2)`.
    pub fn stretch(&self) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len() * 2);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                v.push(R::zero());
            }
            v.push(c.clone());
        }
        Poly::new(v)
    }

    /// Inverse of [`Poly::stretch`]; `None` when an odd power is present.
    pub fn compress(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// Quotient and remainder, requiring the leading coefficient of the
    /// divisor to divide every intermediate leading term exactly.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(&lead)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d;
            }
            quot[i] = c;
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &R::from_i64(i as i64))
                .collect(),
        )
    }

    /// Render with the given variable name, highest-degree-last.
    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let compound = body.contains(['+', '-']);
            let body = if compound { format!("({body})") } else { body };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&body);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl<R: Ring> Default for Poly<R> {
    fn default() -> Self {
        Poly { coeffs: Vec::new() }
    }
}

impl<R: Ring> From<R> for Poly<R> {
    fn from(c: R) -> Self {
        Poly::constant(c)
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("x"))
    }
}

impl<R: Ring + Serialize> Serialize for Poly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for Poly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Poly::new(Vec::<R>::deserialize(deserializer)?))
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        let mut v = self.coeffs;
        if v.len() < rhs.coeffs.len() {
            v.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in v.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b;
        }
        Poly::new(v)
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        self + &rhs
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        let mut v = self.coeffs;
        if v.len() < rhs.coeffs.len() {
            v.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in v.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() - b;
        }
        Poly::new(v)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self - &rhs
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b;
            }
        }
        Poly::new(v)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        self * &rhs
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Poly::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_bigint(n: &BigInt) -> Self {
        Poly::constant(R::from_bigint(n))
    }

    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        self.coeffs[0].inverse().map(Poly::constant)
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (quot, rem) = self.div_rem(divisor)?;
        rem.is_zero().then_some(quot)
    }
}

/// Build a rational polynomial from machine integers.
pub fn qpoly(coeffs: &[i64]) -> QPolynomial {
    Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
}
