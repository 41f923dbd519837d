//! Truncated formal power series over an exact ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::{factorial, Poly, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("cannot shift by {shift} a series trusted only to order {order}")]
    ShiftBeyondOrder { shift: usize, order: usize },
    #[error("unknown series name `{0}`")]
    UnknownSeriesName(String),
    #[error("odd coefficient at x^{0} is nonzero")]
    OddTermsPresent(usize),
    #[error("divisor vanishes to its trusted order")]
    ZeroDivisor,
    #[error("quotient is not a power series")]
    NotDivisible,
    #[error("coefficient at x^{0} is not divisible by {0}!")]
    FactorialDivision(usize),
}

/// Coefficients `c_0..c_N` together with the trusted order `N`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct TruncatedSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
}

/// Reindexing operations on a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// `(f - c_0 - ... - c_{m-1} x^{m-1}) / x^m`
    ShiftLeft(usize),
    /// `c_n <- c_{2n}`, defined when every odd coefficient vanishes.
    SubstituteXSquared,
    /// `c_{2n} <- c_n`, zeros in between.
    InterleaveZero,
    EvenPart,
    OddPart,
    /// `c_n <- n! c_n`
    ScaleByFactorial,
    /// `c_n <- c_n / n!`
    DivideByFactorial,
    MultiplyByX,
    /// `f(x) -> f(-x)`
    NegateX,
}

/// First coefficient where two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<R> {
    pub n: usize,
    pub expected: R,
    pub got: R,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^n`, `None` past the trusted order.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    /// Index of the first nonzero trusted coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drop coefficients above `order`; never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly<R>) -> Self {
        self.clone() * &Self::from_poly(p, self.order)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.order), |acc, _| acc * self)
    }

    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or(SeriesError::NonInvertibleConstantTerm)?;
        let n = self.order;
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut s = R::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                s = s + self.coeffs[j].clone() * &out[k - j];
            }
            out.push(-(s * &inv0));
        }
        Ok(TruncatedSeries { order: n, coeffs: out })
    }

    /// `self / divisor`. A divisor of valuation `v` lowers the trusted order
    /// by `v` and requires the first `v` coefficients of `self` to vanish.
    pub fn divide(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let v = divisor.valuation().ok_or(SeriesError::ZeroDivisor)?;
        let order = self.order.min(divisor.order);
        if v > 0 && self.coeffs[..v.min(self.coeffs.len())].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible);
        }
        let num = self.truncate(order).shift_left(v)?;
        let den = divisor.truncate(order).shift_left(v)?;
        let den_inv = den
            .invert()
            .map_err(|_| SeriesError::NotDivisible)?;
        Ok(num * &den_inv)
    }

    pub fn shift_left(&self, m: usize) -> Result<Self, SeriesError> {
        if m > self.order {
            return Err(SeriesError::ShiftBeyondOrder {
                shift: m,
                order: self.order,
            });
        }
        Ok(TruncatedSeries {
            order: self.order - m,
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    pub fn multiply_by_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries {
            order: self.order + 1,
            coeffs,
        }
    }

    pub fn substitute_x_squared(&self) -> Result<Self, SeriesError> {
        if let Some(i) = (1..=self.order)
            .step_by(2)
            .find(|&i| !self.coeffs[i].is_zero())
        {
            return Err(SeriesError::OddTermsPresent(i));
        }
        Ok(TruncatedSeries {
            order: self.order / 2,
            coeffs: self.coeffs.iter().step_by(2).cloned().collect(),
        })
    }

    pub fn interleave_zero(&self) -> Self {
        let order = 2 * self.order + 1;
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        TruncatedSeries { order, coeffs }
    }

    fn keep_parity(&self, parity: usize) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == parity { c.clone() } else { R::zero() })
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        self.keep_parity(0)
    }

    pub fn odd_part(&self) -> Self {
        self.keep_parity(1)
    }

    pub fn negate_x(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    pub fn scale_coeff_by_factorial(&self) -> Self {
        let mut f = BigInt::from(1);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f *= i;
            }
            coeffs.push(c.clone() * &R::from_bigint(&f));
        }
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn divide_coeff_by_factorial(&self) -> Result<Self, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.exact_div(&R::from_bigint(&factorial(i as u64)))
                    .ok_or(SeriesError::FactorialDivision(i))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Formal derivative, trusted to one order less.
    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            order: self.order - 1,
            coeffs: (1..=self.order)
                .map(|i| self.coeffs[i].clone() * &R::from_i64(i as i64))
                .collect(),
        }
    }

    pub fn transform(&self, kind: Transform) -> Result<Self, SeriesError> {
        match kind {
            Transform::ShiftLeft(m) => self.shift_left(m),
            Transform::SubstituteXSquared => self.substitute_x_squared(),
            Transform::InterleaveZero => Ok(self.interleave_zero()),
            Transform::EvenPart => Ok(self.even_part()),
            Transform::OddPart => Ok(self.odd_part()),
            Transform::ScaleByFactorial => Ok(self.scale_coeff_by_factorial()),
            Transform::DivideByFactorial => self.divide_coeff_by_factorial(),
            Transform::MultiplyByX => Ok(self.multiply_by_x()),
            Transform::NegateX => Ok(self.negate_x()),
        }
    }

    /// Compare against `expected` up to the smaller of the two orders and
    /// report the first differing coefficient.
    pub fn first_mismatch(&self, expected: &Self) -> Option<Mismatch<R>> {
        let n = self.order.min(expected.order);
        (0..=n)
            .find(|&i| self.coeffs[i] != expected.coeffs[i])
            .map(|i| Mismatch {
                n: i,
                expected: expected.coeffs[i].clone(),
                got: self.coeffs[i].clone(),
            })
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        write!(f, "{} + O(x^{})", p, self.order + 1)
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order + 1)
    }
}

impl<'a, R: Ring> Add<&'a TruncatedSeries<R>> for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: &'a TruncatedSeries<R>) -> TruncatedSeries<R> {
        let order = self.order.min(rhs.order);
        let coeffs = self
            .coeffs
            .into_iter()
            .zip(&rhs.coeffs)
            .take(order + 1)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { order, coeffs }
    }
}

impl<R: Ring> Add for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: TruncatedSeries<R>) -> TruncatedSeries<R> {
        self + &rhs
    }
}

impl<'a, R: Ring> Sub<&'a TruncatedSeries<R>> for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: &'a TruncatedSeries<R>) -> TruncatedSeries<R> {
        let order = self.order.min(rhs.order);
        let coeffs = self
            .coeffs
            .into_iter()
            .zip(&rhs.coeffs)
            .take(order + 1)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { order, coeffs }
    }
}

impl<R: Ring> Sub for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: TruncatedSeries<R>) -> TruncatedSeries<R> {
        self - &rhs
    }
}

impl<'a, R: Ring> Mul<&'a TruncatedSeries<R>> for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: &'a TruncatedSeries<R>) -> TruncatedSeries<R> {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b;
            }
        }
        TruncatedSeries { order, coeffs }
    }
}

impl<R: Ring> Mul for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: TruncatedSeries<R>) -> TruncatedSeries<R> {
        self * &rhs
    }
}

impl<R: Ring> Neg for TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Series with a closed-form Taylor expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedSeries {
    Sin,
    Cos,
    Tan,
    Sec,
    TanPlusSec,
    SecPow(u32),
    Sinh,
    Cosh,
    Tanh,
}

impl std::str::FromStr for NamedSeries {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || SeriesError::UnknownSeriesName(s.to_string());
        Ok(match s.trim() {
            "sin" => NamedSeries::Sin,
            "cos" => NamedSeries::Cos,
            "tan" => NamedSeries::Tan,
            "sec" => NamedSeries::Sec,
            "tan_plus_sec" => NamedSeries::TanPlusSec,
            "sinh" => NamedSeries::Sinh,
            "cosh" => NamedSeries::Cosh,
            "tanh" => NamedSeries::Tanh,
            other => {
                let r = other
                    .strip_prefix("sec_pow(")
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                let r: u32 = r.trim().parse().map_err(|_| unknown())?;
                if r == 0 {
                    return Err(unknown());
                }
                NamedSeries::SecPow(r)
            }
        })
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSeries::Sin => f.write_str("sin"),
            NamedSeries::Cos => f.write_str("cos"),
            NamedSeries::Tan => f.write_str("tan"),
            NamedSeries::Sec => f.write_str("sec"),
            NamedSeries::TanPlusSec => f.write_str("tan_plus_sec"),
            NamedSeries::SecPow(r) => write!(f, "sec_pow({r})"),
            NamedSeries::Sinh => f.write_str("sinh"),
            NamedSeries::Cosh => f.write_str("cosh"),
            NamedSeries::Tanh => f.write_str("tanh"),
        }
    }
}

// x^n/n! on the given parity with alternating or constant signs
fn trig_like(order: usize, parity: usize, alternate: bool) -> TruncatedSeries<Rational> {
    let coeffs = (0..=order)
        .map(|n| {
            if n % 2 != parity {
                return Rational::zero();
            }
            let v = Rational::new(1, factorial(n as u64));
            if alternate && (n / 2) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    TruncatedSeries::new(coeffs, order)
}

pub fn named(series: NamedSeries, order: usize) -> TruncatedSeries<Rational> {
    let cos = || trig_like(order, 0, true);
    let sec = || cos().invert().expect("cos has unit constant term");
    match series {
        NamedSeries::Sin => trig_like(order, 1, true),
        NamedSeries::Cos => cos(),
        NamedSeries::Sec => sec(),
        NamedSeries::Tan => trig_like(order, 1, true) * &sec(),
        NamedSeries::TanPlusSec => {
            let s = sec();
            trig_like(order, 1, true) * &s + &s
        }
        NamedSeries::SecPow(r) => sec().pow(r),
        NamedSeries::Sinh => trig_like(order, 1, false),
        NamedSeries::Cosh => trig_like(order, 0, false),
        NamedSeries::Tanh => {
            let c = trig_like(order, 0, false).invert().expect("unit constant term");
            trig_like(order, 1, false) * &c
        }
    }
}

/// Look up a series by name, e.g. `"tan"` or `"sec_pow(3)"`.
pub fn named_series(name: &str, order: usize) -> Result<TruncatedSeries<Rational>, SeriesError> {
    Ok(named(name.parse()?, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn s(v: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(v.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    #[test]
    fn product_truncates_to_min_order() {
        let p = s(&[1, 1], 5) * &s(&[1, -1], 5);
        assert_eq!(p, s(&[1, 0, -1], 5));
        let p = s(&[1, 1], 3) * &s(&[1, -1], 7);
        assert_eq!(p.order(), 3);
    }

    #[test]
    fn add_zero_is_identity() {
        let a = s(&[1, 1, 1], 4);
        assert_eq!(a.clone() + &TruncatedSeries::zero(4), a);
    }

    #[test]
    fn tan_cos_is_sin() {
        let t = named(NamedSeries::Tan, 15) * &named(NamedSeries::Cos, 15);
        assert_eq!(t, named(NamedSeries::Sin, 15));
    }

    #[test]
    fn geometric_inverse() {
        let inv = s(&[1, -1], 6).invert().unwrap();
        assert_eq!(inv, s(&[1; 7], 6));
    }

    #[test]
    fn sec_from_cos() {
        let sec = named(NamedSeries::Cos, 8).invert().unwrap();
        assert_eq!(sec.coeff(2), Some(&q(1, 2)));
        assert_eq!(sec.coeff(4), Some(&q(5, 24)));
        assert_eq!(sec.coeff(6), Some(&q(61, 720)));
    }

    #[test]
    fn invert_zero_constant_term_fails() {
        assert_eq!(
            s(&[0, 1, 1], 5).invert(),
            Err(SeriesError::NonInvertibleConstantTerm)
        );
    }

    #[test]
    fn tan_plus_sec_prefix() {
        let f = named_series("tan_plus_sec", 5).unwrap();
        let want = [q(1, 1), q(1, 1), q(1, 2), q(1, 3), q(5, 24), q(2, 15)];
        assert_eq!(f.coeffs(), &want);
    }

    #[test]
    fn sec_pow_one() {
        let f = named_series("sec_pow(1)", 4).unwrap();
        assert_eq!(f.coeffs(), &[q(1, 1), q(0, 1), q(1, 2), q(0, 1), q(5, 24)]);
    }

    #[test]
    fn cos_order_zero() {
        assert_eq!(named_series("cos", 0).unwrap(), s(&[1], 0));
    }

    #[test]
    fn unknown_names() {
        for bad in ["cot", "sec_pow(0)", "sec_pow(x)", ""] {
            assert!(matches!(
                named_series(bad, 3),
                Err(SeriesError::UnknownSeriesName(_))
            ));
        }
    }

    #[test]
    fn factorial_scaling_gives_euler_numbers() {
        let f = named(NamedSeries::TanPlusSec, 9).scale_coeff_by_factorial();
        assert_eq!(f, s(&[1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936], 9));
    }

    #[test]
    fn interleave_secant_numbers() {
        let f = s(&[1, 1, 5, 61], 3).interleave_zero();
        assert_eq!(f, s(&[1, 0, 1, 0, 5, 0, 61, 0], 7));
        assert_eq!(f.substitute_x_squared().unwrap(), s(&[1, 1, 5, 61], 3));
    }

    #[test]
    fn even_part_of_odd_series_vanishes() {
        assert!(named(NamedSeries::Tan, 12).even_part().is_zero());
    }

    #[test]
    fn shift_left_bounds() {
        let f = s(&[1, 2, 3], 2);
        assert_eq!(f.shift_left(2).unwrap(), s(&[3], 0));
        assert_eq!(
            f.shift_left(3),
            Err(SeriesError::ShiftBeyondOrder { shift: 3, order: 2 })
        );
    }

    #[test]
    fn substitute_rejects_odd_terms() {
        assert_eq!(
            s(&[1, 0, 1, 1], 3).substitute_x_squared(),
            Err(SeriesError::OddTermsPresent(3))
        );
    }

    #[test]
    fn valuation_division_lowers_order() {
        let num = s(&[0, 1, 1], 6);
        let den = s(&[0, 1], 6);
        let d = num.divide(&den).unwrap();
        assert_eq!(d, s(&[1, 1], 5));
        assert_eq!(s(&[1, 1], 4).divide(&den), Err(SeriesError::NotDivisible));
        assert_eq!(num.divide(&TruncatedSeries::zero(4)), Err(SeriesError::ZeroDivisor));
    }

    #[test]
    fn derivative_of_tan_is_sec_squared() {
        let d = named(NamedSeries::Tan, 13).derivative();
        assert_eq!(d, named(NamedSeries::SecPow(2), 12));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(s(&[1, 2], 1).scale(&q(1, 2))).unwrap();
        assert_eq!(v, serde_json::json!({"order": 1, "coeffs": ["1/2", "1"]}));
    }
}
