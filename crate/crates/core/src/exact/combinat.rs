use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::QPolynomial;
use super::rational::Rational;
use super::ring::Ring;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)` as an integer, zero outside `0 <= k <= n`.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial(n: i64, k: i64) -> Rational {
    Rational::from(binomial_int(n, k))
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> QPolynomial {
    QPolynomial::new(vec![Rational::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| acc * &q_int(k))
}

/// Gaussian binomial coefficient.
///
/// # Panics
/// If the defining quotient leaves a remainder, which would mean the
/// polynomial arithmetic is broken.
pub fn q_binomial(n: usize, k: i64) -> QPolynomial {
    if k < 0 || k as usize > n {
        return QPolynomial::zero();
    }
    let k = k as usize;
    let den = q_factorial(k) * &q_factorial(n - k);
    q_factorial(n)
        .exact_div(&den)
        .expect("Gaussian binomial quotient left a remainder")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::qpoly;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), Rational::from(6));
        assert_eq!(binomial(3, 0), Rational::from(1));
        assert_eq!(binomial(5, 7), Rational::zero());
        assert_eq!(binomial(5, -1), Rational::zero());
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(3), qpoly(&[1, 1, 1]));
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), qpoly(&[1]));
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(2, 2), qpoly(&[1]));
        assert_eq!(q_binomial(3, 2), qpoly(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2), qpoly(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 4).is_zero());
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        let one = Rational::one();
        for n in 0..=12usize {
            for k in 0..=n as i64 {
                assert_eq!(q_binomial(n, k).eval(&one), binomial(n as i64, k));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
