//! Exhaustive permutation statistics.
//!
//! Letters are classified with the boundary convention
//! `σ_0 = σ_{n+1} = +∞`; ascents and descents are counted only between
//! adjacent letters, positions `1..n-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::contfrac::{CfPattern, GeneralizedCF, Level};
use crate::exact::{factorial, q, GaussianRational, Poly, Rational, Ring};

/// Largest `n` enumerated unless a caller raises it.
pub const DEFAULT_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation of 1..{0}")]
    NotAPermutation(usize),
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("unknown weight `{0}`, expected W1, W2, W3 or W4")]
    UnknownWeight(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PermutationStatistics {
    pub val: usize,
    pub pk: usize,
    pub da: usize,
    pub dd: usize,
    pub des: usize,
    pub asc: usize,
}

/// What kind of letter sits at a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Valley,
    Peak,
    DoubleAscent,
    DoubleDescent,
}

fn check(sigma: &[usize]) -> Result<(), PermError> {
    let n = sigma.len();
    let mut seen = vec![false; n + 1];
    for &s in sigma {
        if s == 0 || s > n || seen[s] {
            return Err(PermError::NotAPermutation(n));
        }
        seen[s] = true;
    }
    if n == 0 {
        return Err(PermError::NotAPermutation(0));
    }
    Ok(())
}

// 1-based classification, sigma assumed valid
fn letter(sigma: &[usize], j: usize) -> Letter {
    let n = sigma.len();
    let here = sigma[j - 1];
    let left = if j == 1 { usize::MAX } else { sigma[j - 2] };
    let right = if j == n { usize::MAX } else { sigma[j] };
    match (left < here, here < right) {
        (false, true) => Letter::Valley,
        (true, false) => Letter::Peak,
        (true, true) => Letter::DoubleAscent,
        (false, false) => Letter::DoubleDescent,
    }
}

fn stats_unchecked(sigma: &[usize]) -> PermutationStatistics {
    let mut st = PermutationStatistics::default();
    for j in 1..=sigma.len() {
        match letter(sigma, j) {
            Letter::Valley => st.val += 1,
            Letter::Peak => st.pk += 1,
            Letter::DoubleAscent => st.da += 1,
            Letter::DoubleDescent => st.dd += 1,
        }
    }
    for w in sigma.windows(2) {
        if w[0] < w[1] {
            st.asc += 1;
        } else {
            st.des += 1;
        }
    }
    st
}

/// Classify every letter of `sigma`, a permutation of `1..=n`.
pub fn stats(sigma: &[usize]) -> Result<PermutationStatistics, PermError> {
    check(sigma)?;
    Ok(stats_unchecked(sigma))
}

pub fn letters(sigma: &[usize]) -> Result<Vec<Letter>, PermError> {
    check(sigma)?;
    Ok((1..=sigma.len()).map(|j| letter(sigma, j)).collect())
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn bounded(n: usize, bound: usize) -> Result<(), PermError> {
    if n > bound {
        return Err(PermError::BoundExceeded { n, bound });
    }
    Ok(())
}

/// Fold over all of `S_n` in lexicographic order, one parallel task per
/// first letter.
pub fn fold_permutations<T, I, F, C>(n: usize, init: I, step: F, combine: C) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &[usize]) + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    if n == 0 {
        return init();
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut perm: Vec<usize> = std::iter::once(first)
                .chain((1..=n).filter(|&x| x != first))
                .collect();
            loop {
                step(&mut acc, &perm);
                if !next_permutation(&mut perm[1..]) {
                    break;
                }
            }
            acc
        })
        .reduce(&init, &combine)
}

/// Permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (n > 0).then(|| (1..=n).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = next_permutation(&mut next).then_some(next);
        Some(out)
    })
}

/// Count of permutations per `(val, pk, da, dd)`.
pub fn quadruple_histogram(
    n: usize,
    bound: usize,
) -> Result<BTreeMap<[usize; 4], u64>, PermError> {
    bounded(n, bound)?;
    Ok(fold_permutations(
        n,
        BTreeMap::new,
        |h: &mut BTreeMap<[usize; 4], u64>, p| {
            let s = stats_unchecked(p);
            *h.entry([s.val, s.pk, s.da, s.dd]).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    ))
}

/// `Σ_{σ ∈ S_n} u1^val u2^pk u3^da u4^dd`.
pub fn quadruple_sum<R: Ring>(n: usize, u1: &R, u2: &R, u3: &R, u4: &R) -> Result<R, PermError> {
    quadruple_sum_bounded(n, [u1, u2, u3, u4], DEFAULT_MAX_N)
}

pub fn quadruple_sum_bounded<R: Ring>(n: usize, u: [&R; 4], bound: usize) -> Result<R, PermError> {
    let h = quadruple_histogram(n, bound)?;
    Ok(h.iter().fold(R::zero(), |acc, (e, &count)| {
        let term = (0..4).fold(R::from_i64(count as i64), |t, i| t * &u[i].pow(e[i] as u32));
        acc + term
    }))
}

/// `P_n(t, s) = Σ t^pk s^da`.
pub fn peak_da_polynomial<R: Ring>(n: usize, t: &R, s: &R) -> Result<R, PermError> {
    quadruple_sum(n, &R::one(), t, s, &R::one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    W1,
    W2,
    W3,
    W4,
}

impl Weight {
    pub const ALL: [Weight; 4] = [Weight::W1, Weight::W2, Weight::W3, Weight::W4];
}

impl FromStr for Weight {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, PermError> {
        match s.to_ascii_uppercase().as_str() {
            "W1" => Ok(Weight::W1),
            "W2" => Ok(Weight::W2),
            "W3" => Ok(Weight::W3),
            "W4" => Ok(Weight::W4),
            _ => Err(PermError::UnknownWeight(s.to_string())),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn real(r: Rational) -> GaussianRational {
    GaussianRational::from_rational(r)
}

fn letter_factor(w: Weight, l: Letter) -> Rational {
    match (w, l) {
        (Weight::W1, Letter::DoubleAscent) => q(-1, 1),
        (Weight::W2, Letter::DoubleAscent) => q(0, 1),
        (Weight::W2, Letter::Peak) => q(1, 2),
        (Weight::W3, Letter::Peak) => q(1, 1),
        (Weight::W3, _) => q(1, 2),
        _ => q(1, 1),
    }
}

fn step_factor(ascent: bool) -> GaussianRational {
    let im = if ascent { q(1, 2) } else { q(-1, 2) };
    GaussianRational::new(q(1, 2), im)
}

fn factors_unchecked(sigma: &[usize], w: Weight) -> Vec<GaussianRational> {
    match w {
        Weight::W4 => sigma.windows(2).map(|p| step_factor(p[0] < p[1])).collect(),
        _ => (2..=sigma.len())
            .map(|j| real(letter_factor(w, letter(sigma, j))))
            .collect(),
    }
}

/// The per-position factors whose product is the weight of `sigma`.
pub fn weight_factors(sigma: &[usize], w: Weight) -> Result<Vec<GaussianRational>, PermError> {
    check(sigma)?;
    Ok(factors_unchecked(sigma, w))
}

pub fn weight(sigma: &[usize], w: Weight) -> Result<GaussianRational, PermError> {
    Ok(weight_factors(sigma, w)?
        .into_iter()
        .fold(GaussianRational::one(), |a, b| a * b))
}

/// `Σ_{σ ∈ S_n} W(σ)`.
pub fn weight_sum(n: usize, w: Weight) -> Result<GaussianRational, PermError> {
    weight_sum_bounded(n, w, DEFAULT_MAX_N)
}

pub fn weight_sum_bounded(n: usize, w: Weight, bound: usize) -> Result<GaussianRational, PermError> {
    bounded(n, bound)?;
    // W1..W3 depend only on the letter classes at 2..n, W4 on the descent
    // count; histogram first, then one ring product per class
    let hist = fold_permutations(
        n,
        BTreeMap::new,
        |h: &mut BTreeMap<Vec<u8>, u64>, p| {
            let key = match w {
                Weight::W4 => vec![stats_unchecked(p).des as u8],
                _ => (2..=p.len()).map(|j| letter(p, j) as u8).collect(),
            };
            *h.entry(key).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    let mut total = GaussianRational::zero();
    for (key, count) in hist {
        let wt = match w {
            Weight::W4 => {
                let des = key[0] as u32;
                step_factor(true).pow(n as u32 - 1 - des) * step_factor(false).pow(des)
            }
            _ => real(
                key.iter()
                    .map(|&l| letter_factor(w, LETTERS[l as usize]))
                    .fold(Rational::one(), |a, b| a * b),
            ),
        };
        total = total + wt * GaussianRational::from_i64(count as i64);
    }
    Ok(total)
}

const LETTERS: [Letter; 4] = [
    Letter::Valley,
    Letter::Peak,
    Letter::DoubleAscent,
    Letter::DoubleDescent,
];

/// `Σ_{σ ∈ S_n} t^{1 + des(σ)}` as coefficient list in `t`.
pub fn eulerian_coefficients(n: usize, bound: usize) -> Result<Vec<u64>, PermError> {
    bounded(n, bound)?;
    if n == 0 {
        return Ok(vec![1]);
    }
    Ok(fold_permutations(
        n,
        || vec![0u64; n + 1],
        |c, p| c[1 + stats_unchecked(p).des] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    ))
}

/// `c_n = Σ_{σ ∈ S_n} u1^val u2^pk u3^da u4^dd` for `1 <= n <= n_max`, with `c_0 = 0`.
pub fn quadruple_coefficients(n_max: usize, u: [&Rational; 4]) -> Result<Vec<Rational>, PermError> {
    bounded(n_max, DEFAULT_MAX_N)?;
    let mut c = vec![Rational::zero()];
    for n in 1..=n_max {
        c.push(quadruple_sum_bounded(n, u, DEFAULT_MAX_N)?);
    }
    Ok(c)
}

/// Flajolet's J-fraction for the ordinary generating function of the
/// quadruple statistic.
pub fn flajolet_pattern(u: [&Rational; 4]) -> CfPattern<Rational> {
    let s = u[2].clone() + u[3];
    let uu = u[0].clone() * u[1];
    CfPattern::new(Poly::zero(), move |k| {
        let k = k as i64;
        Level::new(
            Poly::monomial(-(uu.clone() * &Rational::from(k * (k - 1))), 2),
            Poly::new(vec![Rational::one(), -(s.clone() * &Rational::from(k))]),
        )
    })
    .with_a(1, Poly::monomial(u[0].clone(), 1))
}

/// The Lambert-type fraction for the exponential generating function,
/// `u1 x/(1 - cx) + (c² - u1u2)x²/3 + (c² - u1u2)x²/5 + ...`, `c = (u3 + u4)/2`.
pub fn exp_fraction_pattern(u: [&Rational; 4]) -> CfPattern<Rational> {
    let c = (u[2].clone() + u[3]) * &q(1, 2);
    let t = c.clone() * &c - u[0].clone() * u[1];
    CfPattern::new(Poly::zero(), move |k| {
        Level::new(
            Poly::monomial(t.clone(), 2),
            Poly::constant(Rational::from(2 * k as i64 - 1)),
        )
    })
    .with_a(1, Poly::monomial(u[0].clone(), 1))
    .with_b(1, Poly::new(vec![Rational::one(), -c.clone()]))
}

/// Flajolet's fraction against enumeration, `x^1..x^{n_max}`.
pub fn verify_flajolet_cf(n_max: usize, u: [&Rational; 4]) -> Result<bool, PermError> {
    let expected = quadruple_coefficients(n_max, u)?;
    let got = GeneralizedCF::from_pattern(flajolet_pattern(u))
        .evaluate(n_max / 2 + 2, n_max)
        .expect("denominators have unit constant term");
    Ok(got.coeffs() == expected.as_slice())
}

/// The exponential fraction against enumeration divided by `n!`.
pub fn verify_exp_cf(n_max: usize, u: [&Rational; 4]) -> Result<bool, PermError> {
    let expected: Vec<Rational> = quadruple_coefficients(n_max, u)?
        .into_iter()
        .enumerate()
        .map(|(n, c)| c / Rational::from(factorial(n as u64)))
        .collect();
    let got = GeneralizedCF::from_pattern(exp_fraction_pattern(u))
        .evaluate(n_max / 2 + 2, n_max)
        .expect("denominators have invertible constant term");
    Ok(got.coeffs() == expected.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(val: usize, pk: usize, da: usize, dd: usize, asc: usize, des: usize) -> PermutationStatistics {
        PermutationStatistics {
            val,
            pk,
            da,
            dd,
            des,
            asc,
        }
    }

    #[test]
    fn classify_small_permutations() {
        assert_eq!(stats(&[1, 3, 2]).unwrap(), st(2, 1, 0, 0, 1, 1));
        assert_eq!(stats(&[1]).unwrap(), st(1, 0, 0, 0, 0, 0));
        assert_eq!(stats(&[1, 2, 3]).unwrap(), st(1, 0, 2, 0, 2, 0));
        assert_eq!(stats(&[3, 2, 1]).unwrap(), st(1, 0, 0, 2, 0, 2));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(stats(&[1, 1]).is_err());
        assert!(stats(&[0, 1]).is_err());
        assert!(stats(&[]).is_err());
        assert!(stats(&[1, 4, 2]).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let all: Vec<_> = permutations(3).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(permutations(6).count(), 720);
    }

    #[test]
    fn valley_is_peak_plus_one() {
        for n in 1..=7 {
            for p in permutations(n) {
                let s = stats(&p).unwrap();
                assert_eq!(s.val, s.pk + 1);
                assert_eq!(s.val + s.pk + s.da + s.dd, n);
                assert_eq!(s.asc + s.des, n - 1);
            }
        }
    }

    #[test]
    fn n3_sums() {
        for w in Weight::ALL {
            assert_eq!(weight_sum(3, w).unwrap(), GaussianRational::from_i64(2), "{w}");
        }
    }

    #[test]
    fn w1_vanishes_for_even_n() {
        assert!(weight_sum(4, Weight::W1).unwrap().is_zero());
    }

    #[test]
    fn w2_gives_e6() {
        assert_eq!(weight_sum(6, Weight::W2).unwrap(), GaussianRational::from_i64(61));
    }

    #[test]
    fn histogram_sum_matches_direct_sum() {
        for w in Weight::ALL {
            let direct = permutations(5)
                .map(|p| weight(&p, w).unwrap())
                .fold(GaussianRational::zero(), |a, b| a + b);
            assert_eq!(weight_sum(5, w).unwrap(), direct);
        }
    }

    #[test]
    fn quadruple_sum_specializations() {
        let one = q(1, 1);
        assert_eq!(quadruple_sum(3, &one, &one, &one, &one).unwrap(), q(6, 1));
        assert_eq!(quadruple_sum(3, &one, &q(1, 2), &q(0, 1), &one).unwrap(), q(2, 1));
        assert_eq!(peak_da_polynomial(3, &q(1, 2), &q(0, 1)).unwrap(), q(2, 1));
        // E_5 = 2^{1-5} P_5(2, 1)
        assert_eq!(peak_da_polynomial(5, &q(2, 1), &one).unwrap(), q(16 * 16, 1));
        assert_eq!(peak_da_polynomial(5, &one, &q(-1, 1)).unwrap(), q(16, 1));
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            weight_sum(10, Weight::W2),
            Err(PermError::BoundExceeded { n: 10, bound: 9 })
        );
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_coefficients(1, 9).unwrap(), vec![0, 1]);
        assert_eq!(eulerian_coefficients(3, 9).unwrap(), vec![0, 1, 4, 1]);
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("w2".parse::<Weight>().unwrap(), Weight::W2);
        assert!("W5".parse::<Weight>().is_err());
    }

    #[test]
    fn flajolet_fraction_matches_enumeration() {
        let one = q(1, 1);
        assert!(verify_flajolet_cf(8, [&one, &q(1, 2), &q(0, 1), &one]).unwrap());
        assert!(verify_flajolet_cf(8, [&one; 4]).unwrap());
        assert!(verify_flajolet_cf(7, [&q(2, 3), &q(-5, 7), &q(3, 4), &q(1, 9)]).unwrap());
    }

    #[test]
    fn exp_fraction_matches_enumeration() {
        let one = q(1, 1);
        assert!(verify_exp_cf(8, [&one, &one, &q(-1, 1), &q(-1, 1)]).unwrap());
        assert!(verify_exp_cf(8, [&one, &q(1, 2), &q(0, 1), &one]).unwrap());
        assert!(verify_exp_cf(6, [&one, &one, &q(2, 1), &q(0, 1)]).unwrap());
    }

    #[test]
    fn wrong_fraction_is_rejected() {
        // Flajolet's fraction with u2 perturbed in the pattern only
        let one = q(1, 1);
        let cf = GeneralizedCF::from_pattern(flajolet_pattern([&one, &q(1, 3), &q(0, 1), &one]));
        let got = cf.evaluate(6, 6).unwrap();
        let want = quadruple_coefficients(6, [&one, &q(1, 2), &q(0, 1), &one]).unwrap();
        assert_ne!(got.coeffs(), want.as_slice());
    }
}
