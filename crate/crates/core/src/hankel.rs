//! Hankel determinants by fraction-free elimination.

use rayon::prelude::*;

use crate::exact::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HankelError {
    #[error("need {needed} coefficients, got {available}")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("matrix is not square")]
    NotSquare,
}

/// The `n x n` matrix `(c_{i+j})`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelMatrix<R: Ring> {
    entries: Vec<R>,
    n: usize,
}

impl<R: Ring> HankelMatrix<R> {
    pub fn new(c: &[R], n: usize) -> Result<Self, HankelError> {
        let needed = (2 * n).saturating_sub(1);
        if c.len() < needed {
            return Err(HankelError::InsufficientCoefficients {
                needed,
                available: c.len(),
            });
        }
        Ok(HankelMatrix {
            entries: c[..needed].to_vec(),
            n,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.entries[i + j]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    pub fn det(&self) -> R {
        det(self.rows()).expect("Hankel matrices are square")
    }
}

/// Determinant by Bareiss elimination with row swaps.
///
/// Every intermediate quotient is exact in an integral domain, so only
/// `exact_div` is needed. A column without a pivot gives 0.
pub fn det<R: Ring>(mut m: Vec<Vec<R>>) -> Result<R, HankelError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(HankelError::NotSquare);
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(R::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = row[j].clone() * pivot - lead.clone() * &pivot_row[j];
                row[j] = num
                    .exact_div(&prev)
                    .expect("Bareiss quotient must be exact");
            }
            row[k] = R::zero();
        }
        prev = pivot.clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Laplace expansion along the first row. Exponential time; meant as an
/// independent check on small matrices.
pub fn cofactor_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = R::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][c].clone() * &cofactor_det(&minor);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

pub fn hankel_det<R: Ring>(c: &[R], n: usize) -> Result<R, HankelError> {
    Ok(HankelMatrix::new(c, n)?.det())
}

/// `(H_0, ..., H_{n_max})`.
pub fn hankel_sequence<R: Ring>(c: &[R], n_max: usize) -> Result<Vec<R>, HankelError> {
    HankelMatrix::new(c, n_max)?;
    Ok((0..=n_max)
        .into_par_iter()
        .map(|n| hankel_det(c, n).expect("length checked above"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qpoly, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from(c)).collect()
    }

    const EULER: [i64; 13] = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765];

    #[test]
    fn small_euler_determinants() {
        let e = ints(&EULER);
        assert_eq!(hankel_det(&e, 0).unwrap(), Rational::one());
        assert_eq!(hankel_det(&e, 2).unwrap(), Rational::zero());
        assert_eq!(hankel_det(&e, 3).unwrap(), Rational::from(-1));
        let h = hankel_sequence(&e, 4).unwrap();
        assert_eq!(h, ints(&[1, 1, 0, -1, -9]));
    }

    #[test]
    fn rank_one() {
        let h = hankel_sequence(&ints(&[1; 9]), 5).unwrap();
        assert_eq!(h, ints(&[1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn singular_leading_minor_needs_pivoting() {
        let e = ints(&EULER);
        for n in 0..=6 {
            let m = HankelMatrix::new(&e, n).unwrap();
            assert_eq!(m.det(), cofactor_det(&m.rows()), "n = {n}");
        }
    }

    #[test]
    fn not_enough_coefficients() {
        assert_eq!(
            hankel_sequence(&ints(&[1, 1, 1]), 3),
            Err(HankelError::InsufficientCoefficients {
                needed: 5,
                available: 3
            })
        );
    }

    #[test]
    fn polynomial_entries() {
        // det [[1, q], [q, 1+q^2+q]] = 1 + q
        let m = vec![
            vec![qpoly(&[1]), qpoly(&[0, 1])],
            vec![qpoly(&[0, 1]), qpoly(&[1, 1, 1])],
        ];
        assert_eq!(det(m).unwrap(), qpoly(&[1, 1]));
    }

    #[test]
    fn rejects_ragged_input() {
        assert_eq!(
            det(vec![vec![q(1, 1)], vec![q(1, 1), q(2, 1)]]),
            Err(HankelError::NotSquare)
        );
    }
}
