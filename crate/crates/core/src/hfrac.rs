//! Super δ-fractions
//!
//! ```text
//! v_0 x^{k_0}/(1 + u_1(x) x) - v_1 x^{k_0+k_1+δ}/(1 + u_2(x) x) - ...
//! ```
//!
//! their expansion from a power series, and the Hankel determinants they
//! encode. For `δ = 2` these are the Hankel continued fractions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::contfrac::{CfError, GeneralizedCF, JFraction, Level};
use crate::exact::{Poly, Ring};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HfracError {
    #[error("delta must be at least 1")]
    ZeroDelta,
    #[error("Hankel profile needs delta = 2, got {0}")]
    NotAnHFraction(usize),
    #[error("leading coefficient {0} at level {1} is not a unit")]
    NonUnitLeadingCoefficient(String, usize),
    #[error("level {level}: deg u = {degree} exceeds the bound {bound}")]
    DegreeBound {
        level: usize,
        degree: usize,
        bound: i64,
    },
    #[error("level {0} has v = 0")]
    ZeroV(usize),
    #[error(transparent)]
    Cf(#[from] CfError),
}

/// Level `j` carries `v_j`, `k_j`, and the polynomial `u` of the
/// denominator `1 + u(x) x` sitting directly under the numerator
/// `v_j x^{e_j}`; its degree is at most `k_j + δ - 2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct SuperLevel<R: Ring> {
    pub v: R,
    pub k: usize,
    pub u: Poly<R>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct SuperFraction<R: Ring> {
    pub delta: usize,
    pub levels: Vec<SuperLevel<R>>,
}

/// Result of [`expand`]: the determined prefix and the order to which its
/// value (tail 0) matches the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expansion<R: Ring> {
    pub fraction: SuperFraction<R>,
    pub certified_order: usize,
    /// True when the remainder vanished on every trusted coefficient.
    pub remainder_vanished: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FractionClass {
    S,
    J,
    H,
    General,
}

impl fmt::Display for FractionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FractionClass::S => "S",
            FractionClass::J => "J",
            FractionClass::H => "H",
            FractionClass::General => "general",
        })
    }
}

impl<R: Ring> SuperFraction<R> {
    pub fn new(delta: usize, levels: Vec<SuperLevel<R>>) -> Result<Self, HfracError> {
        let sf = SuperFraction { delta, levels };
        sf.validate()?;
        Ok(sf)
    }

    pub fn empty(delta: usize) -> Self {
        SuperFraction {
            delta,
            levels: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn ks(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.k).collect()
    }

    /// Exponent of the numerator at level `j`.
    pub fn exponent(&self, j: usize) -> usize {
        if j == 0 {
            self.levels[0].k
        } else {
            self.levels[j - 1].k + self.levels[j].k + self.delta
        }
    }

    /// Checks `δ >= 1`, `v_j != 0`, and the degree bounds on `u`.
    pub fn validate(&self) -> Result<(), HfracError> {
        if self.delta == 0 {
            return Err(HfracError::ZeroDelta);
        }
        for (j, l) in self.levels.iter().enumerate() {
            if l.v.is_zero() {
                return Err(HfracError::ZeroV(j));
            }
            let bound = l.k as i64 + self.delta as i64 - 2;
            if let Some(d) = l.u.degree() {
                if d as i64 > bound {
                    return Err(HfracError::DegreeBound {
                        level: j,
                        degree: d,
                        bound,
                    });
                }
            }
        }
        Ok(())
    }

    /// The same fraction in `b0 + a1/(b1 + ...)` form, minus signs moved
    /// into the numerators.
    pub fn to_cf(&self) -> GeneralizedCF<R> {
        let levels = (0..self.levels.len())
            .map(|j| {
                let l = &self.levels[j];
                let c = if j == 0 { l.v.clone() } else { -l.v.clone() };
                let a = Poly::monomial(c, self.exponent(j));
                let b = Poly::one() + &l.u.shift_up(1);
                Level::new(a, b)
            })
            .collect();
        GeneralizedCF::new(Poly::zero(), levels).expect("v_j are nonzero")
    }

    pub fn evaluate(&self, order: usize) -> TruncatedSeries<R> {
        self.to_cf()
            .evaluate(self.levels.len(), order)
            .expect("denominators have constant term 1")
    }

    pub fn classify(&self) -> FractionClass {
        let flat = self.levels.iter().all(|l| l.k == 0);
        match self.delta {
            2 if flat => FractionClass::J,
            1 if flat => FractionClass::S,
            2 => FractionClass::H,
            _ => FractionClass::General,
        }
    }

    pub fn hankel_profile(&self) -> Result<HankelProfile<R>, HfracError> {
        if self.delta != 2 {
            return Err(HfracError::NotAnHFraction(self.delta));
        }
        let mut s = vec![0usize];
        let mut eps = vec![0usize];
        for l in &self.levels {
            s.push(s.last().unwrap() + l.k + 1);
            eps.push(eps.last().unwrap() + l.k * (l.k + 1) / 2);
        }
        let mut values = BTreeMap::new();
        for j in 0..s.len() {
            let mut h = R::one();
            for i in 0..j {
                h = h * &self.levels[i].v.pow((s[j] - s[i]) as u32);
            }
            if eps[j] % 2 == 1 {
                h = -h;
            }
            values.insert(s[j], h);
        }
        Ok(HankelProfile { s, eps, values })
    }
}

impl<R: Ring> fmt::Display for SuperFraction<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.levels.is_empty() {
            return f.write_str("0");
        }
        for j in 0..self.levels.len() {
            let l = &self.levels[j];
            let b = Poly::one() + &l.u.shift_up(1);
            let x = Poly::<R>::monomial(l.v.clone(), self.exponent(j));
            if j > 0 {
                f.write_str(" - ")?;
            }
            write!(f, "({x})/({b})")?;
        }
        Ok(())
    }
}

/// Indices `s_j` of the nonvanishing Hankel determinants, their sign
/// exponents, and values. Known for every index up to `s_L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HankelProfile<R: Ring> {
    pub s: Vec<usize>,
    pub eps: Vec<usize>,
    pub values: BTreeMap<usize, R>,
}

impl<R: Ring> HankelProfile<R> {
    /// Largest index whose determinant the profile fixes.
    pub fn known_up_to(&self) -> usize {
        *self.s.last().unwrap()
    }

    /// `H_n`, or `None` past [`HankelProfile::known_up_to`].
    pub fn det(&self, n: usize) -> Option<R> {
        if n > self.known_up_to() {
            return None;
        }
        Some(self.values.get(&n).cloned().unwrap_or_else(R::zero))
    }
}

/// Expand `f` into its super δ-fraction, emitting only levels fully fixed
/// by the trusted coefficients.
pub fn expand<R: Ring>(f: &TruncatedSeries<R>, delta: usize) -> Result<Expansion<R>, HfracError> {
    if delta == 0 {
        return Err(HfracError::ZeroDelta);
    }
    let n = f.order();
    let mut levels: Vec<SuperLevel<R>> = Vec::new();
    let mut g = f.clone();
    let mut exp_sum = 0usize;
    loop {
        let trusted = g.order();
        let Some(e) = g.valuation() else {
            return Ok(Expansion {
                fraction: SuperFraction { delta, levels },
                certified_order: n,
                remainder_vanished: true,
            });
        };
        exp_sum += e;
        let k = match levels.last() {
            None => e,
            Some(prev) => e - prev.k - delta,
        };
        let width = k + delta - 1;
        if trusted - e < width {
            break;
        }
        let v = g.coeff(e).unwrap().clone();
        let vinv = v.inverse().ok_or_else(|| {
            HfracError::NonUnitLeadingCoefficient(v.to_string(), levels.len())
        })?;
        let unit = g.shift_left(e).expect("e is within the trusted order").scale(&vinv);
        let d = unit.invert().expect("leading coefficient is 1");
        let u = Poly::new(d.coeffs()[1..=width].to_vec());
        let one_plus_ux = TruncatedSeries::from_poly(&(Poly::one() + &u.shift_up(1)), d.order());
        g = one_plus_ux - &d;
        levels.push(SuperLevel { v, k, u });
    }
    Ok(Expansion {
        fraction: SuperFraction { delta, levels },
        certified_order: n.min(exp_sum.saturating_sub(1)),
        remainder_vanished: false,
    })
}

/// `v_0^n v_1^{n-1} ... v_{n-1}`; `None` if fewer than `n` values are known.
pub fn heilermann<R: Ring>(jf: &JFraction<R>, n: usize) -> Option<R> {
    if jf.v.len() < n {
        return None;
    }
    Some(
        (0..n).fold(R::one(), |acc, i| acc * &jf.v[i].pow((n - i) as u32)),
    )
}

/// Read a J-fraction off an H-fraction whose `k_j` all vanish.
pub fn as_j_fraction<R: Ring>(sf: &SuperFraction<R>) -> Option<JFraction<R>> {
    if sf.classify() != FractionClass::J {
        return None;
    }
    Some(JFraction {
        v: sf.levels.iter().map(|l| l.v.clone()).collect(),
        u: sf.levels.iter().map(|l| l.u.coeff(0)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qpoly, Rational};
    use crate::hankel::hankel_det;
    use crate::series::{named, NamedSeries};

    fn euler_ogf(order: usize) -> TruncatedSeries<Rational> {
        named(NamedSeries::TanPlusSec, order).scale_coeff_by_factorial()
    }

    #[test]
    fn geometric_series() {
        let f = TruncatedSeries::new(vec![Rational::one(); 11], 10);
        let ex = expand(&f, 2).unwrap();
        assert_eq!(
            ex.fraction.levels,
            vec![SuperLevel {
                v: Rational::one(),
                k: 0,
                u: qpoly(&[-1])
            }]
        );
        assert!(ex.remainder_vanished);
        assert_eq!(ex.certified_order, 10);
    }

    #[test]
    fn zero_series_gives_empty_fraction() {
        let ex = expand(&TruncatedSeries::<Rational>::zero(6), 2).unwrap();
        assert!(ex.fraction.is_empty());
        assert!(ex.fraction.evaluate(6).is_zero());
    }

    #[test]
    fn euler_h_fraction_k_pattern() {
        let ex = expand(&euler_ogf(40), 2).unwrap();
        let ks = ex.fraction.ks();
        assert!(ks.len() >= 12);
        for (j, k) in ks.iter().enumerate() {
            assert_eq!(*k, usize::from(j % 3 == 1), "k_{j}");
        }
        let vs: Vec<_> = ex.fraction.levels.iter().take(4).map(|l| l.v.clone()).collect();
        assert_eq!(vs, vec![q(1, 1), q(1, 1), q(9, 1), q(4, 1)]);
        assert_eq!(ex.fraction.levels[1].u, qpoly(&[-2, -4]));
    }

    #[test]
    fn euler_super_one_fraction_k_pattern() {
        let ex = expand(&euler_ogf(40), 1).unwrap();
        for (j, k) in ex.fraction.ks().iter().enumerate() {
            assert_eq!(*k, usize::from(j % 6 == 2), "k_{j}");
        }
    }

    #[test]
    fn round_trip_and_profile() {
        let f = euler_ogf(24);
        let ex = expand(&f, 2).unwrap();
        let back = ex.fraction.evaluate(24);
        assert_eq!(back.truncate(ex.certified_order), f.truncate(ex.certified_order));
        let p = ex.fraction.hankel_profile().unwrap();
        assert_eq!(&p.s[..7], &[0, 1, 3, 4, 5, 7, 8]);
        assert_eq!(&p.eps[..6], &[0, 0, 1, 1, 1, 2]);
        for n in 0..=8 {
            assert_eq!(p.det(n).unwrap(), hankel_det(f.coeffs(), n).unwrap(), "H_{n}");
        }
        assert_eq!(p.det(2), Some(Rational::zero()));
    }

    #[test]
    fn classification() {
        let e2 = expand(&euler_ogf(30), 2).unwrap().fraction;
        assert_eq!(e2.classify(), FractionClass::H);
        let e1 = expand(&euler_ogf(30), 1).unwrap().fraction;
        assert_eq!(e1.classify(), FractionClass::General);
        let cat = TruncatedSeries::new(
            [1, 1, 2, 5, 14, 42, 132].iter().map(|&c| Rational::from(c)).collect(),
            6,
        );
        assert_eq!(expand(&cat, 2).unwrap().fraction.classify(), FractionClass::J);
        assert_eq!(expand(&cat, 1).unwrap().fraction.classify(), FractionClass::S);
        assert_eq!(
            expand(&cat, 1).unwrap().fraction.hankel_profile(),
            Err(HfracError::NotAnHFraction(1))
        );
    }

    #[test]
    fn heilermann_on_catalan() {
        let cat: Vec<Rational> = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
            .iter()
            .map(|&c| Rational::from(c))
            .collect();
        let f = TruncatedSeries::new(cat.clone(), 10);
        let jf = as_j_fraction(&expand(&f, 2).unwrap().fraction).unwrap();
        for n in 0..=5 {
            assert_eq!(heilermann(&jf, n).unwrap(), Rational::one());
            assert_eq!(hankel_det(&cat, n).unwrap(), Rational::one());
        }
    }

    #[test]
    fn degree_bound_is_enforced() {
        let bad = SuperFraction::new(
            2,
            vec![SuperLevel {
                v: q(1, 1),
                k: 0,
                u: qpoly(&[1, 1]),
            }],
        );
        assert!(matches!(bad, Err(HfracError::DegreeBound { .. })));
    }

    #[test]
    fn json_shape() {
        let sf = SuperFraction::new(
            2,
            vec![SuperLevel {
                v: q(1, 2),
                k: 1,
                u: qpoly(&[-2, -4]),
            }],
        )
        .unwrap();
        let v = serde_json::to_value(&sf).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"delta": 2, "levels": [{"v": "1/2", "k": 1, "u": ["-2", "-4"]}]})
        );
    }
}
