//! Generalized continued fractions `b0 + a1/(b1 + a2/(b2 + ...))` with
//! polynomial parts, their truncated-series values, and the contraction
//! transforms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exact::{Poly, Ring};
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CfError {
    #[error("denominator at level {0} has no invertible constant term")]
    NonInvertibleDenominator(usize),
    #[error("depth {depth} does not certify order {order}")]
    DepthInsufficient { depth: usize, order: usize },
    #[error("transform needs {needed} levels, only {available} available")]
    InsufficientLevels { needed: usize, available: usize },
    #[error("exact polynomial division failed at level {0}")]
    DivisionFails(usize),
    #[error("haircut constant makes the first numerator vanish")]
    AlphaDegenerate,
    #[error("equivalence factor {0} is zero")]
    ZeroFactor(usize),
    #[error("level {0} has a zero partial numerator")]
    ZeroNumerator(usize),
    #[error("odd power present at level {0}")]
    OddPower(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One partial numerator and denominator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct Level<R: Ring> {
    pub a: Poly<R>,
    pub b: Poly<R>,
}

impl<R: Ring> Level<R> {
    pub fn new(a: Poly<R>, b: Poly<R>) -> Self {
        Level { a, b }
    }
}

pub type LevelRule<R> = Arc<dyn Fn(usize) -> Level<R> + Send + Sync>;

/// An infinite coefficient rule `j -> (a_j, b_j)` for `j >= 1`, with
/// explicit first values that take precedence over the rule.
#[derive(Clone)]
pub struct CfPattern<R: Ring> {
    pub b0: Poly<R>,
    pub a_overrides: BTreeMap<usize, Poly<R>>,
    pub b_overrides: BTreeMap<usize, Poly<R>>,
    rule: LevelRule<R>,
}

impl<R: Ring> CfPattern<R> {
    pub fn new(b0: Poly<R>, rule: impl Fn(usize) -> Level<R> + Send + Sync + 'static) -> Self {
        CfPattern {
            b0,
            a_overrides: BTreeMap::new(),
            b_overrides: BTreeMap::new(),
            rule: Arc::new(rule),
        }
    }

    pub fn with_a(mut self, j: usize, a: Poly<R>) -> Self {
        self.a_overrides.insert(j, a);
        self
    }

    pub fn with_b(mut self, j: usize, b: Poly<R>) -> Self {
        self.b_overrides.insert(j, b);
        self
    }

    pub fn level(&self, j: usize) -> Level<R> {
        assert!(j >= 1, "levels are numbered from 1");
        let a = self.a_overrides.get(&j).cloned();
        let b = self.b_overrides.get(&j).cloned();
        match (a, b) {
            (Some(a), Some(b)) => Level { a, b },
            (a, b) => {
                let l = (self.rule)(j);
                Level {
                    a: a.unwrap_or(l.a),
                    b: b.unwrap_or(l.b),
                }
            }
        }
    }

    /// The rule's own value, ignoring overrides.
    pub fn raw_level(&self, j: usize) -> Level<R> {
        (self.rule)(j)
    }
}

impl<R: Ring> fmt::Debug for CfPattern<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CfPattern")
            .field("b0", &self.b0)
            .field("a_overrides", &self.a_overrides)
            .field("b_overrides", &self.b_overrides)
            .finish_non_exhaustive()
    }
}

/// A continued fraction given by a materialized prefix of levels and,
/// optionally, the pattern that continues it.
#[derive(Clone)]
pub struct GeneralizedCF<R: Ring> {
    b0: Poly<R>,
    levels: Vec<Level<R>>,
    pattern: Option<Arc<CfPattern<R>>>,
}

/// A value together with the order to which it is known to be exact.
#[derive(Debug, Clone, PartialEq)]
pub struct Certified<R: Ring> {
    pub value: TruncatedSeries<R>,
    pub certified_order: usize,
    pub depth: usize,
}

impl<R: Ring> GeneralizedCF<R> {
    /// A finite fraction.
    pub fn new(b0: Poly<R>, levels: Vec<Level<R>>) -> Result<Self, CfError> {
        if let Some(j) = levels.iter().position(|l| l.a.is_zero()) {
            return Err(CfError::ZeroNumerator(j + 1));
        }
        Ok(GeneralizedCF {
            b0,
            levels,
            pattern: None,
        })
    }

    pub fn from_pattern(pattern: CfPattern<R>) -> Self {
        GeneralizedCF {
            b0: pattern.b0.clone(),
            levels: Vec::new(),
            pattern: Some(Arc::new(pattern)),
        }
        .materialize(0)
    }

    pub fn constant(b0: Poly<R>) -> Self {
        GeneralizedCF {
            b0,
            levels: Vec::new(),
            pattern: None,
        }
    }

    pub fn b0(&self) -> &Poly<R> {
        &self.b0
    }

    pub fn levels(&self) -> &[Level<R>] {
        &self.levels
    }

    pub fn pattern(&self) -> Option<&CfPattern<R>> {
        self.pattern.as_deref()
    }

    /// True when no pattern continues the materialized levels.
    pub fn is_finite(&self) -> bool {
        self.pattern.is_none()
    }

    /// Level `j` (1-based), taken from the prefix or generated from the
    /// pattern. `None` past the end of a finite fraction.
    pub fn level(&self, j: usize) -> Option<Level<R>> {
        if j == 0 {
            return None;
        }
        if let Some(l) = self.levels.get(j - 1) {
            return Some(l.clone());
        }
        self.pattern.as_ref().map(|p| p.level(j))
    }

    /// Ensure at least `depth` levels are stored. A zero numerator coming
    /// from the pattern ends the fraction there.
    pub fn materialize(mut self, depth: usize) -> Self {
        while self.levels.len() < depth {
            let Some(p) = &self.pattern else { break };
            let l = p.level(self.levels.len() + 1);
            if l.a.is_zero() {
                self.pattern = None;
                break;
            }
            self.levels.push(l);
        }
        // a zero right after the prefix also terminates
        if let Some(p) = &self.pattern {
            if p.level(self.levels.len() + 1).a.is_zero() {
                self.pattern = None;
            }
        }
        self
    }

    /// The first `depth` levels as a finite fraction.
    pub fn prefix(&self, depth: usize) -> Self {
        let full = self.clone().materialize(depth);
        GeneralizedCF {
            b0: full.b0,
            levels: full.levels.into_iter().take(depth).collect(),
            pattern: None,
        }
    }

    /// Number of levels of a finite fraction.
    pub fn len(&self) -> Option<usize> {
        self.is_finite().then_some(self.levels.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// Value using levels `1..=depth` with tail 0.
    pub fn evaluate(&self, depth: usize, order: usize) -> Result<TruncatedSeries<R>, CfError> {
        let cf = self.clone().materialize(depth);
        let depth = depth.min(cf.levels.len());
        let mut work = order;
        // valuation division may cost orders; retry with slack
        for _ in 0..4 {
            match cf.eval_at(depth, work)? {
                v if v.order() >= order => return Ok(v.truncate(order)),
                v => work += order - v.order() + 1,
            }
        }
        Err(CfError::NonInvertibleDenominator(depth))
    }

    // convergents P/Q mod x^order, one division at the end
    fn eval_at(&self, depth: usize, order: usize) -> Result<TruncatedSeries<R>, CfError> {
        let mut p_prev = TruncatedSeries::from_poly(&Poly::one(), order);
        let mut q_prev = TruncatedSeries::zero(order);
        let mut p = TruncatedSeries::from_poly(&self.b0, order);
        let mut q = TruncatedSeries::from_poly(&Poly::one(), order);
        for l in &self.levels[..depth] {
            let a = TruncatedSeries::from_poly(&l.a, order);
            let b = TruncatedSeries::from_poly(&l.b, order);
            let p_next = b.clone() * &p + &(a.clone() * &p_prev);
            let q_next = b * &q + &(a * &q_prev);
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }
        p.divide(&q).map_err(|_| CfError::NonInvertibleDenominator(depth))
    }

    /// Value at `depth`, accepted only if depth `depth + 1` agrees to `order`.
    pub fn evaluate_certified(
        &self,
        depth: usize,
        order: usize,
    ) -> Result<TruncatedSeries<R>, CfError> {
        let cf = self.clone().materialize(depth + 1);
        let v = cf.evaluate(depth, order)?;
        if cf.is_finite() && cf.levels.len() <= depth {
            return Ok(v);
        }
        let w = cf.evaluate(depth + 1, order)?;
        if v == w {
            Ok(v)
        } else {
            Err(CfError::DepthInsufficient { depth, order })
        }
    }

    /// Search for a depth that certifies `order`.
    pub fn evaluate_auto(&self, order: usize) -> Result<TruncatedSeries<R>, CfError> {
        let cap = 4 * order + 8;
        let mut depth = 4;
        loop {
            match self.evaluate_certified(depth, order) {
                Err(CfError::DepthInsufficient { .. }) if depth < cap => {
                    depth = (depth * 2).min(cap);
                }
                other => return other,
            }
        }
    }

    /// Value at `depth` plus the largest order on which depths `depth` and
    /// `depth + 1` agree.
    pub fn certified_value(&self, depth: usize, order: usize) -> Result<Certified<R>, CfError> {
        let cf = self.clone().materialize(depth + 1);
        let v = cf.evaluate(depth, order)?;
        if cf.is_finite() && cf.levels.len() <= depth {
            return Ok(Certified {
                value: v,
                certified_order: order,
                depth,
            });
        }
        let w = cf.evaluate(depth + 1, order)?;
        let certified_order = match v.first_mismatch(&w) {
            None => order,
            Some(m) if m.n == 0 => {
                return Err(CfError::DepthInsufficient { depth, order: 0 })
            }
            Some(m) => m.n - 1,
        };
        Ok(Certified {
            value: v,
            certified_order,
            depth,
        })
    }

    fn need(&self, needed: usize) -> Result<(), CfError> {
        if self.levels.len() < needed {
            return Err(CfError::InsufficientLevels {
                needed,
                available: self.levels.len(),
            });
        }
        Ok(())
    }

    fn finite(b0: Poly<R>, levels: Vec<Level<R>>) -> Result<Self, CfError> {
        GeneralizedCF::new(b0, levels)
    }

    // 1-based accessors on the materialized prefix
    fn a(&self, j: usize) -> &Poly<R> {
        &self.levels[j - 1].a
    }

    fn b(&self, j: usize) -> &Poly<R> {
        if j == 0 {
            &self.b0
        } else {
            &self.levels[j - 1].b
        }
    }

    /// Even contraction of the materialized levels; `floor(L/2)` levels
    /// result.
    pub fn contract_even(&self) -> Result<Self, CfError> {
        self.need(2)?;
        let m = self.levels.len() / 2;
        let mut out = Vec::with_capacity(m);
        out.push(Level::new(
            self.a(1).clone() * self.b(2),
            self.b(1).clone() * self.b(2) + self.a(2),
        ));
        for j in 2..=m {
            let a = if j == 2 {
                -(self.a(2).clone() * self.a(3) * self.b(4))
            } else {
                -(self.a(2 * j - 2).clone()
                    * self.a(2 * j - 1)
                    * self.b(2 * j - 4)
                    * self.b(2 * j))
            };
            let b = self.b(2 * j - 2).clone() * self.b(2 * j - 1) * self.b(2 * j)
                + &(self.a(2 * j).clone() * self.b(2 * j - 2))
                + &(self.a(2 * j - 1).clone() * self.b(2 * j));
            out.push(Level::new(a, b));
        }
        Self::finite(self.b0.clone(), out)
    }

    /// Odd contraction; `floor((L-1)/2)` levels result.
    pub fn contract_odd(&self) -> Result<Self, CfError> {
        self.need(3)?;
        let m = (self.levels.len() - 1) / 2;
        let b1 = self.b(1);
        let b0 = (self.b0.clone() * b1 + self.a(1))
            .exact_div(b1)
            .ok_or(CfError::DivisionFails(0))?;
        let mut out = Vec::with_capacity(m);
        let a1 = (self.a(1).clone() * self.a(2) * self.b(3))
            .exact_div(b1)
            .ok_or(CfError::DivisionFails(1))?;
        out.push(Level::new(
            -a1,
            b1.clone() * self.b(2) * self.b(3)
                + &(self.a(3).clone() * b1)
                + &(self.a(2).clone() * self.b(3)),
        ));
        for j in 2..=m {
            let a = -(self.a(2 * j - 1).clone()
                * self.a(2 * j)
                * self.b(2 * j - 3)
                * self.b(2 * j + 1));
            let b = self.b(2 * j - 1).clone() * self.b(2 * j) * self.b(2 * j + 1)
                + &(self.a(2 * j + 1).clone() * self.b(2 * j - 1))
                + &(self.a(2 * j).clone() * self.b(2 * j + 1));
            out.push(Level::new(a, b));
        }
        Self::finite(b0, out)
    }

    /// Chop contraction applied to the tail that starts at `b_{p-1}`;
    /// `p = 1` is the contraction at the first position.
    pub fn chop(&self, p: usize) -> Result<Self, CfError> {
        assert!(p >= 1, "chop positions start at 1");
        self.need(p + 2)?;
        let bp = self.b(p);
        let head = (self.b(p - 1).clone() * bp + self.a(p))
            .exact_div(bp)
            .ok_or(CfError::DivisionFails(p - 1))?;
        let ap = (self.a(p).clone() * self.a(p + 1))
            .exact_div(bp)
            .ok_or(CfError::DivisionFails(p))?;
        let mid = Level::new(-ap, bp.clone() * self.b(p + 1) + self.a(p + 1));
        let next = Level::new(self.a(p + 2).clone() * bp, self.b(p + 2).clone());

        let mut b0 = self.b0.clone();
        let mut out: Vec<Level<R>> = self.levels[..p - 1].to_vec();
        if p == 1 {
            b0 = head;
        } else {
            out[p - 2].b = head;
        }
        out.push(mid);
        out.push(next);
        out.extend(self.levels[p + 2..].iter().cloned());
        Self::finite(b0, out)
    }

    /// Haircut contraction with constant `alpha`.
    pub fn haircut(&self, alpha: &Poly<R>) -> Result<Self, CfError> {
        self.need(3)?;
        let (a1, b1, a2, b2) = (self.a(1), self.b(1), self.a(2), self.b(2));
        let d = a1.clone() - &(b1.clone() * alpha);
        if d.is_zero() {
            return Err(CfError::AlphaDegenerate);
        }
        let mut out = Vec::with_capacity(self.levels.len());
        out.push(Level::new(d.clone(), b1.clone()));
        out.push(Level::new(
            a1.clone() * a2,
            b2.clone() * a1 - &(b1.clone() * b2 * alpha) - &(a2.clone() * alpha),
        ));
        out.push(Level::new(self.a(3).clone() * &d, self.b(3).clone()));
        out.extend(self.levels[3..].iter().cloned());
        Self::finite(self.b0.clone() + alpha, out)
    }

    /// `a_j -> r_{j-1} r_j a_j`, `b_j -> r_j b_j` with `r_0 = 1`.
    pub fn equivalence_scale(&self, factors: &[Poly<R>]) -> Result<Self, CfError> {
        self.need(factors.len())?;
        if let Some(j) = factors.iter().position(|r| r.is_zero()) {
            return Err(CfError::ZeroFactor(j + 1));
        }
        let mut out = self.levels.clone();
        let mut prev = Poly::one();
        for (j, r) in factors.iter().enumerate() {
            out[j].a = out[j].a.clone() * &prev * r;
            out[j].b = out[j].b.clone() * r;
            prev = r.clone();
        }
        if let Some(l) = out.get_mut(factors.len()) {
            l.a = l.a.clone() * &prev;
        }
        Self::finite(self.b0.clone(), out)
    }

    /// Divide by the lowest monomial of every `b_j` (`j >= 1`), so each
    /// denominator with a nonzero constant term gets constant term 1.
    pub fn normalize(&self) -> Result<Self, CfError> {
        let mut out = Vec::with_capacity(self.levels.len());
        let mut prev = Poly::one();
        for (j, l) in self.levels.iter().enumerate() {
            let Some(v) = l.b.valuation() else {
                return Err(CfError::DivisionFails(j + 1));
            };
            let m = Poly::monomial(l.b.coeff(v), v);
            let b = l.b.exact_div(&m).ok_or(CfError::DivisionFails(j + 1))?;
            let a = l
                .a
                .exact_div(&(prev.clone() * &m))
                .ok_or(CfError::DivisionFails(j + 1))?;
            out.push(Level::new(a, b));
            prev = m;
        }
        Self::finite(self.b0.clone(), out)
    }

    /// The fraction whose value is `(V - s) / d`.
    pub fn affine(&self, s: &Poly<R>, d: &Poly<R>) -> Result<Self, CfError> {
        let b0 = (self.b0.clone() - s)
            .exact_div(d)
            .ok_or(CfError::DivisionFails(0))?;
        let mut out = self.levels.clone();
        if let Some(l) = out.first_mut() {
            l.a = l.a.exact_div(d).ok_or(CfError::DivisionFails(1))?;
        }
        Self::finite(b0, out)
    }

    /// The fraction whose value is `p · V`.
    pub fn multiply_value(&self, p: &Poly<R>) -> Result<Self, CfError> {
        let mut out = self.levels.clone();
        if let Some(l) = out.first_mut() {
            l.a = l.a.clone() * p;
        }
        Self::finite(self.b0.clone() * p, out)
    }

    /// Replace `x` by `x^2` everywhere.
    pub fn stretch(&self) -> Result<Self, CfError> {
        let out = self
            .levels
            .iter()
            .map(|l| Level::new(l.a.stretch(), l.b.stretch()))
            .collect();
        Self::finite(self.b0.stretch(), out)
    }

    /// Replace `x^2` by `x`; every part must be even.
    pub fn compress(&self) -> Result<Self, CfError> {
        let b0 = self.b0.compress().ok_or(CfError::OddPower(0))?;
        let out = self
            .levels
            .iter()
            .enumerate()
            .map(|(j, l)| {
                Ok(Level::new(
                    l.a.compress().ok_or(CfError::OddPower(j + 1))?,
                    l.b.compress().ok_or(CfError::OddPower(j + 1))?,
                ))
            })
            .collect::<Result<Vec<_>, CfError>>()?;
        Self::finite(b0, out)
    }
}

impl<R: Ring> PartialEq for GeneralizedCF<R> {
    /// Structural equality of the materialized parts.
    fn eq(&self, other: &Self) -> bool {
        self.b0 == other.b0 && self.levels == other.levels
    }
}

impl<R: Ring> fmt::Debug for GeneralizedCF<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> fmt::Display for GeneralizedCF<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.b0)?;
        for l in &self.levels {
            write!(f, " + ({})/({})", l.a, l.b)?;
        }
        if self.pattern.is_some() {
            write!(f, " + ...")?;
        }
        Ok(())
    }
}

/// Wire form of a finite fraction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct CfDescription<R: Ring> {
    pub b0: Poly<R>,
    pub levels: Vec<Level<R>>,
}

impl<R: Ring> From<&GeneralizedCF<R>> for CfDescription<R> {
    fn from(cf: &GeneralizedCF<R>) -> Self {
        CfDescription {
            b0: cf.b0.clone(),
            levels: cf.levels.clone(),
        }
    }
}

impl<R: Ring> TryFrom<CfDescription<R>> for GeneralizedCF<R> {
    type Error = CfError;
    fn try_from(d: CfDescription<R>) -> Result<Self, CfError> {
        GeneralizedCF::new(d.b0, d.levels)
    }
}

/// `v0/(1 + u1 x) - v1 x^2/(1 + u2 x) - ...` with constant `u_j`, `v_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize", deserialize = "R: Deserialize<'de>"))]
pub struct JFraction<R: Ring> {
    pub v: Vec<R>,
    pub u: Vec<R>,
}

impl<R: Ring> JFraction<R> {
    pub fn to_cf(&self) -> Result<GeneralizedCF<R>, CfError> {
        let n = self.v.len().min(self.u.len());
        let levels = (0..n)
            .map(|j| {
                let a = if j == 0 {
                    Poly::constant(self.v[0].clone())
                } else {
                    Poly::monomial(-self.v[j].clone(), 2)
                };
                Level::new(a, Poly::new(vec![R::one(), self.u[j].clone()]))
            })
            .collect();
        GeneralizedCF::new(Poly::zero(), levels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial_int, q, qpoly, Rational};

    type P = Poly<Rational>;

    fn eq22() -> GeneralizedCF<Rational> {
        GeneralizedCF::from_pattern(
            CfPattern::new(qpoly(&[1]), |k| {
                let c = binomial_int(k as i64, 2);
                Level::new(
                    P::monomial(-Rational::from(c), 2),
                    qpoly(&[1, -(k as i64)]),
                )
            })
            .with_a(1, qpoly(&[0, 1])),
        )
    }

    fn ints(v: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(v.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    #[test]
    fn euler_j_fraction_value() {
        let v = eq22().evaluate_auto(9).unwrap();
        assert_eq!(v, ints(&[1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936], 9));
    }

    #[test]
    fn empty_fraction_is_b0() {
        let cf = GeneralizedCF::constant(qpoly(&[1]));
        assert_eq!(cf.evaluate_auto(5).unwrap(), ints(&[1], 5));
    }

    #[test]
    fn secant_s_fraction() {
        let cf = GeneralizedCF::from_pattern(
            CfPattern::new(P::zero(), |k| {
                let c = ((k - 1) * (k - 1)) as i64;
                Level::new(P::monomial(Rational::from(-c), 2), qpoly(&[1]))
            })
            .with_a(1, qpoly(&[1])),
        );
        let v = cf.evaluate_auto(8).unwrap();
        assert_eq!(v, ints(&[1, 0, 1, 0, 5, 0, 61, 0, 1385], 8));
    }

    #[test]
    fn shallow_depth_is_not_certified() {
        assert!(matches!(
            eq22().evaluate_certified(2, 9),
            Err(CfError::DepthInsufficient { .. })
        ));
        let c = eq22().certified_value(2, 9).unwrap();
        assert!(c.certified_order < 9);
        let exact = eq22().evaluate_auto(9).unwrap();
        assert_eq!(c.value.truncate(c.certified_order), exact.truncate(c.certified_order));
    }

    #[test]
    fn zero_numerator_terminates_pattern() {
        let cf = GeneralizedCF::from_pattern(CfPattern::new(P::zero(), |k| {
            let a = if k < 3 { qpoly(&[0, 1]) } else { P::zero() };
            Level::new(a, qpoly(&[1]))
        }));
        let cf = cf.materialize(10);
        assert_eq!(cf.len(), Some(2));
    }

    #[test]
    fn s_fraction_contractions_match_the_b_equal_one_forms() {
        // a_j = c_j x with b_j = 1
        let a: Vec<P> = (1..=7).map(|j| P::monomial(q(j, 1), 1)).collect();
        let cf = GeneralizedCF::new(
            P::zero(),
            a.iter().map(|a| Level::new(a.clone(), qpoly(&[1]))).collect(),
        )
        .unwrap();
        let e = cf.contract_even().unwrap();
        let one = qpoly(&[1]);
        assert_eq!(e.levels()[0], Level::new(a[0].clone(), one.clone() + &a[1]));
        assert_eq!(
            e.levels()[1],
            Level::new(-(a[1].clone() * &a[2]), one.clone() + &a[2] + &a[3])
        );
        let o = cf.contract_odd().unwrap();
        assert_eq!(o.b0(), &a[0]);
        assert_eq!(
            o.levels()[0],
            Level::new(-(a[0].clone() * &a[1]), one.clone() + &a[1] + &a[2])
        );
        for t in [e, o] {
            assert_eq!(t.evaluate(10, 5).unwrap(), cf.evaluate(10, 5).unwrap());
        }
    }

    #[test]
    fn odd_contraction_needs_exact_division() {
        let cf = GeneralizedCF::new(
            P::zero(),
            vec![
                Level::new(qpoly(&[1]), qpoly(&[1, 1])),
                Level::new(qpoly(&[0, 1]), qpoly(&[1])),
                Level::new(qpoly(&[0, 1]), qpoly(&[1])),
            ],
        )
        .unwrap();
        assert_eq!(cf.contract_odd().unwrap_err(), CfError::DivisionFails(0));
    }

    #[test]
    fn haircut_rejects_degenerate_alpha() {
        let cf = GeneralizedCF::new(
            P::zero(),
            vec![
                Level::new(qpoly(&[2]), qpoly(&[1])),
                Level::new(qpoly(&[0, 1]), qpoly(&[1])),
                Level::new(qpoly(&[0, 1]), qpoly(&[1])),
            ],
        )
        .unwrap();
        assert_eq!(cf.haircut(&qpoly(&[2])).unwrap_err(), CfError::AlphaDegenerate);
        let h = cf.haircut(&qpoly(&[1])).unwrap();
        assert_eq!(h.evaluate(3, 6).unwrap(), cf.evaluate(3, 6).unwrap());
    }

    #[test]
    fn unit_equivalence_is_identity() {
        let cf = eq22().prefix(6);
        let same = cf.equivalence_scale(&vec![qpoly(&[1]); 6]).unwrap();
        assert_eq!(same, cf);
        assert_eq!(
            cf.equivalence_scale(&[qpoly(&[1]), P::zero()]).unwrap_err(),
            CfError::ZeroFactor(2)
        );
    }

    #[test]
    fn json_round_trip() {
        let cf = eq22().prefix(3);
        let d = CfDescription::from(&cf);
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.starts_with(r#"{"b0":["1"],"levels":[{"a":["0","1"],"b":["1","-1"]}"#));
        let back: CfDescription<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(GeneralizedCF::try_from(back).unwrap(), cf);
    }

    #[test]
    fn j_fraction_to_cf() {
        // Catalan numbers: v_j = 1, u_1 = -1, u_j = -2
        let jf = JFraction {
            v: vec![q(1, 1); 6],
            u: std::iter::once(q(-1, 1)).chain(std::iter::repeat(q(-2, 1))).take(6).collect(),
        };
        let v = jf.to_cf().unwrap().evaluate(6, 5).unwrap();
        assert_eq!(v, ints(&[1, 1, 2, 5, 14, 42], 5));
    }
}
