use std::fmt;

use super::{Param, P};
use crate::contfrac::{CfError, GeneralizedCF};
use crate::exact::{q, Poly, Rational};

/// One operation of a derivation script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DStep {
    /// `x^2 -> x` on a fraction in `x^2`.
    Compress,
    /// `x -> x^2`
    Stretch,
    Even,
    Odd,
    Chop(usize),
    /// Chops at `head`, then at `period * i + o` for `o` in `offsets`,
    /// `i = 1, 2, ...`, while the fraction is long enough. Positions refer
    /// to the fraction as it is when the chop happens.
    ChopChain { head: Vec<usize>, period: usize, offsets: Vec<usize> },
    Haircut(Rational),
    /// `(V - s) / x`, or `(V - s) / (r x)` with `by_r`.
    SubtractDivide { s: Rational, by_r: bool },
    MultiplyByX,
    Normalize,
}

impl fmt::Display for DStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DStep::Compress => f.write_str("compress"),
            DStep::Stretch => f.write_str("stretch"),
            DStep::Even => f.write_str("even"),
            DStep::Odd => f.write_str("odd"),
            DStep::Chop(p) => write!(f, "chop({p})"),
            DStep::ChopChain { head, period, offsets } => {
                write!(f, "chop{head:?} then {period}i+{offsets:?}")
            }
            DStep::Haircut(a) => write!(f, "haircut({a})"),
            DStep::SubtractDivide { s, by_r: false } => write!(f, "(V-{s})/x"),
            DStep::SubtractDivide { s, by_r: true } => write!(f, "(V-{s})/(rx)"),
            DStep::MultiplyByX => f.write_str("times x"),
            DStep::Normalize => f.write_str("normalize"),
        }
    }
}

/// A script turning the fraction of `source` into the fraction of `target`.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub id: String,
    pub source: &'static str,
    pub target: &'static str,
    pub steps: Vec<DStep>,
    pub param_values: Vec<Param>,
    /// Levels of the source materialized before replaying.
    pub depth: usize,
    /// Fewest levels the result must have to count.
    pub min_levels: usize,
}

impl Derivation {
    fn new(source: &'static str, target: &'static str, steps: Vec<DStep>) -> Self {
        Derivation {
            id: format!("{source}->{target}"),
            source,
            target,
            steps,
            param_values: Vec::new(),
            depth: 24,
            min_levels: 6,
        }
    }

    fn over_r(mut self) -> Self {
        self.param_values = (1..=4).map(Param::R).collect();
        self
    }

    fn depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self
    }

    pub fn replay(&self, mut cf: GeneralizedCF<Rational>, param: &Param) -> Result<GeneralizedCF<Rational>, CfError> {
        for step in &self.steps {
            cf = match step {
                DStep::Compress => cf.compress()?,
                DStep::Stretch => cf.stretch()?,
                DStep::Even => cf.contract_even()?,
                DStep::Odd => cf.contract_odd()?,
                DStep::Chop(p) => cf.chop(*p)?,
                DStep::ChopChain { head, period, offsets } => chop_chain(cf, head, *period, offsets)?,
                DStep::Haircut(a) => cf.haircut(&P::constant(a.clone()))?,
                DStep::SubtractDivide { s, by_r } => {
                    let d = if *by_r {
                        Poly::monomial(Rational::from(param.r()), 1)
                    } else {
                        P::x()
                    };
                    cf.affine(&P::constant(s.clone()), &d)?
                }
                DStep::MultiplyByX => cf.multiply_value(&P::x())?,
                DStep::Normalize => cf.normalize()?,
            };
        }
        Ok(cf)
    }
}

/// Apply the chops of a chain in order. When the next position no longer
/// fits, the last two levels are still subject to change and are dropped.
fn chop_chain(
    mut cf: GeneralizedCF<Rational>,
    head: &[usize],
    period: usize,
    offsets: &[usize],
) -> Result<GeneralizedCF<Rational>, CfError> {
    let tail = (1..).flat_map(|i| offsets.iter().map(move |o| period * i + o));
    for p in head.iter().copied().chain(tail) {
        let len = cf.levels().len();
        if p + 2 > len {
            return Ok(cf.prefix(p.saturating_sub(2).min(len)));
        }
        cf = cf.chop(p)?;
    }
    unreachable!("the chain is infinite")
}

pub(super) fn derivations() -> Vec<Derivation> {
    use DStep::*;
    let sd = |n: i64, d: i64| SubtractDivide { s: q(n, d), by_r: false };
    vec![
        Derivation::new("Eq21", "Eq22", vec![ChopChain { head: vec![1], period: 4, offsets: vec![0, 1] }]).depth(48),
        Derivation::new("Eq21", "Thm1.1", vec![Even]).depth(36),
        Derivation::new("Eq22", "F7", vec![sd(1, 1)]),
        Derivation::new("Thm4.1", "F7", vec![sd(0, 1)]),
        Derivation::new("F7", "F10a", vec![Haircut(q(1, 1)), sd(1, 1)]),
        Derivation::new("Eq23", "F10a", vec![ChopChain { head: vec![3], period: 4, offsets: vec![2, 3] }]).depth(48),
        Derivation::new("Eq23", "F10", vec![Even]).depth(36),
        Derivation::new("F1", "F2", vec![Compress, Even]).over_r(),
        Derivation::new("F1", "F3", vec![Compress, Odd, sd(1, 1)]).over_r(),
        Derivation::new("F1", "F8", vec![Chop(1), SubtractDivide { s: q(1, 1), by_r: true }, Even]).over_r(),
        Derivation::new("Eq4", "F4", vec![sd(0, 1)]),
        Derivation::new("F4", "F5", vec![Compress, Even]),
        Derivation::new("F4", "F6", vec![Compress, Odd, sd(1, 1)]),
        Derivation::new("F6", "F11", vec![Stretch, MultiplyByX]),
        Derivation::new("LambertTan", "F12", vec![Normalize, sd(0, 1)]),
        Derivation::new("F12", "f13", vec![Compress]),
        Derivation::new("f13", "F13", vec![Even]),
        Derivation::new("F13", "F15", vec![Stretch, MultiplyByX]),
        Derivation::new("F12", "F14", vec![Odd, sd(1, 1)]),
        Derivation::new("F21", "F14", vec![Even, MultiplyByX]),
        Derivation::new("F14", "F22", vec![sd(0, 1), Compress]),
        Derivation::new("F21", "f22", vec![Compress]),
        Derivation::new("f22", "F22", vec![Even]),
        Derivation::new("f22", "F23", vec![Odd, sd(1, 3)]),
        Derivation::new("f23", "F23", vec![Even]),
        Derivation::new("f23", "F24", vec![Odd, sd(2, 15)]),
        Derivation::new("Thm6.2", "F16", vec![sd(0, 1), Normalize]),
        Derivation::new("f17", "F16", vec![Odd, sd(1, 1)]),
        Derivation::new("f17", "F17", vec![Even]),
        Derivation::new("f18", "F18", vec![Even]),
        Derivation::new("f18", "F19", vec![Odd, sd(1, 2)]),
        Derivation::new("f19", "F19", vec![Even]),
        Derivation::new("f19", "F20", vec![Odd, sd(1, 3)]),
    ]
}
