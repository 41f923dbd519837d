//! Registry of the continued fractions and Hankel determinants for the
//! Euler numbers, with a verification engine.
//!
//! Every entry pairs a target series recipe with either a coefficient
//! pattern for its continued fraction or a closed form for its Hankel
//! determinants. Derivations replay contraction scripts from one
//! registered fraction to another.

mod derivations;
mod determinants;
mod fractions;
mod parse;

use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contfrac::{CfError, CfPattern, GeneralizedCF, Level};
use crate::euler::{en_neg1_closed, neg1_sequence};
use crate::exact::{binomial_int, Poly, QPolynomial, Rational, Ring};
use crate::hankel::{hankel_sequence, HankelError};
use crate::hfrac::{expand, FractionClass, HfracError};
use crate::perms::{self, PermError};
use crate::series::{named, NamedSeries, SeriesError, Transform, TruncatedSeries};

pub use derivations::{DStep, Derivation};
pub use parse::parse_poly;

type P = Poly<Rational>;

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("`{0}` has no continued fraction pattern")]
    NotAFraction(String),
    #[error("`{0}` has no determinant closed form")]
    NotADeterminant(String),
    #[error("`{id}` does not accept parameter `{param}`")]
    BadParameter { id: String, param: String },
    #[error("target series reaches only order {got}, {wanted} requested")]
    TargetTooShort { wanted: usize, got: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Hankel(#[from] HankelError),
    #[error(transparent)]
    Hfrac(#[from] HfracError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Fraction,
    Determinant,
}

/// Parameter of an entry: the secant power `r` or the `q` of a q-analog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    None,
    R(u32),
    Q(Rational),
}

impl Param {
    fn r(&self) -> i64 {
        match self {
            Param::R(r) => *r as i64,
            _ => 1,
        }
    }

    fn q(&self) -> Rational {
        match self {
            Param::Q(q) => q.clone(),
            _ => Rational::one(),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::None => Ok(()),
            Param::R(r) => write!(f, "r={r}"),
            Param::Q(q) => write!(f, "q={q}"),
        }
    }
}

impl std::str::FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Param::None);
        }
        if let Some(v) = s.strip_prefix("r=") {
            let r: u32 = v.parse().map_err(|_| format!("bad r in `{s}`"))?;
            if r == 0 {
                return Err("r must be positive".into());
            }
            return Ok(Param::R(r));
        }
        if let Some(v) = s.strip_prefix("q=") {
            return Ok(Param::Q(v.parse().map_err(|_| format!("bad q in `{s}`"))?));
        }
        Err(format!("expected r=<n> or q=<rational>, got `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    None,
    R,
    Q,
}

/// Starting series of a target recipe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    /// Taylor coefficients of a named function.
    Named(NamedSeries),
    /// `sec(x)^r`.
    SecPow,
    /// `Σ_n Σ_k C(n-k,k) k! x^n`.
    Neg1,
    /// `Σ E_n(q) x^n` at `q ∈ {1, 0, -1}` from independent formulas.
    QEuler,
    /// `Σ Ê_{2n}(q) x^{2n}` at `q ∈ {1, 0}`.
    QSecantHat,
    /// `Σ Ê_{2n+1}(q) x^{2n+1}` at `q ∈ {1, 0}`.
    QTangentHat,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Named(n) => write!(f, "{n}"),
            Base::SecPow => f.write_str("sec_pow(r)"),
            Base::Neg1 => f.write_str("sum_k C(n-k,k) k!"),
            Base::QEuler => f.write_str("E_n(q)"),
            Base::QSecantHat => f.write_str("hat E_2n(q)"),
            Base::QTangentHat => f.write_str("hat E_2n+1(q)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    T(Transform),
    /// Multiply by `1/r`.
    DivideByR,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::T(Transform::ShiftLeft(m)) => write!(f, "shift_left({m})"),
            Step::T(Transform::SubstituteXSquared) => f.write_str("x^2->x"),
            Step::T(Transform::InterleaveZero) => f.write_str("x->x^2"),
            Step::T(Transform::EvenPart) => f.write_str("even_part"),
            Step::T(Transform::OddPart) => f.write_str("odd_part"),
            Step::T(Transform::ScaleByFactorial) => f.write_str("times_factorial"),
            Step::T(Transform::DivideByFactorial) => f.write_str("over_factorial"),
            Step::T(Transform::MultiplyByX) => f.write_str("times_x"),
            Step::T(Transform::NegateX) => f.write_str("x->-x"),
            Step::DivideByR => f.write_str("over_r"),
        }
    }
}

/// A target series: a base followed by reindexing steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub base: Base,
    pub steps: Vec<Step>,
}

impl Recipe {
    pub fn new(base: Base, steps: &[Step]) -> Self {
        Recipe {
            base,
            steps: steps.to_vec(),
        }
    }

    /// The target series to `order`.
    pub fn build(&self, param: &Param, order: usize) -> Result<TruncatedSeries<Rational>, CatalogError> {
        let mut s = base_series(self.base, param, 2 * order + 16)?;
        for step in &self.steps {
            s = match step {
                Step::T(t) => s.transform(*t)?,
                Step::DivideByR => s.scale(&Rational::from(param.r()).recip()),
            };
        }
        if s.order() < order {
            return Err(CatalogError::TargetTooShort {
                wanted: order,
                got: s.order(),
            });
        }
        Ok(s.truncate(order))
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for s in &self.steps {
            write!(f, " | {s}")?;
        }
        Ok(())
    }
}

fn ints(v: impl IntoIterator<Item = BigInt>, order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::new(v.into_iter().map(Rational::from).collect(), order)
}

fn catalan(n: usize) -> BigInt {
    binomial_int(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

fn motzkin(n: usize) -> BigInt {
    (0..=n / 2)
        .map(|k| binomial_int(n as i64, 2 * k as i64) * catalan(k))
        .sum()
}

fn base_series(base: Base, param: &Param, order: usize) -> Result<TruncatedSeries<Rational>, CatalogError> {
    let bad = || CatalogError::BadParameter {
        id: base.to_string(),
        param: param.to_string(),
    };
    let q = param.q();
    let q_is = |v: i64| q == Rational::from(v);
    Ok(match base {
        Base::Named(n) => named(n, order),
        Base::SecPow => named(NamedSeries::SecPow(param.r() as u32), order),
        Base::Neg1 => ints(neg1_sequence(order), order),
        Base::QEuler if q_is(1) => named(NamedSeries::TanPlusSec, order).scale_coeff_by_factorial(),
        Base::QEuler if q_is(0) => {
            let v = (0..=order).map(|n| if n == 0 { BigInt::from(1) } else { motzkin(n - 1) });
            ints(v, order)
        }
        Base::QEuler if q_is(-1) => ints((0..=order).map(en_neg1_closed), order),
        Base::QSecantHat if q_is(1) => named(NamedSeries::Sec, order).scale_coeff_by_factorial(),
        Base::QTangentHat if q_is(1) => named(NamedSeries::Tan, order).scale_coeff_by_factorial(),
        Base::QSecantHat if q_is(0) => {
            let v = (0..=order).map(|n| if n % 2 == 0 { catalan(n / 2) } else { BigInt::from(0) });
            ints(v, order)
        }
        Base::QTangentHat if q_is(0) => {
            let v = (0..=order).map(|n| if n % 2 == 1 { catalan(n / 2) } else { BigInt::from(0) });
            ints(v, order)
        }
        _ => return Err(bad()),
    })
}

pub type PatternFn = Arc<dyn Fn(&Param) -> CfPattern<Rational> + Send + Sync>;

/// One residue class of a determinant formula: `n = modulus·m + residue`
/// maps to `case(m, r)`.
pub type CaseFn = fn(usize, i64) -> Rational;

#[derive(Clone)]
pub struct ClosedForm {
    pub modulus: usize,
    pub cases: Vec<CaseFn>,
    /// Values stated separately, e.g. `H_0 = 1`.
    pub overrides: Vec<(usize, Rational)>,
}

impl ClosedForm {
    pub fn value(&self, n: usize, param: &Param) -> Rational {
        if let Some((_, v)) = self.overrides.iter().find(|(m, _)| *m == n) {
            return v.clone();
        }
        (self.cases[n % self.modulus])(n / self.modulus, param.r())
    }
}

/// The leading part of a fraction as printed: `b0` and `(a_j, b_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Displayed {
    pub b0: String,
    pub levels: Vec<(String, String)>,
}

/// A printed first value or rule that the registry replaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub part: &'static str,
    pub printed: &'static str,
    pub used: &'static str,
}

/// Difference between a printed prefix and the registered pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// `"b0"`, `"a3"`, `"b3"`, ...
    pub part: String,
    pub printed: String,
    pub pattern: String,
}

#[derive(Clone)]
pub struct FormulaEntry {
    pub id: String,
    pub kind: Kind,
    pub description: &'static str,
    pub target: Recipe,
    pub pattern: Option<PatternFn>,
    pub closed_form: Option<ClosedForm>,
    /// Class of `expand(target, 2)` as stated in the tables.
    pub class: Option<FractionClass>,
    pub param: ParamKind,
    pub param_values: Vec<Param>,
    pub displayed: Option<fn(&Param) -> Displayed>,
    pub corrections: Vec<Correction>,
}

impl FormulaEntry {
    fn check_param(&self, p: &Param) -> Result<(), CatalogError> {
        let ok = matches!(
            (self.param, p),
            (ParamKind::None, Param::None) | (ParamKind::R, Param::R(_)) | (ParamKind::Q, Param::Q(_))
        );
        if ok {
            Ok(())
        } else {
            Err(CatalogError::BadParameter {
                id: self.id.clone(),
                param: p.to_string(),
            })
        }
    }

    /// The pattern at `param` as a fraction.
    pub fn fraction(&self, param: &Param) -> Result<GeneralizedCF<Rational>, CatalogError> {
        self.check_param(param)?;
        let f = self
            .pattern
            .as_ref()
            .ok_or_else(|| CatalogError::NotAFraction(self.id.clone()))?;
        Ok(GeneralizedCF::from_pattern(f(param)))
    }

    fn default_param(&self) -> Param {
        self.param_values.first().cloned().unwrap_or(Param::None)
    }
}

impl fmt::Debug for FormulaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormulaEntry")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("target", &self.target.to_string())
            .field("class", &self.class)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchInfo {
    pub n: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub status: Status,
    pub first_mismatch: Option<MismatchInfo>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.id)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, ": at {} expected {}, got {}", m.n, m.expected, m.got)?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub reports: Vec<Report>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Report> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

// outcome of a check body before timing is attached
struct Outcome {
    mismatch: Option<MismatchInfo>,
    note: Option<String>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            mismatch: None,
            note: None,
        }
    }

    fn fail(note: impl Into<String>) -> Self {
        Outcome {
            mismatch: None,
            note: Some(note.into()),
        }
    }

    fn mismatch(n: usize, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        Outcome {
            mismatch: Some(MismatchInfo {
                n,
                expected: expected.to_string(),
                got: got.to_string(),
            }),
            note: None,
        }
    }

    fn passed(&self) -> bool {
        self.mismatch.is_none() && self.note.is_none()
    }
}

fn timed(id: String, body: impl FnOnce() -> Outcome) -> Report {
    let t = Instant::now();
    let o = body();
    let status = if o.passed() { Status::Pass } else { Status::Fail };
    Report {
        id,
        status,
        first_mismatch: o.mismatch,
        elapsed_ms: t.elapsed().as_millis() as u64,
        note: o.note,
    }
}

fn label(id: &str, p: &Param) -> String {
    match p {
        Param::None => id.to_string(),
        p => format!("{id}[{p}]"),
    }
}

fn level_string(l: &Level<Rational>) -> String {
    format!("{} | {}", l.a.display_in("x"), l.b.display_in("x"))
}

/// Default verification order and determinant size.
pub const DEFAULT_ORDER: usize = 30;
pub const DEFAULT_N_MAX: usize = 8;

/// Seeded random specializations of `(u1, u2, u3, u4)` with small
/// numerators and denominators.
pub fn random_specializations(seed: u64, count: usize) -> Vec<[Rational; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            std::array::from_fn(|_| {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=9);
                Rational::new(n, d)
            })
        })
        .collect()
}

/// All registered entries and derivation scripts.
#[derive(Clone)]
pub struct Registry {
    entries: Vec<FormulaEntry>,
    derivations: Vec<Derivation>,
}

impl Registry {
    pub fn standard() -> Self {
        let mut entries = fractions::entries();
        entries.extend(determinants::entries());
        Registry {
            entries,
            derivations: derivations::derivations(),
        }
    }

    pub fn entries(&self) -> &[FormulaEntry] {
        &self.entries
    }

    pub fn derivations(&self) -> &[Derivation] {
        &self.derivations
    }

    pub fn entry(&self, id: &str) -> Result<&FormulaEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
    }

    /// Mutable access, e.g. to plant a corrupted pattern in a test.
    pub fn entry_mut(&mut self, id: &str) -> Result<&mut FormulaEntry, CatalogError> {
        self.entries
            .iter_mut()
            .find(|e| e.id == id)
            .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
    }

    pub fn derivation(&self, id: &str) -> Result<&Derivation, CatalogError> {
        self.derivations
            .iter()
            .find(|d| d.id == id)
            .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
    }

    /// Ids of entries and derivations, in registry order.
    pub fn ids(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| e.id.clone())
            .chain(self.derivations.iter().map(|d| d.id.clone()))
            .collect()
    }

    /// Evaluate the pattern to `order` by depth stability and compare it
    /// with the target series; also checks the tabulated fraction class.
    pub fn verify_fraction(&self, id: &str, order: usize, param: &Param) -> Result<Report, CatalogError> {
        let e = self.entry(id)?;
        let cf = e.fraction(param)?;
        let target = e.target.build(param, order)?;
        Ok(timed(label(id, param), || {
            let got = match cf.evaluate_auto(order) {
                Ok(v) => v,
                Err(err) => return Outcome::fail(format!("evaluation failed: {err}")),
            };
            if let Some(m) = got.first_mismatch(&target) {
                return Outcome::mismatch(m.n, m.expected, m.got);
            }
            if let Some(class) = e.class {
                match expand(&target, 2) {
                    Ok(x) if x.fraction.classify() == class => {}
                    Ok(x) => {
                        return Outcome::fail(format!(
                            "expansion class {} but the table says {class}",
                            x.fraction.classify()
                        ))
                    }
                    Err(err) => return Outcome::fail(format!("expansion failed: {err}")),
                }
            }
            Outcome::pass()
        }))
    }

    /// Compare the closed form with oracle determinants for `0..=n_max`,
    /// then with the Hankel profile of the super 2-fraction wherever the
    /// profile fixes a value.
    pub fn verify_hankel(&self, id: &str, n_max: usize, param: &Param) -> Result<Report, CatalogError> {
        let e = self.entry(id)?;
        e.check_param(param)?;
        let cf = e
            .closed_form
            .clone()
            .ok_or_else(|| CatalogError::NotADeterminant(id.to_string()))?;
        let target = e.target.build(param, 2 * n_max + 2)?;
        let oracle = hankel_sequence(target.coeffs(), n_max)?;
        Ok(timed(label(id, param), || {
            for (n, h) in oracle.iter().enumerate() {
                let closed = cf.value(n, param);
                if &closed != h {
                    return Outcome::mismatch(n, h, closed);
                }
            }
            let profile = expand(&target, 2).and_then(|x| x.fraction.hankel_profile());
            let profile = match profile {
                Ok(p) => p,
                Err(err) => return Outcome::fail(format!("profile unavailable: {err}")),
            };
            for n in 0..=n_max.min(profile.known_up_to()) {
                let v = profile.det(n).expect("within the known range");
                let closed = cf.value(n, param);
                if v != closed {
                    let mut o = Outcome::mismatch(n, closed, v);
                    o.note = Some("Hankel profile disagrees with the closed form".into());
                    return o;
                }
            }
            Outcome::pass()
        }))
    }

    /// Replay a derivation script and compare with the target pattern,
    /// level by level and by value.
    pub fn verify_derivation(&self, id: &str, param: &Param) -> Result<Report, CatalogError> {
        let d = self.derivation(id)?;
        let source = self.entry(d.source)?;
        let target = self.entry(d.target)?;
        let src = source.fraction(param)?;
        let tgt = target.fraction(param)?;
        let series = target.target.build(param, d.depth)?;
        Ok(timed(label(id, param), || {
            let derived = match d.replay(src.materialize(d.depth), param) {
                Ok(cf) => cf,
                Err(err) => return Outcome::fail(format!("script failed: {err}")),
            };
            let derived = match derived.normalize() {
                Ok(cf) => cf,
                Err(err) => return Outcome::fail(format!("normalization failed: {err}")),
            };
            let len = derived.levels().len();
            if len < d.min_levels {
                return Outcome::fail(format!(
                    "only {len} levels derived, {} expected",
                    d.min_levels
                ));
            }
            let want = tgt.materialize(len);
            if derived.b0() != want.b0() {
                return Outcome::mismatch(0, want.b0().display_in("x"), derived.b0().display_in("x"));
            }
            for (j, (g, w)) in derived.levels().iter().zip(want.levels()).enumerate() {
                if g != w {
                    return Outcome::mismatch(j + 1, level_string(w), level_string(g));
                }
            }
            match derived.certified_value(len.saturating_sub(1), series.order()) {
                Ok(c) => {
                    let upto = c.certified_order.min(series.order());
                    if let Some(m) = c.value.truncate(upto).first_mismatch(&series.truncate(upto)) {
                        return Outcome::mismatch(m.n, m.expected, m.got);
                    }
                    Outcome::pass()
                }
                Err(err) => Outcome::fail(format!("value check failed: {err}")),
            }
        }))
    }

    /// Printed prefix against the registered pattern.
    pub fn audit_display(&self, id: &str, param: &Param) -> Result<Vec<Discrepancy>, CatalogError> {
        let e = self.entry(id)?;
        let Some(shown) = e.displayed.map(|f| f(param)) else {
            return Ok(Vec::new());
        };
        let cf = e.fraction(param)?.materialize(shown.levels.len());
        let parse = |s: &str| parse_poly(s).unwrap_or_else(|err| panic!("{id}: {err}"));
        let mut out = Vec::new();
        let mut check = |part: String, printed: &str, have: &P| {
            if &parse(printed) != have {
                out.push(Discrepancy {
                    part,
                    printed: parse(printed).display_in("x"),
                    pattern: have.display_in("x"),
                });
            }
        };
        check("b0".into(), &shown.b0, cf.b0());
        for (j, ((a, b), l)) in shown.levels.iter().zip(cf.levels()).enumerate() {
            check(format!("a{}", j + 1), a, &l.a);
            check(format!("b{}", j + 1), b, &l.b);
        }
        Ok(out)
    }

    /// The check run by [`Registry::verify_all`] for one entry or
    /// derivation at one parameter.
    fn verify_one(&self, id: &str, param: &Param, order: usize, n_max: usize) -> Report {
        let run = || -> Result<Report, CatalogError> {
            if self.derivation(id).is_ok() {
                return self.verify_derivation(id, param);
            }
            match self.entry(id)?.kind {
                Kind::Fraction => self.verify_fraction(id, order, param),
                Kind::Determinant => self.verify_hankel(id, n_max, param),
            }
        };
        run().unwrap_or_else(|err| Report {
            id: label(id, param),
            status: Status::Fail,
            first_mismatch: None,
            elapsed_ms: 0,
            note: Some(err.to_string()),
        })
    }

    fn jobs(&self, filter: Option<&[String]>) -> Vec<(String, Param)> {
        let keep = |id: &str| filter.map_or(true, |f| f.iter().any(|x| x == id));
        let mut jobs = Vec::new();
        for e in &self.entries {
            if keep(&e.id) {
                let ps = if e.param_values.is_empty() { vec![Param::None] } else { e.param_values.clone() };
                jobs.extend(ps.into_iter().map(|p| (e.id.clone(), p)));
            }
        }
        for d in &self.derivations {
            if keep(&d.id) {
                let ps = if d.param_values.is_empty() { vec![Param::None] } else { d.param_values.clone() };
                jobs.extend(ps.into_iter().map(|p| (d.id.clone(), p)));
            }
        }
        jobs
    }

    /// Run every registered check, or only those whose id is in `filter`.
    /// Reports come back in registry order.
    pub fn verify_all(&self, order: usize, n_max: usize, filter: Option<&[String]>) -> Summary {
        let reports = self
            .jobs(filter)
            .par_iter()
            .map(|(id, p)| self.verify_one(id, p, order, n_max))
            .collect();
        Summary { reports }
    }

    /// Run the checks for one id at each of its default parameters.
    pub fn verify_id(&self, id: &str, order: usize, n_max: usize) -> Result<Summary, CatalogError> {
        if self.entry(id).is_err() {
            self.derivation(id)?;
        }
        Ok(self.verify_all(order, n_max, Some(&[id.to_string()])))
    }
}

fn standard() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(Registry::standard)
}

/// [`Registry::verify_fraction`] on the standard registry; `None` picks
/// the entry's first default parameter.
pub fn verify_fraction(id: &str, order: usize, param: Option<&Param>) -> Result<Report, CatalogError> {
    let reg = standard();
    let p = param.cloned().unwrap_or_else(|| reg.entry(id).map(|e| e.default_param()).unwrap_or(Param::None));
    reg.verify_fraction(id, order, &p)
}

pub fn verify_hankel(id: &str, n_max: usize, param: Option<&Param>) -> Result<Report, CatalogError> {
    let reg = standard();
    let p = param.cloned().unwrap_or_else(|| reg.entry(id).map(|e| e.default_param()).unwrap_or(Param::None));
    reg.verify_hankel(id, n_max, &p)
}

pub fn verify_derivation(id: &str, param: Option<&Param>) -> Result<Report, CatalogError> {
    let reg = standard();
    let p = param
        .cloned()
        .unwrap_or_else(|| reg.derivation(id).ok().and_then(|d| d.param_values.first().cloned()).unwrap_or(Param::None));
    reg.verify_derivation(id, &p)
}

pub fn verify_all(order: usize, n_max: usize) -> Summary {
    standard().verify_all(order, n_max, None)
}

/// Flajolet's fraction and the exponential fraction against enumeration at
/// seeded random specializations.
pub fn verify_random_specializations(seed: u64, count: usize, n_max: usize) -> Result<Summary, CatalogError> {
    let mut reports = Vec::new();
    for (i, u) in random_specializations(seed, count).iter().enumerate() {
        let u = [&u[0], &u[1], &u[2], &u[3]];
        let tag = format!("u=({}, {}, {}, {})", u[0], u[1], u[2], u[3]);
        let ok = perms::verify_flajolet_cf(n_max, u)?;
        reports.push(timed(format!("Thm4.1[seed={seed}#{i}]"), || {
            if ok { Outcome::pass() } else { Outcome::fail(tag.clone()) }
        }));
        let ok = perms::verify_exp_cf(n_max, u)?;
        reports.push(timed(format!("Thm6.2[seed={seed}#{i}]"), || {
            if ok { Outcome::pass() } else { Outcome::fail(tag.clone()) }
        }));
    }
    Ok(Summary { reports })
}

/// Evaluate every coefficient of a q-pattern at a rational `q`.
pub fn specialize_pattern(p: CfPattern<QPolynomial>, q: Rational) -> CfPattern<Rational> {
    let at = move |x: &Poly<QPolynomial>| -> P {
        Poly::new(x.coeffs().iter().map(|c| c.eval(&q)).collect())
    };
    let b0 = at(&p.b0);
    CfPattern::new(b0, move |j| {
        let l = p.level(j);
        Level::new(at(&l.a), at(&l.b))
    })
}

#[cfg(test)]
mod tests;
