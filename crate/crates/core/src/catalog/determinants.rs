use super::{ClosedForm, Correction, FormulaEntry, Kind, Param, ParamKind, Recipe, Step};
use crate::exact::{factorial, Rational, Ring};
use crate::series::{NamedSeries, Transform};

use super::Base;

fn f(n: i64) -> Rational {
    Rational::from(factorial(n as u64))
}

fn z(n: i64) -> Rational {
    Rational::from(n)
}

/// `2^e`, `e` possibly negative.
fn two(e: i64) -> Rational {
    let p = Rational::from(2).pow(e.unsigned_abs() as u32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn sign(e: i64) -> Rational {
    z(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `Π_{k=lo}^{hi} g(k)`, empty when `hi < lo`.
fn prod(lo: i64, hi: i64, g: impl Fn(i64) -> Rational) -> Rational {
    (lo..=hi).fold(Rational::one(), |acc, k| acc * g(k))
}

/// `r (r+1) ... (r+k-1)`
fn rising(r: i64, k: i64) -> Rational {
    prod(0, k - 1, |i| z(r + i))
}

fn sq(x: Rational) -> Rational {
    x.clone() * x
}

/// `Π_{j=1}^{hi} (2j+1)!^4`
fn odd_fact4(hi: i64) -> Rational {
    prod(1, hi, |j| sq(sq(f(2 * j + 1))))
}

/// `Π_{k=lo}^{hi} k!^2/(2k+1)!^2`
fn ratio_sq(lo: i64, hi: i64) -> Rational {
    prod(lo, hi, |k| sq(f(k) / f(2 * k + 1)))
}

fn det(
    id: &str,
    description: &'static str,
    target: Recipe,
    modulus: usize,
    cases: Vec<super::CaseFn>,
    overrides: Vec<(usize, Rational)>,
) -> FormulaEntry {
    FormulaEntry {
        id: id.to_string(),
        kind: Kind::Determinant,
        description,
        target,
        pattern: None,
        closed_form: Some(ClosedForm { modulus, cases, overrides }),
        class: None,
        param: ParamKind::None,
        param_values: Vec::new(),
        displayed: None,
        corrections: Vec::new(),
    }
}

fn corrected(mut e: FormulaEntry) -> FormulaEntry {
    e.corrections.push(Correction {
        part: "H_n",
        printed: "H_n = (-1)^n Π_{k=1}^{2n} k!^2",
        used: "H_{2n+1} = 0, H_{2n} = (-1)^n Π_{k=1}^{2n} k!^2",
    });
    e
}

fn with_r(mut e: FormulaEntry) -> FormulaEntry {
    e.param = ParamKind::R;
    e.param_values = (1..=4).map(Param::R).collect();
    e
}

const FACT: Step = Step::T(Transform::ScaleByFactorial);
const SQ: Step = Step::T(Transform::SubstituteXSquared);
const TIMES_X: Step = Step::T(Transform::MultiplyByX);
const TPS: Base = Base::Named(NamedSeries::TanPlusSec);
const TAN: Base = Base::Named(NamedSeries::Tan);

fn shift(m: usize) -> Step {
    Step::T(Transform::ShiftLeft(m))
}

fn i(n: usize) -> i64 {
    n as i64
}

pub(super) fn entries() -> Vec<FormulaEntry> {
    let tan_ogf = |extra: &[Step]| {
        let mut v = vec![FACT];
        v.extend_from_slice(extra);
        Recipe::new(TAN, &v)
    };
    let sec_r = |extra: &[Step]| {
        let mut v = vec![FACT];
        v.extend_from_slice(extra);
        Recipe::new(Base::SecPow, &v)
    };
    let one = Rational::one();
    vec![
        det(
            "Thm1.2",
            "Hankel determinants of (E_0, E_1, E_2, ...)",
            Recipe::new(TPS, &[FACT]),
            4,
            vec![
                |m, _| {
                    if m == 0 {
                        return Rational::one();
                    }
                    let k = i(m) - 1;
                    sign(k + 1) * sq(f(2 * k + 1)) * sq(f(4 * k + 3)) * two(-2 * (2 * k + 1) * (2 * k + 1))
                        * odd_fact4(2 * k)
                },
                |k, _| {
                    let k = i(k);
                    sign(k) * sq(f(2 * k)) * two(-4 * k * (2 * k - 1)) * odd_fact4(2 * k - 1)
                },
                |_, _| Rational::zero(),
                |k, _| {
                    let k = i(k);
                    sign(k + 1) * sq(f(2 * k + 1)) * two(-4 * k * (2 * k + 1)) * odd_fact4(2 * k)
                },
            ],
            vec![],
        ),
        with_r(det(
            "H1",
            "Hankel determinants of (E^(r)_0, 0, E^(r)_2, 0, ...)",
            sec_r(&[]),
            1,
            vec![|n, r| prod(1, i(n) - 1, |k| f(k) * rising(r, k))],
            vec![],
        )),
        with_r(det(
            "H2",
            "Hankel determinants of (E^(r)_0, E^(r)_2, ...)",
            sec_r(&[SQ]),
            1,
            vec![|n, r| prod(1, i(n) - 1, |k| f(2 * k) * rising(r, 2 * k))],
            vec![],
        )),
        with_r(det(
            "H3",
            "Hankel determinants of (E^(r)_2, E^(r)_4, ...)",
            sec_r(&[SQ, shift(1)]),
            1,
            vec![|n, r| prod(0, i(n) - 1, |k| f(2 * k + 1) * rising(r, 2 * k + 1))],
            vec![],
        )),
        det(
            "H4",
            "Hankel determinants of (E_1, 0, E_3, 0, ...)",
            tan_ogf(&[shift(1)]),
            1,
            vec![|n, _| f(i(n)) * prod(1, i(n) - 1, |k| sq(f(k)))],
            vec![],
        ),
        det(
            "H5",
            "Hankel determinants of (E_1, E_3, E_5, ...)",
            tan_ogf(&[shift(1), SQ]),
            1,
            vec![|n, _| prod(1, 2 * i(n) - 1, f)],
            vec![],
        ),
        det(
            "H6",
            "Hankel determinants of (E_3, E_5, ...)",
            tan_ogf(&[shift(1), SQ, shift(1)]),
            1,
            vec![|n, _| prod(1, 2 * i(n), f)],
            vec![],
        ),
        det(
            "H7",
            "Hankel determinants of (E_1, E_2, E_3, ...)",
            Recipe::new(TPS, &[FACT, shift(1)]),
            1,
            vec![|n, _| {
                let n = i(n);
                f(n) * two(-n * (n - 1) / 2) * prod(2, n - 1, |k| sq(f(k)))
            }],
            vec![],
        ),
        with_r(det(
            "H8",
            "Hankel determinants of (0, E^(r)_2/r, 0, E^(r)_4/r, ...)",
            sec_r(&[shift(1), Step::DivideByR]),
            2,
            vec![
                |n, r| {
                    let n = i(n);
                    sign(n) * prod(1, n - 1, |k| sq(f(2 * k + 1) * rising(r + 1, 2 * k)))
                },
                |_, _| Rational::zero(),
            ],
            vec![],
        )),
        det(
            "H9",
            "Hankel determinants of (0, E_1, 0, E_3, ...)",
            tan_ogf(&[]),
            2,
            vec![|n, _| sign(i(n)) * prod(1, 2 * i(n) - 1, |k| sq(f(k))), |_, _| Rational::zero()],
            vec![],
        ),
        det(
            "H10",
            "Hankel determinants of (E_2, E_3, E_4, ...)",
            Recipe::new(TPS, &[FACT, shift(2)]),
            4,
            vec![
                |k, _| {
                    if k == 0 {
                        return Rational::one();
                    }
                    let k = i(k);
                    sign(k) * z(k * k) * sq(f(2 * k - 1)) * two(-(8 * k * k - 4 * k - 2)) * odd_fact4(2 * k - 1)
                },
                |k, _| {
                    let k = i(k);
                    sign(k) * sq(f(2 * k)) / sq(f(4 * k + 1)) * two(-8 * k * k) * odd_fact4(2 * k)
                },
                |k, _| {
                    let k = i(k);
                    sign(k) * sq(f(2 * k + 1)) * two(-(8 * k * k + 4 * k)) * odd_fact4(2 * k)
                },
                |_, _| Rational::zero(),
            ],
            vec![],
        ),
        corrected(det(
            "H11",
            "Hankel determinants of (0, E_3, 0, E_5, ...)",
            tan_ogf(&[shift(3), TIMES_X]),
            2,
            vec![|n, _| sign(i(n)) * prod(1, 2 * i(n), |k| sq(f(k))), |_, _| Rational::zero()],
            vec![],
        )),
        det(
            "H12",
            "Hankel determinants of (e_1, 0, e_3, 0, ...)",
            Recipe::new(TAN, &[shift(1)]),
            1,
            vec![|n, _| {
                let n = i(n);
                two((n - 1) * (n - 1)) * f(n - 1) / f(2 * n - 1) * prod(1, n - 1, |k| sq(f(k - 1) / f(2 * k - 1)))
            }],
            vec![(0, one.clone())],
        ),
        det(
            "H13",
            "Hankel determinants of (e_1, e_3, e_5, ...)",
            Recipe::new(TAN, &[shift(1), SQ]),
            1,
            vec![|n, _| {
                let n = i(n);
                two((n - 1) * (2 * n - 1)) * prod(1, 2 * n - 2, |k| f(k) / f(2 * k + 1))
            }],
            vec![(0, one.clone())],
        ),
        det(
            "H14",
            "Hankel determinants of (0, e_3, 0, e_5, ...)",
            Recipe::new(TAN, &[shift(2)]),
            2,
            vec![
                |n, _| {
                    let n = i(n);
                    sign(n) * two(2 * n * (2 * n - 1)) * ratio_sq(1, 2 * n - 1)
                },
                |_, _| Rational::zero(),
            ],
            vec![],
        ),
        det(
            "H15",
            "Hankel determinants of (0, e_1, 0, e_3, ...)",
            Recipe::new(TAN, &[]),
            2,
            vec![
                |n, _| {
                    let n = i(n);
                    sign(n) * two(2 * (n - 1) * (2 * n - 1)) * ratio_sq(1, 2 * n - 2)
                },
                |_, _| Rational::zero(),
            ],
            vec![(0, one.clone())],
        ),
        det(
            "H16",
            "Hankel determinants of (e_1, e_2, e_3, ...)",
            Recipe::new(TPS, &[shift(1)]),
            1,
            vec![|n, _| {
                let n = i(n);
                f(n - 1) * two(-(n - 1)) / f(2 * n - 1) * ratio_sq(1, n - 2)
            }],
            vec![(0, one.clone())],
        ),
        det(
            "H17",
            "Hankel determinants of (e_0, e_1, e_2, ...)",
            Recipe::new(TPS, &[]),
            1,
            vec![|n, _| {
                let n = i(n);
                sign(n * (n - 1) / 2) * two(-(n - 1)) * prod(2, n - 1, |k| sq(f(k - 1) / f(2 * k - 1)))
            }],
            vec![(0, one.clone())],
        ),
        det(
            "H18",
            "Hankel determinants of (e_2, e_3, e_4, ...)",
            Recipe::new(TPS, &[shift(2)]),
            1,
            vec![|n, _| {
                let n = i(n);
                sign(n * (n - 1) / 2) * two(-n) * prod(2, n, |k| sq(f(k - 1) / f(2 * k - 1)))
            }],
            vec![],
        ),
        det(
            "H19",
            "Hankel determinants of (e_3, e_4, e_5, ...)",
            Recipe::new(TPS, &[shift(3)]),
            1,
            vec![|n, _| {
                let n = i(n);
                z(n + 1) * f(n + 1) * two(-n) / f(2 * n + 1) * ratio_sq(1, n - 1)
            }],
            vec![],
        ),
        det(
            "H20",
            "Hankel determinants of (e_4, e_5, e_6, ...)",
            Recipe::new(TPS, &[shift(4)]),
            1,
            vec![|n, _| {
                let n = i(n);
                sign(n * (n - 1) / 2) * z((n + 1) * (n + 2) * (n * n + 3 * n + 1)) * two(-(n + 1)) * ratio_sq(1, n)
            }],
            vec![],
        ),
        det(
            "H21",
            "Hankel determinants of (e_3, 0, e_5, 0, ...)",
            Recipe::new(TAN, &[shift(3)]),
            2,
            vec![
                |n, _| {
                    let n = i(n);
                    two(4 * n * n - 1) * f(2 * n + 2) / f(4 * n + 1) * ratio_sq(1, 2 * n - 1)
                },
                |n, _| {
                    let n = i(n);
                    two(4 * n * (n + 1)) * z(2 * n + 1) * f(2 * n + 2) / f(4 * n + 3) * ratio_sq(1, 2 * n)
                },
            ],
            vec![],
        ),
        det(
            "H22",
            "Hankel determinants of (e_3, e_5, e_7, ...)",
            Recipe::new(TAN, &[shift(3), SQ]),
            1,
            vec![|n, _| {
                let n = i(n);
                two(n * (2 * n - 1)) * prod(1, 2 * n - 1, |k| f(k) / f(2 * k + 1))
            }],
            vec![],
        ),
        det(
            "H23",
            "Hankel determinants of (e_5, e_7, ...)",
            Recipe::new(TAN, &[shift(5), SQ]),
            1,
            vec![|n, _| {
                let n = i(n);
                two(n * (2 * n + 1)) * z((n + 1) * (2 * n + 1)) * prod(1, 2 * n, |k| f(k) / f(2 * k + 1))
            }],
            vec![],
        ),
        det(
            "H24",
            "Hankel determinants of (e_7, e_9, ...)",
            Recipe::new(TAN, &[shift(7), SQ]),
            1,
            vec![|n, _| {
                let n = i(n);
                two(n * (2 * n + 3))
                    * z((2 * n + 1) * (4 * n * n + 10 * n + 3) * (n + 1) * (n + 2) * (2 * n + 3))
                    / z(3)
                    * prod(1, 2 * n + 1, |k| f(k) / f(2 * k + 1))
            }],
            vec![],
        ),
    ]
}
