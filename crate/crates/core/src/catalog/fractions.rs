use std::sync::Arc;

use super::{
    specialize_pattern, Base, Correction, Displayed, FormulaEntry, Kind, Param, ParamKind, Recipe,
    Step, P,
};
use crate::contfrac::{CfPattern, Level};
use crate::euler::{neg1_pattern, q_euler_pattern, q_secant_hat_pattern, q_tangent_hat_pattern};
use crate::exact::{Poly, Rational, Ring};
use crate::hfrac::FractionClass;
use crate::perms::{exp_fraction_pattern, flajolet_pattern};
use crate::series::{NamedSeries, Transform};

fn z(n: i64) -> Rational {
    Rational::from(n)
}

/// `Π num / Π den` without overflow.
fn ratio(num: &[i64], den: &[i64]) -> Rational {
    let p = |v: &[i64]| v.iter().fold(Rational::one(), |a, &x| a * z(x));
    p(num) / p(den)
}

fn mono(c: Rational, k: usize) -> P {
    Poly::monomial(c, k)
}

/// `1 - c x^k`
fn one_minus(c: Rational, k: usize) -> P {
    P::one() - &mono(c, k)
}

fn pattern(b0: P, rule: impl Fn(i64) -> (P, P) + Send + Sync + 'static) -> CfPattern<Rational> {
    CfPattern::new(b0, move |j| {
        let (a, b) = rule(j as i64);
        Level::new(a, b)
    })
}

fn constant(c: Rational) -> P {
    P::constant(c)
}

const TAN_PLUS_SEC: Base = Base::Named(NamedSeries::TanPlusSec);
const TAN: Base = Base::Named(NamedSeries::Tan);
const SEC: Base = Base::Named(NamedSeries::Sec);
const FACT: Step = Step::T(Transform::ScaleByFactorial);
const SQ: Step = Step::T(Transform::SubstituteXSquared);
const TIMES_X: Step = Step::T(Transform::MultiplyByX);

fn shift(m: usize) -> Step {
    Step::T(Transform::ShiftLeft(m))
}

fn s(v: &str) -> String {
    v.to_string()
}

fn shown(b0: &str, levels: &[(&str, &str)]) -> Displayed {
    Displayed {
        b0: s(b0),
        levels: levels.iter().map(|(a, b)| (s(a), s(b))).collect(),
    }
}

struct Builder(FormulaEntry);

impl Builder {
    fn new(
        id: &str,
        description: &'static str,
        target: Recipe,
        pat: impl Fn(&Param) -> CfPattern<Rational> + Send + Sync + 'static,
    ) -> Self {
        Builder(FormulaEntry {
            id: id.to_string(),
            kind: Kind::Fraction,
            description,
            target,
            pattern: Some(Arc::new(pat)),
            closed_form: None,
            class: None,
            param: ParamKind::None,
            param_values: Vec::new(),
            displayed: None,
            corrections: Vec::new(),
        })
    }

    fn class(mut self, c: FractionClass) -> Self {
        self.0.class = Some(c);
        self
    }

    fn over_r(mut self) -> Self {
        self.0.param = ParamKind::R;
        self.0.param_values = (1..=4).map(Param::R).collect();
        self
    }

    fn over_q(mut self, qs: &[i64]) -> Self {
        self.0.param = ParamKind::Q;
        self.0.param_values = qs.iter().map(|&q| Param::Q(z(q))).collect();
        self
    }

    fn shown(mut self, f: fn(&Param) -> Displayed) -> Self {
        self.0.displayed = Some(f);
        self
    }

    fn corrected(mut self, part: &'static str, printed: &'static str, used: &'static str) -> Self {
        self.0.corrections.push(Correction { part, printed, used });
        self
    }
}

use FractionClass::{H, J};

pub(super) fn entries() -> Vec<FormulaEntry> {
    let e_ogf = || Recipe::new(TAN_PLUS_SEC, &[FACT]);
    let e_ogf_shift = |m| Recipe::new(TAN_PLUS_SEC, &[FACT, shift(m)]);
    let sec_r = |extra: &[Step]| {
        let mut v = vec![FACT];
        v.extend_from_slice(extra);
        Recipe::new(Base::SecPow, &v)
    };
    let tan_ogf = |extra: &[Step]| {
        let mut v = vec![FACT];
        v.extend_from_slice(extra);
        Recipe::new(TAN, &v)
    };
    let tan_egf = |extra: &[Step]| Recipe::new(TAN, extra);
    let e_egf = |extra: &[Step]| Recipe::new(TAN_PLUS_SEC, extra);

    vec![
        Builder::new("Eq3", "secant numbers, Stieltjes", Recipe::new(SEC, &[FACT]), |_| {
            pattern(P::zero(), |j| (mono(-z((j - 1) * (j - 1)), 2), P::one())).with_a(1, P::one())
        })
        .shown(|_| shown("0", &[("1", "1"), ("-x^2", "1"), ("-4x^2", "1"), ("-9x^2", "1")])),
        Builder::new("Eq4", "tangent numbers, Stieltjes", tan_ogf(&[]), |_| {
            pattern(P::zero(), |j| (mono(-z((j - 1) * j), 2), P::one())).with_a(1, P::x())
        })
        .shown(|_| shown("0", &[("x", "1"), ("-2x^2", "1"), ("-6x^2", "1"), ("-12x^2", "1")])),
        Builder::new("Thm1.1", "H-fraction of Σ E_n x^n", e_ogf(), |_| thm11())
            .class(H)
            .shown(|_| {
                shown(
                    "0",
                    &[
                        ("1", "1-x"),
                        ("-x^3", "1-2x-4x^2"),
                        ("-9x^3", "1-5x"),
                        ("-4x^2", "1-7x"),
                        ("-75x^3", "1-6x-36x^2"),
                        ("-147x^3", "1-11x"),
                        ("-16x^2", "1-13x"),
                    ],
                )
            }),
        Builder::new("Thm4.1", "Flajolet's fraction at u = (1, 1/2, 0, 1)", Recipe::new(TAN_PLUS_SEC, &[FACT, shift(1), TIMES_X]), |_| {
            flajolet_pattern([&z(1), &Rational::new(1, 2), &z(0), &z(1)])
        }),
        Builder::new("Eq22", "J-type fraction of Σ E_n x^n", e_ogf(), |_| {
            pattern(P::one(), |k| (mono(-z(k * (k - 1) / 2), 2), one_minus(z(k), 1))).with_a(1, P::x())
        })
        .shown(|_| {
            shown("1", &[("x", "1-x"), ("-x^2", "1-2x"), ("-3x^2", "1-3x"), ("-6x^2", "1-4x")])
        }),
        Builder::new("Eq21", "super 1-fraction of Σ E_n x^n", e_ogf(), |_| eq21())
            .shown(|_| {
                shown(
                    "0",
                    &[
                        ("1", "1"),
                        ("-x", "1"),
                        ("-x^2", "1-2x"),
                        ("-3x^2", "1"),
                        ("-3x", "1"),
                        ("-2x", "1"),
                        ("-2x", "1"),
                        ("-5x", "1"),
                        ("-15x^2", "1-6x"),
                        ("-21x^2", "1"),
                        ("-7x", "1"),
                        ("-4x", "1"),
                        ("-4x", "1"),
                    ],
                )
            }),
        Builder::new("Eq23", "six-periodic fraction of Σ E_{n+2} x^n", e_ogf_shift(2), |_| eq23())
            .shown(|_| {
                shown(
                    "0",
                    &[
                        ("1", "1-x"),
                        ("-x", "1"),
                        ("-x", "1"),
                        ("-3x", "1"),
                        ("-6x^2", "1-4x"),
                        ("-10x^2", "1"),
                        ("-5x", "1"),
                        ("-3x", "1"),
                        ("-3x", "1"),
                    ],
                )
            }),
        Builder::new("F10a", "haircut of F7, Σ E_{n+2} x^n", e_ogf_shift(2), |_| {
            pattern(P::zero(), |k| (mono(-z(k * (k - 1) / 2), 2), one_minus(z(k), 1)))
                .with_a(1, P::one())
                .with_b(1, one_minus(z(1), 1))
                .with_a(2, mono(z(-1), 1))
                .with_b(2, one_minus(z(1), 1))
        })
        .shown(|_| shown("0", &[("1", "1-x"), ("-x", "1-x"), ("-3x^2", "1-3x"), ("-6x^2", "1-4x")])),
        Builder::new("F1", "Σ E^(r)_{2n} x^{2n}", sec_r(&[]), |p| {
            let r = p.r();
            pattern(P::zero(), move |k| (mono(-z((k - 1) * (r + k - 2)), 2), P::one())).with_a(1, P::one())
        })
        .over_r()
        .class(J)
        .shown(|p| {
            let r = p.r();
            Displayed {
                b0: s("0"),
                levels: vec![
                    (s("1"), s("1")),
                    (format!("-{r}x^2"), s("1")),
                    (format!("-{}x^2", 2 * (r + 1)), s("1")),
                    (format!("-{}x^2", 3 * (r + 2)), s("1")),
                ],
            }
        }),
        Builder::new("F2", "Σ E^(r)_{2n} x^n", sec_r(&[SQ]), |p| {
            let r = p.r();
            pattern(P::zero(), move |k| {
                (
                    mono(-ratio(&[2 * k + r - 3, 2 * k + r - 4, 2 * k - 3, 2 * k - 2], &[]), 2),
                    one_minus(z(8 * k * k + 4 * k * r - 16 * k - 3 * r + 8), 1),
                )
            })
            .with_a(1, P::one())
        })
        .over_r()
        .class(J)
        .shown(|p| {
            let r = p.r();
            Displayed {
                b0: s("0"),
                levels: vec![
                    (s("1"), format!("1-{r}x")),
                    (format!("-{}x^2", 2 * r * (r + 1)), format!("1-{}x", 5 * r + 8)),
                    (format!("{}x^2", 12 * (r + 2) * (r + 3)), format!("1-{}x", 9 * r + 32)),
                ],
            }
        }),
        Builder::new("F3", "Σ_{n≥1} E^(r)_{2n} x^{n-1}", sec_r(&[SQ, shift(1)]), |p| {
            let r = p.r();
            pattern(P::zero(), move |k| {
                (
                    mono(-ratio(&[2, 2 * k + r - 2, 2 * k + r - 3, 2 * k - 1, k - 1], &[]), 2),
                    one_minus(z(8 * k * k + 4 * k * r - 8 * k - r + 2), 1),
                )
            })
            .with_a(1, constant(z(r)))
        })
        .over_r()
        .class(J)
        .corrected("a1", "rx", "r")
        .corrected("b0", "1", "0")
        .shown(|p| {
            let r = p.r();
            Displayed {
                b0: s("0"),
                levels: vec![
                    (format!("{r}"), format!("1-{}x", 2 + 3 * r)),
                    (format!("-{}x^2", 6 * (r + 2) * (r + 1)), format!("1-{}x", 18 + 7 * r)),
                ],
            }
        }),
        Builder::new("F4", "Σ E_{2n+1} x^{2n}", tan_ogf(&[shift(1)]), |_| {
            pattern(P::zero(), |k| (mono(-z((k - 1) * k), 2), P::one())).with_a(1, P::one())
        })
        .class(J)
        .shown(|_| shown("0", &[("1", "1"), ("-2x^2", "1"), ("-6x^2", "1"), ("-12x^2", "1")])),
        Builder::new("F5", "Σ E_{2n+1} x^n", tan_ogf(&[shift(1), SQ]), |_| {
            pattern(P::zero(), |k| {
                (
                    mono(-ratio(&[4, 2 * k - 1, 2 * k - 3, k - 1, k - 1], &[]), 2),
                    one_minus(z(2 * (2 * k - 1) * (2 * k - 1)), 1),
                )
            })
            .with_a(1, P::one())
        })
        .class(J)
        .corrected("b_k", "b_1 = -2(2k-1)^2x + 1", "b_k = 1 - 2(2k-1)^2x")
        .shown(|_| shown("0", &[("1", "1-2x"), ("-12x^2", "1-18x"), ("-240x^2", "1-50x")])),
        Builder::new("F6", "Σ_{n≥1} E_{2n+1} x^{n-1}", tan_ogf(&[shift(1), SQ, shift(1)]), |_| {
            pattern(P::zero(), |k| {
                (
                    mono(-ratio(&[4, 2 * k - 1, 2 * k - 1, k - 1, k], &[]), 2),
                    one_minus(z(8 * k * k), 1),
                )
            })
            .with_a(1, constant(z(2)))
        })
        .class(J)
        .shown(|_| shown("0", &[("2", "1-8x"), ("-72x^2", "1-32x"), ("-600x^2", "1-72x")])),
        Builder::new("F7", "Σ E_{n+1} x^n", e_ogf_shift(1), |_| {
            pattern(P::zero(), |k| (mono(-z(k * (k - 1) / 2), 2), one_minus(z(k), 1))).with_a(1, P::one())
        })
        .class(J)
        .shown(|_| {
            shown("0", &[("1", "1-x"), ("-x^2", "1-2x"), ("-3x^2", "1-3x"), ("-6x^2", "1-4x")])
        }),
        Builder::new("F8", "Σ_{n≥1} E^(r)_{2n}/r x^{2n-1}", sec_r(&[shift(1), Step::DivideByR]), |p| {
            let r = p.r();
            pattern(P::zero(), move |k| {
                (
                    mono(-ratio(&[2 * k - 1, 2 * k - 2, 2 * k - 3 + r, 2 * k - 2 + r], &[]), 4),
                    one_minus(z(8 * k * k - 8 * k + 4 * r * k + 2 - r), 2),
                )
            })
            .with_a(1, P::x())
        })
        .over_r()
        .class(H)
        .shown(|p| {
            let r = p.r();
            Displayed {
                b0: s("0"),
                levels: vec![
                    (s("x"), format!("1-{}x^2", 3 * r + 2)),
                    (format!("-{}x^4", 6 * (r + 2) * (r + 1)), format!("1-{}x^2", 7 * r + 18)),
                    (format!("-{}x^4", 20 * (r + 4) * (r + 3)), format!("1-{}x^2", 11 * r + 50)),
                ],
            }
        }),
        Builder::new("F9", "Σ E_{2n+1} x^{2n+1}", tan_ogf(&[]), |_| {
            pattern(P::zero(), |k| {
                (
                    mono(-ratio(&[2 * k - 1, 2 * k - 2, 2 * k - 2, 2 * k - 3], &[]), 4),
                    one_minus(z(2 * (2 * k - 1) * (2 * k - 1)), 2),
                )
            })
            .with_a(1, P::x())
        })
        .class(H)
        .shown(|_| shown("0", &[("x", "1-2x^2"), ("-12x^4", "1-18x^2"), ("-240x^4", "1-50x^2")])),
        Builder::new("F10", "Σ E_{n+2} x^n", e_ogf_shift(2), |_| f10())
            .class(H)
            .shown(|_| {
                shown(
                    "0",
                    &[
                        ("1", "1-2x"),
                        ("-x^2", "1-4x"),
                        ("-18x^3", "1-4x-16x^2"),
                        ("-50x^3", "1-8x"),
                        ("-9x^2", "1-10x"),
                        ("-196x^3", "1-8x-64x^2"),
                        ("-324x^3", "1-14x"),
                    ],
                )
            }),
        Builder::new("F11", "Σ_{n≥1} E_{2n+1} x^{2n-1}", tan_ogf(&[shift(3), TIMES_X]), |_| {
            pattern(P::zero(), |k| {
                (
                    mono(-ratio(&[4, 2 * k - 1, 2 * k - 1, k - 1, k], &[]), 4),
                    one_minus(z(8 * k * k), 2),
                )
            })
            .with_a(1, mono(z(2), 1))
        })
        .class(H)
        .shown(|_| shown("0", &[("2x", "1-8x^2"), ("-72x^4", "1-32x^2"), ("-600x^4", "1-72x^2")])),
        Builder::new("LambertTan", "Lambert's fraction of tan", tan_egf(&[]), |_| {
            pattern(P::zero(), |k| (mono(z(-1), 2), constant(z(2 * k - 1)))).with_a(1, P::x())
        })
        .shown(|_| shown("0", &[("x", "1"), ("-x^2", "3"), ("-x^2", "5"), ("-x^2", "7")])),
        Builder::new("LambertTanh", "Lambert's fraction of tanh", Recipe::new(Base::Named(NamedSeries::Tanh), &[]), |_| {
            pattern(P::zero(), |k| (mono(z(1), 2), constant(z(2 * k - 1)))).with_a(1, P::x())
        })
        .shown(|_| shown("0", &[("x", "1"), ("x^2", "3"), ("x^2", "5"), ("x^2", "7")])),
        Builder::new("Thm6.2", "exponential fraction at u = (1, 1/2, 0, 1)", e_egf(&[shift(1), TIMES_X]), |_| {
            exp_fraction_pattern([&z(1), &Rational::new(1, 2), &z(0), &z(1)])
        }),
        Builder::new("F12", "Σ e_{2n+1} x^{2n}", tan_egf(&[shift(1)]), |_| {
            pattern(P::zero(), |k| (mono(-ratio(&[], &[2 * k - 3, 2 * k - 1]), 2), P::one())).with_a(1, P::one())
        })
        .class(J)
        .shown(|_| shown("0", &[("1", "1"), ("-1/3x^2", "1"), ("-1/15x^2", "1"), ("-1/35x^2", "1")])),
        Builder::new("f13", "Σ e_{2n+1} x^n, S-fraction", tan_egf(&[shift(1), SQ]), |_| {
            pattern(P::zero(), |k| (mono(-ratio(&[], &[2 * k - 3, 2 * k - 1]), 1), P::one())).with_a(1, P::one())
        })
        .shown(|_| shown("0", &[("1", "1"), ("-1/3x", "1"), ("-1/15x", "1"), ("-1/35x", "1")])),
        Builder::new("F13", "Σ e_{2n+1} x^n", tan_egf(&[shift(1), SQ]), |_| f13_like(1))
            .class(J)
            .shown(|_| {
                shown("0", &[("1", "1-1/3x"), ("-1/45x^2", "1-2/21x"), ("-1/2205x^2", "1-2/77x")])
            }),
        Builder::new("F14", "Σ e_{2n+3} x^{2n+1}", tan_egf(&[shift(2)]), |_| f14_like(2))
            .class(H)
            .shown(|_| {
                shown(
                    "0",
                    &[("1/3x", "1-2/5x^2"), ("-1/525x^4", "1-2/45x^2"), ("-1/6237x^4", "1-2/99x^2")],
                )
            }),
        Builder::new("F15", "tan", tan_egf(&[]), |_| f13_like(2))
            .class(H)
            .shown(|_| {
                shown(
                    "0",
                    &[
                        ("x", "1-1/3x^2"),
                        ("-1/45x^4", "1-2/21x^2"),
                        ("-1/2205x^4", "1-2/77x^2"),
                        ("-1/14157x^4", "1-2/165x^2"),
                    ],
                )
            }),
        Builder::new("F16", "Σ e_{n+1} x^n", e_egf(&[shift(1)]), |_| {
            pattern(P::zero(), |k| (mono(-ratio(&[], &[4 * k - 6, 4 * k - 2]), 2), P::one()))
                .with_a(1, P::one())
                .with_b(1, one_minus(Rational::new(1, 2), 1))
        })
        .class(J)
        .shown(|_| {
            shown("0", &[("1", "1-1/2x"), ("-1/12x^2", "1"), ("-1/60x^2", "1"), ("-1/140x^2", "1")])
        }),
        Builder::new("f17", "tan + sec, S-fraction", e_egf(&[]), |_| {
            pattern(P::zero(), |j| {
                let k = j / 4;
                let c = match j % 4 {
                    0 => ratio(&[1], &[8 * k - 2]),
                    1 => -ratio(&[1], &[8 * k - 2]),
                    2 => -ratio(&[1], &[8 * k + 2]),
                    _ => ratio(&[1], &[8 * k + 2]),
                };
                (mono(c, 1), P::one())
            })
            .with_a(1, P::one())
            .with_a(2, mono(z(-1), 1))
        })
        .shown(|_| {
            shown(
                "0",
                &[("1", "1"), ("-x", "1"), ("1/2x", "1"), ("1/6x", "1"), ("-1/6x", "1"), ("-1/10x", "1")],
            )
        }),
        Builder::new("F17", "tan + sec", e_egf(&[]), |_| {
            pattern(P::zero(), |k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                (
                    mono(ratio(&[1], &[4 * k - 6, 4 * k - 6]), 2),
                    P::one() + &mono(z(sign) * ratio(&[2 * (k - 1)], &[2 * k - 3, 2 * k - 1]), 1),
                )
            })
            .with_a(1, P::one())
            .with_b(1, one_minus(z(1), 1))
            .with_a(2, mono(Rational::new(1, 2), 2))
        })
        .class(J)
        .shown(|_| {
            shown(
                "0",
                &[("1", "1-x"), ("1/2x^2", "1+2/3x"), ("1/36x^2", "1-4/15x"), ("1/100x^2", "1+6/35x")],
            )
        }),
        Builder::new("f18", "Σ e_{n+2} x^n, S-fraction", e_egf(&[shift(2)]), |_| {
            pattern(P::zero(), |i| {
                let j = i / 2;
                let c = if i % 2 == 0 {
                    sgn(j) * ratio(&[(j + 1) * (j + 1)], &[2 * j * j, 2 * j + 1])
                } else {
                    -sgn(j) * ratio(&[j * j], &[2 * (j + 1) * (j + 1), 2 * j + 1])
                };
                (mono(c, 1), P::one())
            })
            .with_a(1, constant(Rational::new(1, 2)))
        })
        .shown(|_| shown("0", &[("1/2", "1"), ("-2/3x", "1"), ("1/24x", "1"), ("9/40x", "1")])),
        Builder::new("F18", "Σ e_{n+2} x^n", e_egf(&[shift(2)]), |_| {
            pattern(P::zero(), |k| {
                (
                    mono(ratio(&[1], &[4 * k - 2, 4 * k - 2]), 2),
                    P::one() + &mono(sgn(k) * ratio(&[2 * k], &[2 * k - 1, 2 * k + 1]), 1),
                )
            })
            .with_a(1, constant(Rational::new(1, 2)))
        })
        .class(J)
        .shown(|_| {
            shown(
                "0",
                &[("1/2", "1-2/3x"), ("1/36x^2", "1+4/15x"), ("1/100x^2", "1-6/35x"), ("1/196x^2", "1+8/63x")],
            )
        }),
        Builder::new("f19", "Σ e_{n+3} x^n, S-fraction", e_egf(&[shift(3)]), |_| {
            pattern(P::zero(), |i| {
                let j = i / 2;
                let (p, m) = (j * j + 3 * j + 1, j * j + j - 1);
                let c = if i % 2 == 0 {
                    sgn(j) * ratio(&[j, j + 2, p], &[2, m, 2 * j + 1, (j + 1) * (j + 1)])
                } else {
                    sgn(j) * ratio(&[j, j + 2, m], &[2, p, 2 * j + 3, (j + 1) * (j + 1)])
                };
                (mono(c, 1), P::one())
            })
            .with_a(1, constant(Rational::new(1, 3)))
        })
        .shown(|_| shown("0", &[("1/3", "1"), ("-5/8x", "1"), ("-3/200x", "1"), ("44/225x", "1")])),
        Builder::new("F19", "Σ e_{n+3} x^n", e_egf(&[shift(3)]), |_| {
            pattern(P::zero(), |j| {
                (
                    mono(-ratio(&[(j - 1) * (j - 1), (j + 1) * (j + 1)], &[4 * j * j, j * j, 2 * j - 1, 2 * j + 1]), 2),
                    P::one() + &mono(sgn(j) * ratio(&[2 * j * j + 2 * j + 1], &[2 * j * j, (j + 1) * (j + 1)]), 1),
                )
            })
            .with_a(1, constant(Rational::new(1, 3)))
        })
        .class(J)
        .shown(|_| {
            shown("0", &[("1/3", "1-5/8x"), ("-3/320x^2", "1+13/72x"), ("-16/2835x", "1-25/288x")])
        }),
        Builder::new("F20", "Σ e_{n+4} x^n", e_egf(&[shift(4)]), |_| {
            pattern(P::zero(), |j| {
                let (p, m) = (j * j + 3 * j + 1, j * j + j - 1);
                (
                    mono(ratio(&[p, j * j - j - 1, j + 2, j - 1], &[4, m, m, 2 * j + 1, 2 * j + 1, j + 1, j]), 2),
                    P::one()
                        + &mono(
                            sgn(j) * ratio(&[2, j + 2, j + 1, j + 1, j + 1, j], &[p, m, 2 * j + 3, 2 * j + 1]),
                            1,
                        ),
                )
            })
            .with_a(1, constant(Rational::new(5, 24)))
        })
        .class(J)
        .corrected("b0", "1/3", "0")
        .shown(|_| {
            shown(
                "0",
                &[("5/24", "1-16/25x"), ("11/3750x^2", "1+432/1925x"), ("475/142296x^2", "1-640/4389x")],
            )
        }),
        Builder::new("F21", "Σ e_{2n+3} x^{2n}", tan_egf(&[shift(3)]), |_| f21_like(2))
            .class(J)
            .corrected("a_j", "a_{2k}, a_{2k+1} without x^2", "a_{2k}, a_{2k+1} times x^2")
            .shown(|_| {
                shown("0", &[("1/3", "1"), ("-2/5x^2", "1"), ("-1/210x^2", "1"), ("-5/126x^2", "1")])
            }),
        Builder::new("f22", "Σ e_{2n+3} x^n, S-fraction", tan_egf(&[shift(3), SQ]), |_| f21_like(1))
            .shown(|_| {
                shown("0", &[("1/3", "1"), ("-2/5x", "1"), ("-1/210x", "1"), ("-5/126x", "1")])
            }),
        Builder::new("F22", "Σ e_{2n+3} x^n", tan_egf(&[shift(3), SQ]), |_| f14_like(1))
            .class(J)
            .shown(|_| {
                shown(
                    "0",
                    &[("1/3", "1-2/5x"), ("-1/525x^2", "1-2/45x"), ("-1/6237x^2", "1-2/99x")],
                )
            }),
        Builder::new("f23", "Σ e_{2n+5} x^n, S-fraction", tan_egf(&[shift(5), SQ]), |_| {
            pattern(P::zero(), |i| {
                let j = i / 2;
                let (p, m) = (4 * j * j + 10 * j + 3, 4 * j * j + 2 * j - 3);
                let c = if i % 2 == 0 {
                    -ratio(&[4 * j + 6, 4 * j + 8, p], &[4 * j + 1, 4 * j + 2, 4 * j + 3, 4 * j + 4, m])
                } else {
                    -ratio(&[4 * j - 2, 4 * j, m], &[4 * j + 2, 4 * j + 3, 4 * j + 4, 4 * j + 5, p])
                };
                (mono(c, 1), P::one())
            })
            .with_a(1, constant(Rational::new(2, 15)))
        })
        .shown(|_| {
            shown("0", &[("2/15", "1"), ("-17/42x", "1"), ("-1/2142x", "1"), ("-364/8415x", "1")])
        }),
        Builder::new("F23", "Σ e_{2n+5} x^n", tan_egf(&[shift(5), SQ]), |_| {
            pattern(P::zero(), |j| {
                (
                    mono(
                        -ratio(
                            &[2 * j + 1, 2 * j - 3, j + 1, j - 1],
                            &[4 * j + 1, 4 * j - 1, 4 * j - 1, 4 * j - 3, 2 * j - 1, 2 * j - 1, j, j],
                        ),
                        2,
                    ),
                    one_minus(
                        ratio(
                            &[8 * j.pow(4) + 8 * j.pow(3) + 22 * j * j + 10 * j + 3],
                            &[4 * j + 3, 4 * j - 1, 2 * j + 1, 2 * j - 1, j + 1, j],
                        ),
                        1,
                    ),
                )
            })
            .with_a(1, constant(Rational::new(2, 15)))
        })
        .class(J)
        .shown(|_| {
            shown(
                "0",
                &[("2/15", "1-17/42x"), ("-1/5292x^2", "1-101/2310x"), ("-56/1061775x^2", "1-73/4620x")],
            )
        }),
        Builder::new("F24", "Σ e_{2n+7} x^n", tan_egf(&[shift(7), SQ]), |_| {
            pattern(P::zero(), |j| {
                let (p, m) = (4 * j * j + 10 * j + 3, 4 * j * j + 2 * j - 3);
                (
                    mono(
                        -ratio(
                            &[p, 4 * j * j - 6 * j - 1, 2 * j + 3, 2 * j - 3, j + 2, j - 1],
                            &[m, m, 4 * j + 3, 4 * j + 1, 4 * j + 1, 4 * j - 1, 2 * j + 1, 2 * j - 1, j + 1, j],
                        ),
                        2,
                    ),
                    one_minus(
                        ratio(
                            &[2, 16 * j.pow(4) + 48 * j.pow(3) + 164 * j * j + 192 * j + 45],
                            &[p, m, 4 * j + 5, 4 * j + 1],
                        ),
                        1,
                    ),
                )
            })
            .with_a(1, constant(Rational::new(17, 315)))
        })
        .class(J)
        .shown(|_| shown("0", &[("17/315", "1-62/153x"), ("-26/1287495x^2", "1-1150/25857x")])),
        Builder::new("Eq24", "q-secant numbers", Recipe::new(Base::QSecantHat, &[]), |p| {
            specialize_pattern(q_secant_hat_pattern(), p.q())
        })
        .over_q(&[1, 0]),
        Builder::new("Eq25", "q-tangent numbers", Recipe::new(Base::QTangentHat, &[]), |p| {
            specialize_pattern(q_tangent_hat_pattern(), p.q())
        })
        .over_q(&[1, 0]),
        Builder::new("Eq26", "q-Euler numbers E_n(q)", Recipe::new(Base::QEuler, &[]), |p| {
            specialize_pattern(q_euler_pattern(), p.q())
        })
        .over_q(&[1, 0, -1]),
        Builder::new("Thm7.1", "Σ_n Σ_k C(n-k,k) k! x^n", Recipe::new(Base::Neg1, &[]), |_| neg1_pattern())
            .shown(|_| {
                shown("0", &[("1", "1-x"), ("-x^2", "1"), ("-x^2", "1-x"), ("-2x^2", "1"), ("-2x^2", "1-x")])
            }),
    ]
    .into_iter()
    .map(|b| b.0)
    .collect()
}

fn sgn(j: i64) -> Rational {
    z(if j % 2 == 0 { 1 } else { -1 })
}

fn thm11() -> CfPattern<Rational> {
    pattern(P::zero(), |j| {
        let k = j / 3;
        match j % 3 {
            0 => (
                mono(-ratio(&[4 * k - 1, 4 * k - 1, 2 * k - 1], &[]), 3),
                one_minus(z(6 * k - 1), 1),
            ),
            1 => (mono(z(-4 * k * k), 2), one_minus(z(6 * k + 1), 1)),
            _ => {
                let m = 2 * k + 1;
                (
                    mono(-ratio(&[4 * k + 1, 4 * k + 1, m], &[]), 3),
                    Poly::new(vec![z(1), z(-2 * m), z(-4 * m * m)]),
                )
            }
        }
    })
    .with_a(1, P::one())
}

fn eq21() -> CfPattern<Rational> {
    pattern(P::zero(), |j| {
        let k = j / 6;
        let one = P::one();
        match j % 6 {
            0 | 1 => (mono(z(-2 * k), 1), one),
            2 => (mono(z(-(4 * k + 1)), 1), one),
            3 => (mono(z(-(4 * k + 1) * (2 * k + 1)), 2), one_minus(z(2 * (2 * k + 1)), 1)),
            4 => (mono(z(-(4 * k + 3) * (2 * k + 1)), 2), one),
            _ => (mono(z(-(4 * k + 3)), 1), one),
        }
    })
    .with_a(1, P::one())
}

fn eq23() -> CfPattern<Rational> {
    pattern(P::zero(), |j| {
        let k = j / 6;
        let one = P::one();
        match j % 6 {
            0 => (mono(z(-2 * (4 * k + 1) * k), 2), one),
            1 => (mono(z(-(4 * k + 1)), 1), one),
            2 | 3 => (mono(z(-(2 * k + 1)), 1), one),
            4 => (mono(z(-(4 * k + 3)), 1), one),
            _ => (mono(z(-2 * (4 * k + 3) * (k + 1)), 2), one_minus(z(4 * (k + 1)), 1)),
        }
    })
    .with_a(1, P::one())
    .with_b(1, one_minus(z(1), 1))
}

fn f10() -> CfPattern<Rational> {
    pattern(P::zero(), |j| {
        let k = j / 3;
        match j % 3 {
            0 => (
                mono(z(-2 * (4 * k - 1) * (4 * k - 1) * k), 3),
                Poly::new(vec![z(1), z(-4 * k), z(-16 * k * k)]),
            ),
            1 => (mono(z(-2 * (4 * k + 1) * (4 * k + 1) * k), 3), one_minus(z(2 * (3 * k + 1)), 1)),
            _ => (mono(z(-(2 * k + 1) * (2 * k + 1)), 2), one_minus(z(2 * (3 * k + 2)), 1)),
        }
    })
    .with_a(1, P::one())
}

/// The J-fraction of `Σ e_{2n+1} y^n` with `y = x^p`, multiplied by
/// `x^{p-1}`: F13 for `p = 1`, F15 for `p = 2`.
fn f13_like(p: usize) -> CfPattern<Rational> {
    pattern(P::zero(), move |k| {
        (
            mono(-ratio(&[], &[4 * k - 7, 4 * k - 5, 4 * k - 5, 4 * k - 3]), 2 * p),
            one_minus(ratio(&[2], &[4 * k - 5, 4 * k - 1]), p),
        )
    })
    .with_a(1, mono(z(1), p - 1))
    .with_b(1, one_minus(Rational::new(1, 3), p))
}

/// Odd contraction of F12 shifted: F14 for `p = 2`; F22 (the same in
/// `y = x^2`, divided by `x`) for `p = 1`.
fn f14_like(p: usize) -> CfPattern<Rational> {
    pattern(P::zero(), move |k| {
        (
            mono(-ratio(&[], &[4 * k - 5, 4 * k - 3, 4 * k - 3, 4 * k - 1]), 2 * p),
            one_minus(ratio(&[2], &[4 * k - 3, 4 * k + 1]), p),
        )
    })
    .with_a(1, mono(Rational::new(1, 3), p - 1))
}

/// F21 (`p = 2`) and its `x^2 -> x` form f22 (`p = 1`).
fn f21_like(p: usize) -> CfPattern<Rational> {
    pattern(P::zero(), move |i| {
        let k = i / 2;
        let c = if i % 2 == 0 {
            -ratio(&[2 * k + 1, k + 1], &[4 * k - 1, 4 * k + 1, 2 * k - 1, k])
        } else {
            -ratio(&[k, 2 * k - 1], &[4 * k + 1, 4 * k + 3, 2 * k + 1, k + 1])
        };
        (mono(c, p), P::one())
    })
    .with_a(1, constant(Rational::new(1, 3)))
}
