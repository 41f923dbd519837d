use proptest::prelude::*;

use hfrac_core::contfrac::{GeneralizedCF, Level};
use hfrac_core::exact::{binomial, q, q_binomial, GaussianRational, Poly, Rational, Ring};
use hfrac_core::hankel::{cofactor_det, det, hankel_sequence};
use hfrac_core::hfrac::{expand, SuperFraction, SuperLevel};
use hfrac_core::series::{named, NamedSeries, TruncatedSeries};

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (rat(), rat()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
    (nonzero(), prop::collection::vec(rat(), order)).prop_map(move |(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        TruncatedSeries::new(c, order)
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rat(), n), n)
}

fn cf(len: usize, constant_b: bool) -> impl Strategy<Value = GeneralizedCF<Rational>> {
    let level = (nonzero(), 1usize..=2, nonzero(), rat()).prop_map(move |(a, e, b0, b1)| {
        let b = if constant_b {
            Poly::constant(b0)
        } else {
            Poly::new(vec![Rational::one(), b1])
        };
        Level::new(Poly::monomial(a, e), b)
    });
    (rat(), prop::collection::vec(level, len))
        .prop_map(|(b0, levels)| GeneralizedCF::new(Poly::constant(b0), levels).unwrap())
}

fn super_fraction(delta: usize, len: usize) -> impl Strategy<Value = SuperFraction<Rational>> {
    let level = (nonzero(), 0usize..=1, prop::collection::vec(rat(), 3)).prop_map(move |(v, k, u)| {
        let u = Poly::new(u.into_iter().take(k + delta - 1).collect());
        SuperLevel { v, k, u }
    });
    prop::collection::vec(level, len).prop_map(move |levels| SuperFraction::new(delta, levels).unwrap())
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |s, k| s + &(a[i][k].clone() * &b[k][j])))
                .collect()
        })
        .collect()
}

proptest! {
    #[test]
    fn rational_field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &a.recip(), Rational::one());
            prop_assert_eq!((b.clone() * &a).exact_div(&a), Some(b.clone()));
        }
    }

    #[test]
    fn gaussian_arithmetic(a in gauss(), b in gauss()) {
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        let n = (a.clone() * &b).norm_sqr();
        prop_assert_eq!(n, a.norm_sqr() * &b.norm_sqr());
        prop_assert!((a.clone() * &a.conj()).is_real());
        if !b.is_zero() {
            prop_assert_eq!((a.clone() * &b) / b.clone(), a);
        }
    }

    #[test]
    fn q_binomial_at_one(n in 0usize..12, k in 0i64..12) {
        prop_assert_eq!(q_binomial(n, k).eval(&Rational::one()), binomial(n as i64, k));
    }

    #[test]
    fn factorial_scaling_round_trip(s in series(15)) {
        let back = s.scale_coeff_by_factorial().divide_coeff_by_factorial().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn series_inverse(s in series(12)) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(s * &inv, TruncatedSeries::one(12));
    }

    #[test]
    fn contractions_keep_the_value(f in cf(8, false), alpha in nonzero(), scale in prop::collection::vec(nonzero(), 8)) {
        let v = f.evaluate(8, 16).unwrap();
        let scale: Vec<Poly<Rational>> = scale.into_iter().map(Poly::constant).collect();
        for g in [
            f.contract_even().unwrap(),
            f.haircut(&Poly::constant(alpha)).unwrap(),
            f.equivalence_scale(&scale).unwrap(),
        ] {
            prop_assert_eq!(g.evaluate(g.levels().len(), 16).unwrap(), v.clone());
        }
    }

    #[test]
    fn odd_contraction_and_chop(f in cf(8, true), p in 1usize..=6) {
        let odd = f.contract_odd().unwrap();
        let len = odd.levels().len();
        prop_assert_eq!(odd.evaluate(len, 16).unwrap(), f.evaluate(2 * len + 1, 16).unwrap());
        let c = f.chop(p).unwrap();
        prop_assert_eq!(c.evaluate(c.levels().len(), 16).unwrap(), f.evaluate(8, 16).unwrap());
    }

    // every a_j has valuation at least 1
    #[test]
    fn depth_certifies_its_order(f in cf(12, false), depth in 2usize..10) {
        let v = f.evaluate_certified(depth, depth).unwrap();
        prop_assert_eq!(v, f.evaluate(12, depth).unwrap());
    }

    #[test]
    fn expansion_round_trip(s in series(18), delta in 1usize..=3) {
        let x = expand(&s, delta).unwrap();
        x.fraction.validate().unwrap();
        for l in &x.fraction.levels {
            prop_assert!(l.u.degree().map_or(true, |d| d < l.k + delta));
        }
        let n = x.certified_order;
        prop_assert_eq!(x.fraction.evaluate(n), s.truncate(n));
    }

    #[test]
    fn expansion_is_unique(sf in (1usize..=3).prop_flat_map(|d| super_fraction(d, 4))) {
        let back = expand(&sf.evaluate(40), sf.delta).unwrap();
        prop_assert_eq!(back.fraction, sf);
    }

    #[test]
    fn hankel_profile_matches_determinants(sf in super_fraction(2, 4)) {
        let profile = sf.hankel_profile().unwrap();
        let top = profile.known_up_to();
        let f = sf.evaluate(2 * top);
        let h = hankel_sequence(f.coeffs(), top).unwrap();
        for (n, hn) in h.iter().enumerate() {
            prop_assert_eq!(Some(hn.clone()), profile.det(n), "H_{}", n);
        }
    }

    #[test]
    fn bareiss_matches_cofactors(m in (1usize..=5).prop_flat_map(matrix)) {
        prop_assert_eq!(det(m.clone()).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn det_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (matrix(n), matrix(n)))) {
        let ab = det(mat_mul(&a, &b)).unwrap();
        prop_assert_eq!(ab, det(a).unwrap() * &det(b).unwrap());
    }
}

#[test]
fn tan_squared_plus_one_is_sec_squared() {
    let tan = named(NamedSeries::Tan, 30);
    let sec = named(NamedSeries::Sec, 30);
    assert_eq!(tan.clone() * &tan + &TruncatedSeries::one(30), sec.clone() * &sec);
}

#[test]
fn tan_plus_sec_times_its_reflection_is_one() {
    let f = named(NamedSeries::TanPlusSec, 30);
    assert_eq!(f.clone() * &f.negate_x(), TruncatedSeries::one(30));
}
