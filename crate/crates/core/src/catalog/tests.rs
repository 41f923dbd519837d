use std::collections::BTreeSet;
use std::sync::Arc;

use super::*;
use crate::contfrac::Level;

fn reg() -> Registry {
    Registry::standard()
}

fn failures(s: &Summary) -> Vec<String> {
    s.failures().map(|r| r.to_string()).collect()
}

#[test]
fn every_fraction_and_determinant_passes() {
    let r = reg();
    let ids: Vec<String> = r.entries().iter().map(|e| e.id.clone()).collect();
    let s = r.verify_all(DEFAULT_ORDER, DEFAULT_N_MAX, Some(&ids));
    assert!(!s.reports.is_empty());
    assert!(s.all_passed(), "{:#?}", failures(&s));
}

#[test]
fn every_derivation_replays() {
    let r = reg();
    let ids: Vec<String> = r.derivations().iter().map(|d| d.id.clone()).collect();
    let s = r.verify_all(DEFAULT_ORDER, DEFAULT_N_MAX, Some(&ids));
    assert_eq!(s.reports.len(), r.derivations().iter().map(|d| d.param_values.len().max(1)).sum::<usize>());
    assert!(s.all_passed(), "{:#?}", failures(&s));
}

#[test]
fn audit_finds_only_the_known_misprints() {
    let r = reg();
    let mut found = BTreeSet::new();
    for e in r.entries() {
        let ps = if e.param_values.is_empty() { vec![Param::None] } else { e.param_values.clone() };
        for p in ps {
            for d in r.audit_display(&e.id, &p).unwrap() {
                found.insert((e.id.clone(), d.part));
            }
        }
    }
    let expected: BTreeSet<(String, String)> = [("F2", "a3"), ("F14", "b3"), ("F22", "b3"), ("F19", "a3")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(found, expected);
}

#[test]
fn corrupted_pattern_fails_only_its_entry() {
    let mut r = reg();
    let good = r.entry("F7").unwrap().pattern.clone().unwrap();
    let bad: PatternFn = Arc::new(move |p| {
        let lvl = good(p).level(5);
        good(p).with_a(5, lvl.a.scale(&Rational::from(2)))
    });
    r.entry_mut("F7").unwrap().pattern = Some(bad);
    let ids: Vec<String> = r.entries().iter().map(|e| e.id.clone()).collect();
    let s = r.verify_all(DEFAULT_ORDER, DEFAULT_N_MAX, Some(&ids));
    let failed: Vec<&str> = s.failures().map(|r| r.id.as_str()).collect();
    assert_eq!(failed, vec!["F7"]);
    let m = s.failures().next().unwrap().first_mismatch.clone().unwrap();
    assert!(m.n >= 8, "a_5 only shows from x^8 on, got n = {}", m.n);
    let _ = Level::new(P::one(), P::one());
}

#[test]
fn filters_and_unknown_ids() {
    let r = reg();
    assert!(r.verify_all(DEFAULT_ORDER, DEFAULT_N_MAX, Some(&[])).reports.is_empty());
    assert!(matches!(r.verify_id("F99", 10, 4), Err(CatalogError::UnknownId(_))));
    assert!(matches!(r.verify_hankel("F7", 4, &Param::None), Err(CatalogError::NotADeterminant(_))));
    assert!(matches!(r.verify_fraction("H7", 10, &Param::None), Err(CatalogError::NotAFraction(_))));
    assert!(matches!(r.verify_fraction("F7", 10, &Param::R(2)), Err(CatalogError::BadParameter { .. })));
    let s = r.verify_id("F1", 12, 4).unwrap();
    assert_eq!(s.reports.len(), 4);
    assert_eq!(s.reports[2].id, "F1[r=3]");
}

#[test]
fn reports_round_trip_through_json() {
    let s = reg().verify_id("H7", 10, 6).unwrap();
    let json = serde_json::to_string(&s).unwrap();
    assert!(json.contains("\"PASS\""));
    let back: Summary = serde_json::from_str(&json).unwrap();
    assert_eq!(back, s);
}

#[test]
fn random_specializations_of_the_permutation_fractions() {
    let s = verify_random_specializations(7, 3, 6).unwrap();
    assert_eq!(s.reports.len(), 6);
    assert!(s.all_passed(), "{:#?}", failures(&s));
}

#[test]
fn corrections_are_recorded() {
    let r = reg();
    for (id, part) in [("F3", "a1"), ("F3", "b0"), ("F5", "b_k"), ("F20", "b0"), ("F21", "a_j"), ("H11", "H_n")] {
        assert!(
            r.entry(id).unwrap().corrections.iter().any(|c| c.part == part),
            "{id} {part}"
        );
    }
}

#[test]
fn larger_parameters_still_pass() {
    let r = reg();
    for id in ["F1", "F2", "F3", "F8"] {
        let rep = r.verify_fraction(id, 16, &Param::R(7)).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    for id in ["H1", "H2", "H3", "H8"] {
        let rep = r.verify_hankel(id, 6, &Param::R(7)).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
