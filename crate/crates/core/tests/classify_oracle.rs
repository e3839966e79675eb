//! Orbit counting against string manipulation of binary expansions.

use proptest::prelude::*;
use std::collections::BTreeSet;
use weakhopf_core::classify::{self, mixture_count};

fn bits(n: usize, d: u64) -> String {
    format!("{d:0width$b}", width = 2 * (n - 1))
}

fn swap_halves(s: &str) -> String {
    let (a, b) = s.split_at(s.len() / 2);
    format!("{b}{a}")
}

fn reverse_halves(s: &str) -> String {
    let (a, b) = s.split_at(s.len() / 2);
    a.chars().rev().chain(b.chars().rev()).collect()
}

fn parse(s: &str) -> u64 {
    u64::from_str_radix(s, 2).unwrap()
}

fn naive_orbit_count(n: usize) -> usize {
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for d in 0..mixture_count(n) {
        if seen.contains(&d) {
            continue;
        }
        orbits += 1;
        let s = bits(n, d);
        for t in [s.clone(), swap_halves(&s), reverse_halves(&s), reverse_halves(&swap_halves(&s))] {
            seen.insert(parse(&t));
        }
    }
    orbits
}

proptest! {
    #[test]
    fn maps_match_string_oracle(n in 2usize..=12, seed in any::<u64>()) {
        let d = seed % mixture_count(n);
        let s = bits(n, d);
        prop_assert_eq!(classify::w_map(n, d).unwrap(), parse(&swap_halves(&s)));
        prop_assert_eq!(classify::r_map(n, d).unwrap(), parse(&reverse_halves(&s)));
    }

    #[test]
    fn maps_are_commuting_involutions(n in 2usize..=12, seed in any::<u64>()) {
        let d = seed % mixture_count(n);
        let w = |x| classify::w_map(n, x).unwrap();
        let r = |x| classify::r_map(n, x).unwrap();
        prop_assert_eq!(w(w(d)), d);
        prop_assert_eq!(r(r(d)), d);
        prop_assert_eq!(r(w(d)), w(r(d)));
    }

    #[test]
    fn orbit_contains_its_images(n in 2usize..=8, seed in any::<u64>()) {
        let d = seed % mixture_count(n);
        let o = classify::orbit(n, d).unwrap();
        prop_assert!(o.contains(&d));
        prop_assert!(o.contains(&classify::w_map(n, d).unwrap()));
        prop_assert!(o.contains(&classify::r_map(n, d).unwrap()));
        prop_assert!(matches!(o.len(), 1 | 2 | 4));
    }
}

#[test]
fn counts_match_naive_enumeration() {
    for n in 2..=8 {
        let r = classify::enumerate(n, false).unwrap();
        assert_eq!(r.count as usize, naive_orbit_count(n), "n = {n}");
        assert!(r.consistent());
    }
}

#[test]
fn tabulated_counts() {
    let expected = [3, 7, 24, 76, 288, 1072, 4224, 16576, 66048];
    for (n, z) in (2..=10).zip(expected) {
        assert_eq!(classify::z_closed(n), z);
        assert_eq!(classify::enumerate(n, false).unwrap().count, z);
    }
}

#[test]
fn small_orbit_lists() {
    let r = classify::enumerate(2, true).unwrap();
    assert_eq!(r.orbits.unwrap(), vec![vec![0], vec![1, 2], vec![3]]);
    let r = classify::enumerate(3, true).unwrap();
    let orbits = r.orbits.unwrap();
    assert_eq!(orbits.len(), 7);
    assert!(orbits.contains(&vec![7, 11, 13, 14]));
}

#[test]
fn census_matches_closed_form() {
    for n in 2..=10 {
        let c = classify::enumerate(n, false).unwrap().census;
        assert_eq!([c.case1, c.case2, c.case3, c.triple_intersection], classify::census_closed(n));
        assert_eq!(c.union + c.union_complement, mixture_count(n));
    }
}

#[test]
fn worked_example_43() {
    assert_eq!(bits(4, 43), "101011");
    assert_eq!(classify::digits(4, 43).unwrap(), vec![1, 0, 1, 0, 1, 1]);
}
