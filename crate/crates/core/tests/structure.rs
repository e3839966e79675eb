//! Axiom checks, finite-dimensional structure and isomorphism maps.

use weakhopf_core::catalog::{self, AlgebraSpec};
use weakhopf_core::findim::{self, AlphaMode};
use weakhopf_core::freealg::Element;
use weakhopf_core::hopf::{self, Check, Sampling};
use weakhopf_core::isomap::{self, CoproductVariant};
use weakhopf_core::{classify, Rational};

fn alg(s: &str) -> std::sync::Arc<catalog::Algebra> {
    catalog::cached(s.parse().unwrap()).unwrap()
}

#[test]
fn full_suite_on_representatives() {
    for s in ["wsl:2:3", "wsl:2:0", "wsl:3:10", "uqsl:2", "sweedler:H", "sweedler:H1", "sweedler:H2"] {
        let r = hopf::verify_axioms(&alg(s), &Check::ALL, Sampling::default()).unwrap();
        assert!(r.all_passed(), "{s}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn corrupted_antipode_is_caught() {
    let a = alg("wsl:2:3");
    let mut maps = a.maps.clone();
    let e = a.letter("E1").unwrap() as usize;
    maps.antipode[e] = Element::letter(e as u8);
    let r = hopf::verify_with_maps(&a, &maps, &[Check::WeakAntipode2], Sampling::default()).unwrap();
    let c = &r.checks[0];
    assert!(!c.passed());
    assert!(c.witness.as_deref().unwrap().contains("E1"));
}

#[test]
fn corrupted_coproduct_is_caught() {
    let a = alg("wsl:2:3");
    let mut maps = a.maps.clone();
    let e = a.letter("E1").unwrap() as usize;
    maps.coproduct[e] = maps.coproduct[e].flip().unwrap();
    let r = hopf::verify_with_maps(&a, &maps, &[Check::CoproductHom], Sampling::default()).unwrap();
    assert!(!r.all_passed());
}

#[test]
fn weak_antipode_is_not_genuine() {
    let a = alg("wsl:2:3");
    assert!(hopf::antipode_failure(&a, Sampling::default()).unwrap().is_some());
    let s = hopf::genuine_antipode_search(&a, &a.gen("K1").unwrap(), 4).unwrap();
    assert!(s.inverse.is_none());
    let u = alg("uqsl:2");
    let s = hopf::genuine_antipode_search(&u, &u.gen("K1").unwrap(), 2).unwrap();
    assert_eq!(s.inverse.as_deref(), Some("Ki1"));
}

#[test]
fn solved_weak_antipode_for_opposite_coproduct() {
    let a = alg("wsl:2:2");
    let mut maps = a.maps.opposite().unwrap();
    maps.antipode = hopf::solve_weak_antipode(&a.system, &maps).unwrap();
    let r = hopf::verify_with_maps(&a, &maps, &[Check::WeakAntipode1, Check::WeakAntipode2, Check::AntipodeAntiHom], Sampling::default()).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn sweedler_structure() {
    let r = findim::verify_sweedler_structure().unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let h1 = alg("sweedler:H1");
    let sc = findim::close_basis(&h1.system, 4);
    assert!(matches!(sc, Err(weakhopf_core::Error::DimensionCap { cap: 4, .. })));
    let x = h1.parse("x").unwrap();
    let sc = findim::close_basis(&h1.system, 64).unwrap();
    assert!(findim::peirce_split(&h1, &sc, &x).is_err());
}

#[test]
fn rmatrix_identities() {
    let r = findim::verify_rmatrix(&AlphaMode::Symbolic).unwrap();
    for c in &r.checks {
        assert!(c.passed(), "{} {:?}", c.check, c.witness);
    }
    let h1 = alg("sweedler:H1");
    let data = findim::rmatrix(&h1, &AlphaMode::Symbolic).unwrap();
    let ann = findim::annihilator(&h1, &data.r).unwrap();
    assert_eq!(ann.space_dim, 36);
    let v = ann.vector.unwrap();
    assert!(!v.is_zero());
    assert!(data.r.multiply(&v, &h1.system).unwrap().is_zero());
}

#[test]
fn rmatrix_at_sample_alpha() {
    for a in [0, 1, -3] {
        let mode = AlphaMode::Value(Rational::from_integer(a.into()));
        assert!(findim::verify_rmatrix(&mode).unwrap().all_passed(), "alpha = {a}");
        assert!(findim::verify_embedded_sweedler(&mode).unwrap().all_passed(), "alpha = {a}");
    }
}

#[test]
fn omega_worked_example() {
    let m = isomap::omega_lift(2, 1).unwrap();
    assert_eq!(m.target.spec, AlgebraSpec::Wsl { n: 2, d: 2 });
    assert_eq!(m.variant, CoproductVariant::Opposite);
    assert!(isomap::check_algebra_hom(&m).passed());
    for c in isomap::check_weak_hopf_iso(&m).unwrap() {
        assert!(c.passed(), "{} {:?}", c.check, c.witness);
    }
    let back = isomap::omega_lift(2, 2).unwrap();
    assert!(isomap::check_inverse_pair(&m, &back).passed());
    assert!(isomap::check_inverse_pair(&back, &m).passed());
    assert!(isomap::witness_noncoassoc(&m, &back).unwrap().generator.is_none());
}

#[test]
fn rho_targets_reversed_mixture() {
    // halves 00|11 are palindromes, so index reversal fixes d = 3; 12 is the half swap
    let m = isomap::rho_lift(3, 3).unwrap();
    assert_eq!(m.target.spec, AlgebraSpec::Wsl { n: 3, d: 3 });
    assert!(isomap::check_weak_hopf_iso(&m).unwrap().iter().all(|c| c.passed()));
    assert!(m.type_mismatches().is_empty());
    assert_eq!(isomap::omega_lift(3, 3).unwrap().target.spec, AlgebraSpec::Wsl { n: 3, d: 12 });
    let m = isomap::rho_lift(3, 1).unwrap();
    assert_eq!(m.target.spec, AlgebraSpec::Wsl { n: 3, d: 2 });
    assert!(isomap::check_weak_hopf_iso(&m).unwrap().iter().all(|c| c.passed()));
    for d in 0..16 {
        let r = isomap::rho_lift(3, d).unwrap();
        assert_eq!(r.target.spec, AlgebraSpec::Wsl { n: 3, d: classify::r_map(3, d).unwrap() });
    }
}

#[test]
fn standard_coproduct_breaks_omega() {
    let mut m = isomap::omega_lift(2, 1).unwrap();
    m.variant = CoproductVariant::Standard;
    let checks = isomap::check_weak_hopf_iso(&m).unwrap();
    assert!(!checks[0].passed());
}

#[test]
fn unexpected_isomorphism_is_algebra_only() {
    let (psi, inv) = isomap::unexpected_pair().unwrap();
    assert!(isomap::check_algebra_hom(&psi).passed());
    assert!(isomap::check_algebra_hom(&inv).passed());
    assert!(isomap::check_inverse_pair(&psi, &inv).passed());
    assert!(isomap::check_inverse_pair(&inv, &psi).passed());
    let c = isomap::check_weak_hopf_iso(&psi).unwrap();
    assert!(!c[0].passed());
    // transported coproduct: a defect, if any, is reported with its generator
    let w = isomap::witness_noncoassoc(&psi, &inv).unwrap();
    assert_eq!(w.induced.len(), 8);
    assert_eq!(w.generator.is_some(), w.defect.is_some());
}

#[test]
fn slice_maps() {
    for (n, d) in [(2, 3), (2, 0), (3, 10)] {
        let r = isomap::check_slice_iso(n, d).unwrap();
        assert!(r.all_passed(), "{n}:{d} {:?}", r.failures().collect::<Vec<_>>());
    }
    let m = isomap::slice_map(2, 3).unwrap();
    let u = &m.source;
    let img = m.apply(&u.parse("K1*Ki1 - 1").unwrap()).unwrap();
    assert!(img.is_zero());
    let m0 = isomap::slice_map(2, 0).unwrap();
    let e = m0.target.gen("E1").unwrap();
    assert_eq!(m0.apply(&m0.source.gen("E1").unwrap()).unwrap(), e);
}
