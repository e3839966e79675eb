//! Structure maps, convolution, and the bialgebra and (weak) antipode checks.

mod maps;
mod solve;

pub use maps::{AntipodeKind, EndoMap, StructureMaps};
pub use solve::{find_left_inverse, solve_weak_antipode, weight};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

use crate::catalog::Algebra;
use crate::error::Result;
use crate::freealg::{Element, RewriteSystem, Word};
use crate::report::{run_check, CheckResult, Report};
use crate::tensorspace::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    CoproductHom,
    CounitHom,
    Coassociativity,
    CounitLaws,
    AntipodeAntiHom,
    WeakAntipode1,
    WeakAntipode2,
    /// `S*id = u∘ε` and `id*S = u∘ε`; genuine antipodes only.
    Antipode,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::CoproductHom,
        Check::CounitHom,
        Check::Coassociativity,
        Check::CounitLaws,
        Check::AntipodeAntiHom,
        Check::WeakAntipode1,
        Check::WeakAntipode2,
        Check::Antipode,
    ];

    /// The bialgebra part: everything except the antipode identities.
    pub const BIALGEBRA: [Check; 5] = [
        Check::CoproductHom,
        Check::CounitHom,
        Check::Coassociativity,
        Check::CounitLaws,
        Check::AntipodeAntiHom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::CoproductHom => "coproduct-hom",
            Check::CounitHom => "counit-hom",
            Check::Coassociativity => "coassociativity",
            Check::CounitLaws => "counit-laws",
            Check::AntipodeAntiHom => "antipode-antihom",
            Check::WeakAntipode1 => "wa1",
            Check::WeakAntipode2 => "wa2",
            Check::Antipode => "antipode",
        }
    }

    pub fn from_name(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Sampling parameters for checks that cannot run on all elements.
#[derive(Clone, Copy, Debug)]
pub struct Sampling {
    pub seed: u64,
    pub degree2_samples: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            seed: 1,
            degree2_samples: 50,
        }
    }
}

/// Generators followed by normal forms of seeded random degree-2 monomials.
pub fn sample_elements(alg: &Algebra, sampling: Sampling) -> Result<Vec<Element>> {
    let n = alg.alphabet().len();
    let mut out: Vec<Element> = alg.alphabet().letters().map(Element::letter).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut seen = BTreeSet::new();
    for _ in 0..sampling.degree2_samples {
        let w = Word::new(vec![rng.gen_range(0..n) as u8, rng.gen_range(0..n) as u8]);
        if seen.insert(w.clone()) {
            out.push(alg.nf(&Element::from_word(w))?);
        }
    }
    Ok(out)
}

fn first_failure<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> std::result::Result<(), String> + Sync,
) -> std::result::Result<(), String> {
    match items.par_iter().map(&f).find_first(|r| r.is_err()) {
        Some(e) => e,
        None => Ok(()),
    }
}

fn tensor_nf(rs: &RewriteSystem, t: &TensorElement) -> std::result::Result<TensorElement, String> {
    t.normalize(rs).map_err(|e| e.to_string())
}

/// Runs the requested checks against the algebra's own structure maps.
pub fn verify_axioms(alg: &Algebra, checks: &[Check], sampling: Sampling) -> Result<Report> {
    verify_with_maps(alg, &alg.maps, checks, sampling)
}

pub fn verify_with_maps(
    alg: &Algebra,
    maps: &StructureMaps,
    checks: &[Check],
    sampling: Sampling,
) -> Result<Report> {
    let samples = sample_elements(alg, sampling)?;
    let generators: Vec<Element> = alg.alphabet().letters().map(Element::letter).collect();
    let name = alg.name();
    let rs = &alg.system;
    let render = |e: &Element| alg.render(e);
    let results: Vec<CheckResult> = checks
        .par_iter()
        .filter(|c| **c != Check::Antipode || maps.antipode_kind == AntipodeKind::Genuine)
        .map(|&check| {
            let res = run_check(&name, check.name(), || match check {
                Check::CoproductHom => first_failure(&alg.relations, |r| {
                    let d = (|| -> Result<TensorElement> {
                        Ok(&maps.coproduct(rs, &r.lhs)? - &maps.coproduct(rs, &r.rhs)?)
                    })()
                    .map_err(|e| format!("{}: {e}", r.label))?;
                    let d = tensor_nf(rs, &d)?;
                    if d.is_zero() {
                        Ok(())
                    } else {
                        Err(format!("{}: {}", r.label, alg.render_tensor(&d)))
                    }
                }),
                Check::CounitHom => first_failure(&alg.relations, |r| {
                    let d = &maps.counit(&r.lhs) - &maps.counit(&r.rhs);
                    if d.is_zero() {
                        Ok(())
                    } else {
                        Err(format!("{}: {d}", r.label))
                    }
                }),
                Check::Coassociativity => first_failure(&samples, |x| {
                    let a = maps.coproduct2(rs, x).map_err(|e| e.to_string())?;
                    let b = maps.coproduct2_right(rs, x).map_err(|e| e.to_string())?;
                    let d = tensor_nf(rs, &(&a - &b))?;
                    if d.is_zero() {
                        Ok(())
                    } else {
                        Err(format!("{}: {}", render(x), alg.render_tensor(&d)))
                    }
                }),
                Check::CounitLaws => first_failure(&generators, |x| {
                    let t = maps.coproduct(rs, x).map_err(|e| e.to_string())?;
                    for side in [0usize, 1] {
                        let mut acc = Element::zero();
                        for (slots, c) in t.terms() {
                            let eps = maps.counit_word(&slots[side]);
                            acc.add_term(slots[1 - side].clone(), &(c * &eps));
                        }
                        let d = &rs.nf(&acc).map_err(|e| e.to_string())? - x;
                        if !d.is_zero() {
                            return Err(format!("{} (slot {side}): {}", render(x), render(&d)));
                        }
                    }
                    Ok(())
                }),
                Check::AntipodeAntiHom => first_failure(&alg.relations, |r| {
                    let d = (|| -> Result<Element> {
                        Ok(&maps.antipode(rs, &r.lhs)? - &maps.antipode(rs, &r.rhs)?)
                    })()
                    .map_err(|e| format!("{}: {e}", r.label))?;
                    if d.is_zero() {
                        Ok(())
                    } else {
                        Err(format!("{}: {}", r.label, render(&d)))
                    }
                }),
                Check::WeakAntipode1 => first_failure(&samples, |x| {
                    let d = wa1_residual(rs, maps, x).map_err(|e| e.to_string())?;
                    residual_ok(&d, x, &render)
                }),
                Check::WeakAntipode2 => first_failure(&samples, |x| {
                    let d = wa2_residual(rs, maps, x).map_err(|e| e.to_string())?;
                    residual_ok(&d, x, &render)
                }),
                Check::Antipode => first_failure(&samples, |x| {
                    for chain in [
                        [EndoMap::Antipode, EndoMap::Id],
                        [EndoMap::Id, EndoMap::Antipode],
                    ] {
                        let d = antipode_residual(rs, maps, &chain, x).map_err(|e| e.to_string())?;
                        residual_ok(&d, x, &render)?;
                    }
                    Ok(())
                }),
            });
            match check {
                Check::WeakAntipode1 | Check::WeakAntipode2 | Check::Antipode | Check::Coassociativity => res
                    .with_detail(format!(
                        "generators plus {} distinct degree-2 monomials from {} seeded draws (seed {})",
                        samples.len() - generators.len(),
                        sampling.degree2_samples,
                        sampling.seed
                    )),
                _ => res,
            }
        })
        .collect();
    Ok(Report { checks: results })
}

fn residual_ok(
    d: &Element,
    x: &Element,
    render: &impl Fn(&Element) -> String,
) -> std::result::Result<(), String> {
    if d.is_zero() {
        Ok(())
    } else {
        Err(format!("at {}: residual {}", render(x), render(d)))
    }
}

/// `(T*id*T)(x) - T(x)`.
pub fn wa1_residual(rs: &RewriteSystem, maps: &StructureMaps, x: &Element) -> Result<Element> {
    let lhs = maps.convolve(rs, &[EndoMap::Antipode, EndoMap::Id, EndoMap::Antipode], x)?;
    Ok(&lhs - &maps.antipode(rs, x)?)
}

/// `(id*T*id)(x) - x`.
pub fn wa2_residual(rs: &RewriteSystem, maps: &StructureMaps, x: &Element) -> Result<Element> {
    let lhs = maps.convolve(rs, &[EndoMap::Id, EndoMap::Antipode, EndoMap::Id], x)?;
    Ok(&lhs - &rs.nf(x)?)
}

/// `(f*g)(x) - ε(x)1` for a two-map chain.
pub fn antipode_residual(
    rs: &RewriteSystem,
    maps: &StructureMaps,
    chain: &[EndoMap; 2],
    x: &Element,
) -> Result<Element> {
    let lhs = maps.convolve(rs, chain, x)?;
    Ok(&lhs - &Element::scalar(maps.counit(x)))
}

/// Outcome of asking whether `S*id(x) = ε(x)1` can be solved in the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseSearch {
    pub element: String,
    pub max_degree: usize,
    pub candidates: usize,
    /// `Some(y)` with `y x = 1` if one exists in the searched span.
    pub inverse: Option<String>,
}

/// Searches for `y` with `nf(y x) = 1` among normal words of degree at most `max_degree`.
pub fn genuine_antipode_search(alg: &Algebra, x: &Element, max_degree: usize) -> Result<InverseSearch> {
    let (candidates, inverse) = find_left_inverse(&alg.system, x, max_degree)?;
    Ok(InverseSearch {
        element: alg.render(x),
        max_degree,
        candidates,
        inverse: inverse.map(|y| alg.render(&y)),
    })
}

/// The first generator or sample where `S*id = u∘ε` fails for the algebra's antipode table.
pub fn antipode_failure(alg: &Algebra, sampling: Sampling) -> Result<Option<(String, String)>> {
    for x in sample_elements(alg, sampling)? {
        let d = antipode_residual(&alg.system, &alg.maps, &[EndoMap::Antipode, EndoMap::Id], &x)?;
        if !d.is_zero() {
            return Ok(Some((alg.render(&x), alg.render(&d))));
        }
    }
    Ok(None)
}
