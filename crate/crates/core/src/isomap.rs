//! Maps between presented algebras given by generator images: homomorphism,
//! inverse and weak Hopf isomorphism checks, the lifted `ρ`/`ω` maps, and the
//! slice map from classical `U_q[sl_n]`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, Algebra, AlgebraSpec};
use crate::classify;
use crate::error::{Error, Result};
use crate::freealg::{Element, Letter, Word};
use crate::hopf::{solve_weak_antipode, StructureMaps};
use crate::report::{run_check, CheckResult, Report};
use crate::tensorspace::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoproductVariant {
    Standard,
    Opposite,
}

#[derive(Clone, Debug)]
pub struct GenMap {
    pub name: String,
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    /// Image of each source letter.
    pub images: Vec<Element>,
    /// Image of `1`; the slice map sends it to `J`.
    pub unit_image: Element,
    pub variant: CoproductVariant,
}

impl GenMap {
    /// Builds a map from `(source generator, target expression)` pairs.
    pub fn from_table(
        name: impl Into<String>,
        source: Arc<Algebra>,
        target: Arc<Algebra>,
        table: &[(&str, &str)],
        variant: CoproductVariant,
    ) -> Result<GenMap> {
        let mut images = vec![None; source.alphabet().len()];
        for (x, y) in table {
            let l = source.letter(x)?;
            images[l as usize] = Some(target.nf(&target.parse(y)?)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(l, img)| {
                img.ok_or_else(|| {
                    Error::Config(format!("no image for {}", source.alphabet().symbol(l as Letter).name))
                })
            })
            .collect::<Result<_>>()?;
        Ok(GenMap {
            name: name.into(),
            source,
            target,
            images,
            unit_image: Element::one(),
            variant,
        })
    }

    pub fn apply_word(&self, w: &Word) -> Result<Element> {
        if w.is_empty() {
            return Ok(self.unit_image.clone());
        }
        let factors: Vec<Element> = w.letters().iter().map(|&l| self.images[l as usize].clone()).collect();
        self.target.product(&factors)
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.apply_word(w)?, c);
        }
        Ok(out)
    }

    pub fn apply_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        t.map_slots(|_, w| self.apply_word(w))
    }

    /// Image of `J`, computed from the images of `K_1` and `K̄_1`.
    pub fn j_image(&self) -> Result<Option<Element>> {
        self.source.j().map(|j| self.apply(&j)).transpose()
    }

    /// Letters whose image is a single target letter of a different type.
    pub fn type_mismatches(&self) -> Vec<String> {
        let (sa, ta) = (self.source.alphabet(), self.target.alphabet());
        let mut out = Vec::new();
        for l in sa.letters() {
            let img = &self.images[l as usize];
            if let Some((w, _)) = img.leading() {
                if img.len() == 1 && w.len() == 1 {
                    let (s, t) = (sa.symbol(l), ta.symbol(w.letters()[0]));
                    if s.gen_type != t.gen_type {
                        out.push(format!("{} ({:?}) -> {} ({:?})", s.name, s.gen_type, t.name, t.gen_type));
                    }
                }
            }
        }
        out
    }

    /// Structure maps on the target that the map should intertwine with.
    pub fn target_maps(&self) -> Result<StructureMaps> {
        match self.variant {
            CoproductVariant::Standard => Ok(self.target.maps.clone()),
            CoproductVariant::Opposite => {
                let mut maps = self.target.maps.opposite()?;
                maps.antipode = solve_weak_antipode(&self.target.system, &maps)?;
                Ok(maps)
            }
        }
    }
}

fn zero_or(d: &Element, alg: &Algebra, label: &str) -> std::result::Result<(), String> {
    if d.is_zero() {
        Ok(())
    } else {
        Err(format!("{label}: {}", alg.render(d)))
    }
}

fn first_err<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> std::result::Result<(), String> + Sync,
) -> std::result::Result<(), String> {
    items.par_iter().map(&f).find_first(|r| r.is_err()).unwrap_or(Ok(()))
}

/// Every defining relation of the source maps to zero.
pub fn check_algebra_hom(map: &GenMap) -> CheckResult {
    run_check(&map.name, "algebra-hom", || {
        first_err(&map.source.relations, |r| {
            let d = map.apply(&r.difference()).map_err(|e| format!("{}: {e}", r.label))?;
            zero_or(&d, &map.target, &r.label)
        })
    })
    .with_detail(format!(
        "{} relations of {} into {}",
        map.source.relations.len(),
        map.source.name(),
        map.target.name()
    ))
}

/// `g∘f = id` on the generators of `f`'s source and `f∘g = id` on `g`'s, with
/// `J` included on both sides.
pub fn check_inverse_pair(f: &GenMap, g: &GenMap) -> CheckResult {
    run_check(&f.name, format!("inverse-pair:{}", g.name), || {
        for (a, b) in [(f, g), (g, f)] {
            let mut items: Vec<(String, Element)> = a
                .source
                .alphabet()
                .symbols()
                .iter()
                .enumerate()
                .map(|(l, s)| (s.name.clone(), Element::letter(l as Letter)))
                .collect();
            if let Some(j) = a.source.j() {
                items.push(("J".into(), j));
            }
            first_err(&items, |(name, x)| {
                let back = a.apply(x).and_then(|y| b.apply(&y)).map_err(|e| e.to_string())?;
                let d = &back - &a.source.nf(x).map_err(|e| e.to_string())?;
                zero_or(&d, &a.source, &format!("{} then {} at {name}", a.name, b.name))
            })?;
        }
        Ok(())
    })
}

/// `(ψ⊗ψ)Δ = Δ'ψ`, `ε = ε'ψ`, `ψT = T'ψ` on every source generator.
pub fn check_weak_hopf_iso(map: &GenMap) -> Result<Vec<CheckResult>> {
    let tmaps = map.target_maps()?;
    let (src, tgt) = (&map.source, &map.target);
    let gens: Vec<Letter> = src.alphabet().letters().collect();
    let label = |l: Letter| src.alphabet().symbol(l).name.clone();
    let variant = format!("{:?} target coproduct", map.variant).to_lowercase();
    let coproduct = run_check(&map.name, "consistency-coproduct", || {
        first_err(&gens, |&l| {
            let x = Element::letter(l);
            let lhs = src
                .maps
                .coproduct(&src.system, &x)
                .and_then(|t| map.apply_tensor(&t))
                .map_err(|e| e.to_string())?;
            let rhs = map
                .apply(&x)
                .and_then(|y| tmaps.coproduct(&tgt.system, &y))
                .map_err(|e| e.to_string())?;
            let d = (&lhs - &rhs).normalize(&tgt.system).map_err(|e| e.to_string())?;
            if d.is_zero() {
                Ok(())
            } else {
                Err(format!("at {}: {}", label(l), tgt.render_tensor(&d)))
            }
        })
    })
    .with_detail(variant.clone());
    let counit = run_check(&map.name, "consistency-counit", || {
        first_err(&gens, |&l| {
            let x = Element::letter(l);
            let y = map.apply(&x).map_err(|e| e.to_string())?;
            let d = &src.maps.counit(&x) - &tmaps.counit(&y);
            if d.is_zero() {
                Ok(())
            } else {
                Err(format!("at {}: {d}", label(l)))
            }
        })
    });
    let antipode = run_check(&map.name, "consistency-antipode", || {
        first_err(&gens, |&l| {
            let x = Element::letter(l);
            let lhs = src
                .maps
                .antipode(&src.system, &x)
                .and_then(|t| map.apply(&t))
                .map_err(|e| e.to_string())?;
            let rhs = map
                .apply(&x)
                .and_then(|y| tmaps.antipode(&tgt.system, &y))
                .map_err(|e| e.to_string())?;
            zero_or(&(&lhs - &rhs), tgt, &format!("at {}", label(l)))
        })
    })
    .with_detail(match map.variant {
        CoproductVariant::Standard => "target antipode table".to_string(),
        CoproductVariant::Opposite => format!(
            "solved T': {}",
            tgt.alphabet()
                .symbols()
                .iter()
                .zip(&tmaps.antipode)
                .map(|(s, t)| format!("{} -> {}", s.name, tgt.render(t)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    });
    Ok(vec![coproduct, counit, antipode])
}

/// Index reversal `i ↦ n-i` from `wsl:n:d` onto `wsl:n:r(d)`.
pub fn rho_lift(n: usize, d: u64) -> Result<GenMap> {
    let target_d = classify::r_map(n, d)?;
    lift(n, d, target_d, format!("rho[{n}:{d}->{target_d}]"), CoproductVariant::Standard, |kind, i| {
        (kind, n - i)
    })
}

/// `E ↔ F`, `K ↔ K̄` from `wsl:n:d` onto `wsl:n:w(d)`, against the opposite coproduct.
pub fn omega_lift(n: usize, d: u64) -> Result<GenMap> {
    let target_d = classify::w_map(n, d)?;
    lift(n, d, target_d, format!("omega[{n}:{d}->{target_d}]"), CoproductVariant::Opposite, |kind, i| {
        let swapped = match kind {
            "E" => "F",
            "F" => "E",
            "K" => "Kb",
            _ => "K",
        };
        (swapped, i)
    })
}

fn lift(
    n: usize,
    d: u64,
    target_d: u64,
    name: String,
    variant: CoproductVariant,
    relabel: impl Fn(&'static str, usize) -> (&'static str, usize),
) -> Result<GenMap> {
    let source = catalog::cached(AlgebraSpec::Wsl { n, d })?;
    let target = catalog::cached(AlgebraSpec::Wsl { n, d: target_d })?;
    let mut table = Vec::new();
    for kind in ["E", "F", "K", "Kb"] {
        for i in 1..n {
            let (k, j) = relabel(kind, i);
            table.push((format!("{kind}{i}"), format!("{k}{j}")));
        }
    }
    let table: Vec<(&str, &str)> = table.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    GenMap::from_table(name, source, target, &table, variant)
}

/// The algebra isomorphism `wsl:3:10 → wsl:3:9` and its inverse.
pub fn unexpected_pair() -> Result<(GenMap, GenMap)> {
    let u = catalog::cached(AlgebraSpec::Wsl { n: 3, d: 10 })?;
    let v = catalog::cached(AlgebraSpec::Wsl { n: 3, d: 9 })?;
    let psi = GenMap::from_table(
        "psi[3:10->9]",
        u.clone(),
        v.clone(),
        &[
            ("E1", "F2 - Kb1*K1*F2 + F1"),
            ("E2", "Kb1*K1*F2"),
            ("F1", "E1"),
            ("F2", "E2"),
            ("K1", "Kb1"),
            ("K2", "Kb2"),
            ("Kb1", "K1"),
            ("Kb2", "K2"),
        ],
        CoproductVariant::Standard,
    )?;
    let inv = GenMap::from_table(
        "psi_inv[3:9->10]",
        v,
        u,
        &[
            ("E1", "F1"),
            ("E2", "F2"),
            ("F1", "Kb1*K1*E1"),
            ("F2", "E1 - Kb1*K1*E1 + E2"),
            ("K1", "Kb1"),
            ("K2", "Kb2"),
            ("Kb1", "K1"),
            ("Kb2", "K2"),
        ],
        CoproductVariant::Standard,
    )?;
    Ok((psi, inv))
}

/// `E_i ↦ JE_i`, `F_i ↦ JF_i`, `K_i ↦ JK_i`, `K_i^{-1} ↦ JK̄_i`, `1 ↦ J`.
pub fn slice_map(n: usize, d: u64) -> Result<GenMap> {
    let source = catalog::cached(AlgebraSpec::Uqsl { n })?;
    let target = catalog::cached(AlgebraSpec::Wsl { n, d })?;
    let j = target.j().expect("wsl has J");
    let mut images = vec![Element::zero(); source.alphabet().len()];
    for (l, s) in source.alphabet().symbols().iter().enumerate() {
        let name = match s.name.strip_prefix("Ki") {
            Some(i) => format!("Kb{i}"),
            None => s.name.clone(),
        };
        images[l] = target.mul(&j, &target.gen(&name)?)?;
    }
    Ok(GenMap {
        name: format!("slice[uqsl:{n}->wsl:{n}:{d}]"),
        source,
        unit_image: target.nf(&j)?,
        target,
        images,
        variant: CoproductVariant::Standard,
    })
}

/// Relations preserved and `J` a two-sided unit on every image generator.
pub fn check_slice_iso(n: usize, d: u64) -> Result<Report> {
    let map = slice_map(n, d)?;
    let mut report = Report::default();
    report.push(check_algebra_hom(&map));
    let j = map.unit_image.clone();
    let tgt = map.target.clone();
    report.push(run_check(&map.name, "slice-unit", || {
        let sq = &tgt.mul(&j, &j).map_err(|e| e.to_string())? - &j;
        zero_or(&sq, &tgt, "J^2 - J")?;
        first_err(&map.images, |y| {
            let left = &tgt.mul(&j, y).map_err(|e| e.to_string())? - y;
            let right = &tgt.mul(y, &j).map_err(|e| e.to_string())? - y;
            zero_or(&left, &tgt, &format!("J·{}", tgt.render(y)))?;
            zero_or(&right, &tgt, &format!("{}·J", tgt.render(y)))
        })
    }));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoassocWitness {
    pub map: String,
    /// Target generator with a nonzero defect, if any.
    pub generator: Option<String>,
    pub defect: Option<String>,
    /// `Δ'` on every target generator.
    pub induced: Vec<(String, String)>,
}

/// Transports the source coproduct along `map` and tests coassociativity of
/// `Δ' = (map⊗map)∘Δ∘inverse` on target generators.
pub fn witness_noncoassoc(map: &GenMap, inverse: &GenMap) -> Result<CoassocWitness> {
    let (src, tgt) = (&map.source, &map.target);
    let mut coproduct = Vec::new();
    for l in tgt.alphabet().letters() {
        let pre = inverse.apply(&Element::letter(l))?;
        let t = src.maps.coproduct(&src.system, &pre)?;
        coproduct.push(map.apply_tensor(&t)?.normalize(&tgt.system)?);
    }
    let induced = StructureMaps {
        coproduct,
        ..tgt.maps.clone()
    };
    let names: Vec<String> = tgt.alphabet().symbols().iter().map(|s| s.name.clone()).collect();
    let mut out = CoassocWitness {
        map: map.name.clone(),
        generator: None,
        defect: None,
        induced: names
            .iter()
            .zip(&induced.coproduct)
            .map(|(n, t)| (n.clone(), tgt.render_tensor(t)))
            .collect(),
    };
    for l in tgt.alphabet().letters() {
        let x = Element::letter(l);
        let d = (&induced.coproduct2(&tgt.system, &x)? - &induced.coproduct2_right(&tgt.system, &x)?)
            .normalize(&tgt.system)?;
        if !d.is_zero() {
            out.generator = Some(names[l as usize].clone());
            out.defect = Some(tgt.render_tensor(&d));
            break;
        }
    }
    Ok(out)
}

/// Identity map on a catalog algebra.
pub fn identity(alg: Arc<Algebra>) -> GenMap {
    GenMap {
        name: format!("id[{}]", alg.name()),
        images: alg.alphabet().letters().map(Element::letter).collect(),
        source: alg.clone(),
        target: alg,
        unit_image: Element::one(),
        variant: CoproductVariant::Standard,
    }
}

/// Homomorphism, inverse-pair and weak Hopf checks for the `ρ` and `ω` lifts of `wsl:n:d`.
pub fn verify_lifts(n: usize, d: u64) -> Result<Report> {
    let mut report = Report::default();
    for (f, g) in [
        (rho_lift(n, d)?, rho_lift(n, classify::r_map(n, d)?)?),
        (omega_lift(n, d)?, omega_lift(n, classify::w_map(n, d)?)?),
    ] {
        report.push(check_algebra_hom(&f));
        let mismatches = f.type_mismatches();
        report.push(run_check(&f.name, "type-preserving", || {
            if mismatches.is_empty() {
                Ok(())
            } else {
                Err(mismatches.join("; "))
            }
        }));
        report.push(check_inverse_pair(&f, &g));
        report.checks.extend(check_weak_hopf_iso(&f)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_no_witness() {
        let a = catalog::cached(AlgebraSpec::Wsl { n: 2, d: 3 }).unwrap();
        let id = identity(a);
        assert!(check_algebra_hom(&id).passed());
        assert!(witness_noncoassoc(&id, &id).unwrap().generator.is_none());
    }

    #[test]
    fn swapped_cartan_images_break_the_hom() {
        let a = catalog::cached(AlgebraSpec::Wsl { n: 2, d: 3 }).unwrap();
        let mut m = identity(a);
        m.images.swap(1, 2);
        assert!(!check_algebra_hom(&m).passed());
    }

    #[test]
    fn j_image_is_computed() {
        let m = omega_lift(2, 1).unwrap();
        let j = m.target.j().unwrap();
        assert_eq!(m.j_image().unwrap().unwrap(), j);
    }
}
