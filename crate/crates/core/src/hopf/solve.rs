//! Solving for antipode tables and inverses by linear algebra over normal words.

use super::maps::{EndoMap, StructureMaps};
use crate::error::{Error, Result};
use crate::freealg::{Element, Letter, RewriteSystem, Sort, Word};
use crate::linalg::{self, WordIndex};
use crate::scalar::Scalar;

/// Root-lattice weight of a word: `+e_i` per `E_i`, `-e_i` per `F_i`.
pub fn weight(rs: &RewriteSystem, w: &Word) -> Vec<i64> {
    let a = rs.alphabet();
    let rank = a.symbols().iter().filter_map(|s| s.index).max().unwrap_or(0);
    let mut v = vec![0; rank];
    for &l in w.letters() {
        let s = a.symbol(l);
        match (s.sort, s.index) {
            (Sort::Raising, Some(i)) => v[i - 1] += 1,
            (Sort::Lowering, Some(i)) => v[i - 1] -= 1,
            _ => {}
        }
    }
    v
}

fn is_cartan(rs: &RewriteSystem, l: Letter) -> bool {
    matches!(rs.alphabet().symbol(l).sort, Sort::Cartan | Sort::CartanBar)
}

/// `y` with `nf(y x) = 1` in the span of normal words of degree at most
/// `max_degree`; returns the candidate count and the solution if any.
pub fn find_left_inverse(
    rs: &RewriteSystem,
    x: &Element,
    max_degree: usize,
) -> Result<(usize, Option<Element>)> {
    let candidates = rs.normal_words(max_degree);
    let mut index = WordIndex::from_words([Word::unit()]);
    let products = candidates
        .iter()
        .map(|w| rs.multiply(&Element::from_word(w.clone()), x))
        .collect::<Result<Vec<_>>>()?;
    let m = index.columns(&products);
    let mut b = vec![Scalar::zero(); index.len()];
    b[0] = Scalar::one();
    let sol = linalg::solve(&m, &b)?;
    Ok((
        candidates.len(),
        sol.map(|c| {
            Element::from_terms(candidates.iter().cloned().zip(c).filter(|(_, c)| !c.is_zero()))
        }),
    ))
}

/// Solves (wa1) and (wa2) on generators for the antipode table of `maps`.
///
/// Cartan generators take the first normal Cartan monomial of degree at most
/// 2 satisfying both identities. With those fixed, each remaining generator's
/// identities are affine in its own image, which is solved over
/// weight-homogeneous normal words of degree at most 3 with free coordinates
/// set to zero.
pub fn solve_weak_antipode(rs: &RewriteSystem, maps: &StructureMaps) -> Result<Vec<Element>> {
    let alphabet = rs.alphabet().clone();
    let mut table = maps.clone();
    table.antipode = vec![Element::zero(); alphabet.len()];
    let cartan_words: Vec<Word> = rs
        .normal_words(2)
        .into_iter()
        .filter(|w| w.letters().iter().all(|&l| is_cartan(rs, l)))
        .collect();
    let (cartan, others): (Vec<Letter>, Vec<Letter>) =
        alphabet.letters().partition(|&l| is_cartan(rs, l));

    for &l in &cartan {
        let x = Element::letter(l);
        let mut found = None;
        for w in &cartan_words {
            table.antipode[l as usize] = Element::from_word(w.clone());
            if super::wa1_residual(rs, &table, &x)?.is_zero()
                && super::wa2_residual(rs, &table, &x)?.is_zero()
            {
                found = Some(w.clone());
                break;
            }
        }
        let w = found.ok_or_else(|| {
            Error::Config(format!("no weak antipode image for {}", alphabet.symbol(l).name))
        })?;
        table.antipode[l as usize] = Element::from_word(w);
    }

    let pool = rs.normal_words(3);
    for &l in &others {
        let x = Element::letter(l);
        let target = weight(rs, &Word::letter(l));
        let candidates: Vec<Word> = pool
            .iter()
            .filter(|w| weight(rs, w) == target)
            .cloned()
            .collect();
        let eval = |table: &StructureMaps| -> Result<(Element, Element)> {
            Ok((
                table.convolve(rs, &[EndoMap::Antipode, EndoMap::Id, EndoMap::Antipode], &x)?,
                table.convolve(rs, &[EndoMap::Id, EndoMap::Antipode, EndoMap::Id], &x)?,
            ))
        };
        table.antipode[l as usize] = Element::zero();
        let (f1_0, f2_0) = eval(&table)?;
        let mut cols1 = Vec::new();
        let mut cols2 = Vec::new();
        for w in &candidates {
            let we = Element::from_word(w.clone());
            table.antipode[l as usize] = we.clone();
            let (f1, f2) = eval(&table)?;
            cols1.push(&(&f1 - &f1_0) - &we);
            cols2.push(&f2 - &f2_0);
        }
        let mut ix1 = WordIndex::new();
        let rhs1 = ix1.vector(&-&f1_0);
        let m1 = ix1.columns(&cols1);
        let mut ix2 = WordIndex::new();
        let rhs2 = ix2.vector(&(&x - &f2_0));
        let m2 = ix2.columns(&cols2);
        let mut m = m1;
        let mut b = rhs1;
        b.resize(m.len(), Scalar::zero());
        let mut b2 = rhs2;
        b2.resize(m2.len(), Scalar::zero());
        m.extend(m2);
        b.extend(b2);
        if m.is_empty() {
            m = vec![vec![Scalar::zero(); candidates.len()]];
            b = vec![Scalar::zero()];
        }
        let sol = linalg::solve(&m, &b)?.ok_or_else(|| {
            Error::Config(format!(
                "(wa1)/(wa2) have no solution for {} over {} candidates",
                alphabet.symbol(l).name,
                candidates.len()
            ))
        })?;
        table.antipode[l as usize] = Element::from_terms(
            candidates
                .iter()
                .cloned()
                .zip(sol)
                .filter(|(_, c)| !c.is_zero()),
        );
    }
    Ok(table.antipode)
}
