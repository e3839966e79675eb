use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{Element, RewriteSystem, Word};
use crate::scalar::Scalar;
use crate::tensorspace::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AntipodeKind {
    Weak,
    Genuine,
}

/// Δ, ε and T (or S) given on generators.
///
/// Δ and ε extend multiplicatively, the antipode anti-multiplicatively.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureMaps {
    pub coproduct: Vec<TensorElement>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Element>,
    pub antipode_kind: AntipodeKind,
}

impl StructureMaps {
    pub fn coproduct_word(&self, rs: &RewriteSystem, w: &Word) -> Result<TensorElement> {
        let mut acc = TensorElement::unit(2, &Word::unit());
        for &l in w.letters() {
            acc = acc.multiply(&self.coproduct[l as usize], rs)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, rs: &RewriteSystem, e: &Element) -> Result<TensorElement> {
        let mut out = TensorElement::zero(2);
        for (w, c) in e.terms() {
            out.add_scaled(&self.coproduct_word(rs, w)?, c);
        }
        Ok(out)
    }

    /// `(Δ⊗id)Δ`.
    pub fn coproduct2(&self, rs: &RewriteSystem, e: &Element) -> Result<TensorElement> {
        self.coproduct(rs, e)?
            .expand_slot(0, |w| self.coproduct_word(rs, w))
    }

    /// `(id⊗Δ)Δ`.
    pub fn coproduct2_right(&self, rs: &RewriteSystem, e: &Element) -> Result<TensorElement> {
        self.coproduct(rs, e)?
            .expand_slot(1, |w| self.coproduct_word(rs, w))
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let mut acc = Scalar::one();
        for &l in w.letters() {
            acc = &acc * &self.counit[l as usize];
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn counit(&self, e: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in e.terms() {
            acc += &(c * &self.counit_word(w));
        }
        acc
    }

    pub fn antipode_word(&self, rs: &RewriteSystem, w: &Word) -> Result<Element> {
        let mut acc = Element::one();
        for &l in w.letters() {
            acc = rs.multiply(&self.antipode[l as usize], &acc)?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, rs: &RewriteSystem, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.antipode_word(rs, w)?, c);
        }
        Ok(out)
    }

    /// The same algebra with `σ∘Δ`; the antipode table is kept and must be
    /// replaced by the caller if it no longer fits.
    pub fn opposite(&self) -> Result<StructureMaps> {
        Ok(StructureMaps {
            coproduct: self
                .coproduct
                .iter()
                .map(TensorElement::flip)
                .collect::<Result<_>>()?,
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_kind: self.antipode_kind,
        })
    }

    pub fn apply_endo(&self, rs: &RewriteSystem, f: EndoMap, w: &Word) -> Result<Element> {
        match f {
            EndoMap::Id => rs.nf_word(w),
            EndoMap::Antipode => self.antipode_word(rs, w),
            EndoMap::UnitCounit => Ok(Element::scalar(self.counit_word(w))),
        }
    }

    /// `f_1 * f_2 * … * f_k` applied to `e`, for `k` in 1..=3.
    ///
    /// Uses `Δ^(k-1)` built as `(Δ⊗id)Δ`.
    pub fn convolve(&self, rs: &RewriteSystem, chain: &[EndoMap], e: &Element) -> Result<Element> {
        let spread = match chain.len() {
            1 => {
                let mut t = TensorElement::zero(1);
                for (w, c) in e.terms() {
                    t.add_term(vec![w.clone()], c);
                }
                t
            }
            2 => self.coproduct(rs, e)?,
            3 => self.coproduct2(rs, e)?,
            k => {
                return Err(Error::ArityMismatch {
                    expected: 3,
                    found: k,
                })
            }
        };
        let mut out = Element::zero();
        for (slots, c) in spread.terms() {
            let factors = slots
                .iter()
                .zip(chain)
                .map(|(w, &f)| self.apply_endo(rs, f, w))
                .collect::<Result<Vec<_>>>()?;
            if factors.iter().any(Element::is_zero) {
                continue;
            }
            out.add_scaled(&rs.product(&factors)?, c);
        }
        Ok(out)
    }
}

/// Maps that can appear in a convolution chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoMap {
    Id,
    /// The weak or genuine antipode of the structure.
    Antipode,
    /// `u∘ε`.
    UnitCounit,
}
