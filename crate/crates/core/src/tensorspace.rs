//! Linear combinations of pure tensors of normal words, arity 1 to 3.

use std::collections::{btree_map, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Element, RewriteSystem, Word};
use crate::scalar::Scalar;

pub const MAX_ARITY: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> TensorElement {
        assert!((1..=MAX_ARITY).contains(&arity), "arity {arity} out of range");
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `unit ⊗ unit ⊗ …`.
    pub fn unit(arity: usize, unit: &Word) -> TensorElement {
        let mut t = TensorElement::zero(arity);
        t.add_term(vec![unit.clone(); arity], &Scalar::one());
        t
    }

    /// `a_1 ⊗ … ⊗ a_k` expanded bilinearly.
    pub fn pure(factors: &[&Element]) -> TensorElement {
        let mut t = TensorElement::zero(factors.len());
        let mut acc: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in f.terms() {
                    let mut v = ws.clone();
                    v.push(w.clone());
                    next.push((v, c * d));
                }
            }
            acc = next;
        }
        for (ws, c) in acc {
            t.add_term(ws, &c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, slots: Vec<Word>, c: &Scalar) {
        debug_assert_eq!(slots.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        for (k, d) in &other.terms {
            self.add_term(k.clone(), &(c * d));
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, slots: &[Word]) -> Scalar {
        self.terms.get(slots).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest slot degree.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|k| k.iter().map(Word::len))
            .max()
            .unwrap_or(0)
    }

    /// Replaces every slot word by its normal form.
    pub fn normalize(&self, rs: &RewriteSystem) -> Result<TensorElement> {
        self.map_slots(|_, w| rs.nf_word(w))
    }

    /// Applies a linear map to each slot independently; `f(slot, word)`.
    pub fn map_slots(
        &self,
        mut f: impl FnMut(usize, &Word) -> Result<Element>,
    ) -> Result<TensorElement> {
        let mut out = TensorElement::zero(self.arity);
        for (slots, c) in &self.terms {
            let images = slots
                .iter()
                .enumerate()
                .map(|(i, w)| f(i, w))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Element> = images.iter().collect();
            out.add_scaled(&TensorElement::pure(&refs), c);
        }
        Ok(out)
    }

    /// Applies `f` to one slot, which may grow into several slots.
    pub fn expand_slot(
        &self,
        slot: usize,
        mut f: impl FnMut(&Word) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        if slot >= self.arity {
            return Err(Error::InvalidPositions((slot, slot)));
        }
        let mut out: Option<TensorElement> = None;
        for (slots, c) in &self.terms {
            let image = f(&slots[slot])?;
            let arity = self.arity - 1 + image.arity;
            if arity > MAX_ARITY {
                return Err(Error::ArityMismatch {
                    expected: MAX_ARITY,
                    found: arity,
                });
            }
            let acc = out.get_or_insert_with(|| TensorElement::zero(arity));
            for (inner, d) in &image.terms {
                let mut v = slots[..slot].to_vec();
                v.extend(inner.iter().cloned());
                v.extend(slots[slot + 1..].iter().cloned());
                acc.add_term(v, &(c * d));
            }
        }
        Ok(out.unwrap_or_else(|| TensorElement::zero(self.arity)))
    }

    /// Slotwise product, normal-formed in `rs`.
    pub fn multiply(&self, other: &TensorElement, rs: &RewriteSystem) -> Result<TensorElement> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut out = TensorElement::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let images = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| rs.multiply(&Element::from_word(x.clone()), &Element::from_word(y.clone())))
                    .collect::<Result<Vec<_>>>()?;
                let refs: Vec<&Element> = images.iter().collect();
                out.add_scaled(&TensorElement::pure(&refs), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Exchanges the two slots of an arity-2 tensor.
    pub fn flip(&self) -> Result<TensorElement> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: self.arity,
            });
        }
        self.permute(&[1, 0])
    }

    /// New slot `i` holds old slot `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<TensorElement> {
        if perm.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: perm.len(),
            });
        }
        let mut out = TensorElement::zero(self.arity);
        for (slots, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| slots[p].clone()).collect(), c);
        }
        Ok(out)
    }

    /// Places an arity-2 tensor into slots `positions` (0-based) of an arity-3
    /// tensor, filling the remaining slot with `unit`.
    pub fn embed(&self, positions: (usize, usize), unit: &Word) -> Result<TensorElement> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: self.arity,
            });
        }
        let (i, j) = positions;
        if i >= j || j > 2 {
            return Err(Error::InvalidPositions(positions));
        }
        let free = 3 - i - j;
        let mut out = TensorElement::zero(3);
        for (slots, c) in &self.terms {
            let mut v = vec![Word::unit(); 3];
            v[i] = slots[0].clone();
            v[j] = slots[1].clone();
            v[free] = unit.clone();
            out.add_term(v, c);
        }
        Ok(out)
    }

    /// Multiplies the slots together: `a ⊗ b ⊗ c ↦ abc`.
    pub fn contract(&self, rs: &RewriteSystem) -> Result<Element> {
        let mut out = Element::zero();
        for (slots, c) in &self.terms {
            let factors: Vec<Element> = slots.iter().map(|w| Element::from_word(w.clone())).collect();
            let p = rs.product(&factors)?;
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    /// Substitutes a rational value for the scalar variable in every coefficient.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<TensorElement> {
        let mut out = TensorElement::zero(self.arity);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// `c*(a ⊗ b) + …` with deterministic ordering.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (slots, c) in self.terms.iter().rev() {
            let body = slots
                .iter()
                .map(|w| alphabet.render_word(w))
                .collect::<Vec<_>>()
                .join("⊗");
            let coeff = Element::scalar(c.clone()).render(alphabet);
            let (neg, mag) = match coeff.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, coeff),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag == "1" {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}*({body})"));
            }
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, rhs.arity, "tensor arity mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, rhs.arity, "tensor arity mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u8]) -> Element {
        Element::from_word(Word::new(v.to_vec()))
    }

    #[test]
    fn flip_is_an_involution() {
        let t = &TensorElement::pure(&[&w(&[0]), &w(&[1])]) + &TensorElement::pure(&[&w(&[1, 1]), &w(&[])]);
        assert_eq!(t.flip().unwrap().flip().unwrap(), t);
        assert_ne!(t.flip().unwrap(), t);
    }

    #[test]
    fn embed_fills_the_free_slot() {
        let t = TensorElement::pure(&[&w(&[1]), &w(&[0])]);
        let e = t.embed((0, 1), &Word::unit()).unwrap();
        assert_eq!(e.coefficient(&[Word::letter(1), Word::letter(0), Word::unit()]), Scalar::one());
        let e = t.embed((1, 2), &Word::new(vec![0, 0])).unwrap();
        assert!(e.terms().all(|(k, _)| k[0] == Word::new(vec![0, 0])));
        assert!(t.embed((2, 1), &Word::unit()).is_err());
        assert!(t.embed((0, 3), &Word::unit()).is_err());
    }

    #[test]
    fn cancelling_terms_leave_zero() {
        let t = TensorElement::pure(&[&w(&[0]), &w(&[1])]);
        assert!((&t - &t).is_zero());
    }
}
