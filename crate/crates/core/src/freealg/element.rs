use num::Signed;
use std::collections::btree_map;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::word::{Alphabet, Letter, Word};
use crate::scalar::{format_poly, Scalar};

/// A finite `Scalar`-linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn one() -> Element {
        Element::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Element {
        Element::term(Scalar::one(), w)
    }

    pub fn letter(l: Letter) -> Element {
        Element::from_word(Word::letter(l))
    }

    pub fn scalar(c: Scalar) -> Element {
        Element::term(c, Word::unit())
    }

    pub fn term(c: Scalar, w: Word) -> Element {
        let mut e = Element::zero();
        e.add_term(w, &c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Element {
        let mut e = Element::zero();
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word under deglex with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    pub(crate) fn remove(&mut self, w: &Word) -> Option<Scalar> {
        self.terms.remove(w)
    }

    pub(crate) fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Maximal word length, 0 for zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), c * d)).collect(),
        }
    }

    /// Product in the free algebra (concatenation, no reduction).
    pub fn concat_mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), &(ca * cb));
            }
        }
        out
    }

    /// The scalar if this element lies in the span of the empty word.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }

    /// Applies `f` to every scalar coefficient.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Element {
        Element::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Text form, e.g. `F1*E1 + (q)/(q^2 - 1)*K1`, parseable by the presentation reader.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (w, c) in self.terms.iter().rev() {
            let negative = leading_sign_negative(c);
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&render_term(&mag, w, alphabet));
        }
        out
    }
}

fn leading_sign_negative(c: &Scalar) -> bool {
    c.numer().leading().is_some_and(|l| l.is_negative())
}

fn render_term(c: &Scalar, w: &Word, alphabet: &Alphabet) -> String {
    let word = alphabet.render_word(w);
    if c.is_one() {
        return word;
    }
    let coeff = if c.denom().is_one() {
        let var = c.variable().map(|v| v.name()).unwrap_or("q");
        let text = format_poly(c.numer(), var);
        let single_term = c.numer().coeffs().iter().filter(|x| !num::Zero::is_zero(*x)).count() == 1;
        if single_term {
            text
        } else {
            format!("({text})")
        }
    } else {
        c.to_string()
    };
    if w.is_empty() {
        coeff
    } else {
        format!("{coeff}*{word}")
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let w = Word::new(vec![1, 2]);
        let mut e = Element::term(Scalar::from_int(3), w.clone());
        e.add_term(w, &Scalar::from_int(-3));
        assert!(e.is_zero());
    }

    #[test]
    fn concat_is_bilinear() {
        let a = &Element::letter(0) + &Element::letter(1);
        let b = Element::letter(2).scale(&Scalar::from_int(2));
        let p = a.concat_mul(&b);
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&Word::new(vec![1, 2])), Scalar::from_int(2));
    }
}
