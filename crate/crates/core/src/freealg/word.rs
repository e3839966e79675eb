use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator within its [`Alphabet`]; smaller index = smaller letter.
pub type Letter = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sort {
    Raising,
    Lowering,
    Cartan,
    CartanBar,
    Other,
}

/// Commutation behaviour of a raising or lowering generator against the Cartan part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenType {
    /// Two-sided q-commutation with every `K_j` and `K̄_j`.
    Type1,
    /// Sandwich relation `K_j X K̄_j = q^a X`; absorbs `J`.
    Type2,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSymbol {
    pub name: String,
    pub sort: Sort,
    pub index: Option<usize>,
    pub gen_type: GenType,
}

impl GeneratorSymbol {
    pub fn new(name: impl Into<String>, sort: Sort, index: Option<usize>, gen_type: GenType) -> Self {
        GeneratorSymbol {
            name: name.into(),
            sort,
            index,
            gen_type,
        }
    }

    pub fn other(name: impl Into<String>) -> Self {
        Self::new(name, Sort::Other, None, GenType::NotApplicable)
    }
}

/// Ordered generator set; the order is the letter order of the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<GeneratorSymbol>,
    by_name: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Result<Alphabet> {
        if symbols.len() > Letter::MAX as usize {
            return Err(Error::Config("alphabet too large".into()));
        }
        let mut by_name = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if by_name.insert(s.name.clone(), i as Letter).is_some() {
                return Err(Error::Config(format!("duplicate generator `{}`", s.name)));
            }
        }
        Ok(Alphabet { symbols, by_name })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.symbols
    }

    pub fn symbol(&self, l: Letter) -> &GeneratorSymbol {
        &self.symbols[l as usize]
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Looks up the generator of a given sort and index.
    pub fn find(&self, sort: Sort, index: usize) -> Option<Letter> {
        self.symbols
            .iter()
            .position(|s| s.sort == sort && s.index == Some(index))
            .map(|i| i as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.symbols.len()).map(|i| i as Letter)
    }

    /// Renders a word as `E1^2*F1`; the empty word is `1`.
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        let letters = w.letters();
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let name = &self.symbol(letters[i]).name;
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{}^{}", name, j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

/// A monomial of the free algebra. Ordered degree-lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self[..start] ++ mid ++ self[end..]`.
    pub fn splice(&self, start: usize, end: usize, mid: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - (end - start) + mid.0.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[end..]);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Whether `needle` occurs as a contiguous subword.
    pub fn contains(&self, needle: &[Letter]) -> bool {
        needle.is_empty() || self.0.windows(needle.len()).any(|w| w == needle)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let a = Word::new(vec![3]);
        let b = Word::new(vec![0, 0]);
        let c = Word::new(vec![0, 1]);
        assert!(Word::unit() < a);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn splice_and_contains() {
        let w = Word::new(vec![1, 2, 3, 4]);
        assert_eq!(w.splice(1, 3, &Word::new(vec![9])), Word::new(vec![1, 9, 4]));
        assert!(w.contains(&[2, 3]));
        assert!(!w.contains(&[3, 2]));
    }

    #[test]
    fn render_powers() {
        let a = Alphabet::new(vec![GeneratorSymbol::other("g"), GeneratorSymbol::other("x")]).unwrap();
        assert_eq!(a.render_word(&Word::new(vec![0, 0, 1])), "g^2*x");
        assert_eq!(a.render_word(&Word::unit()), "1");
    }
}
