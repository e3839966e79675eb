//! Free associative algebras, rewriting, and normal forms.

mod element;
mod rewrite;
mod text;
mod word;

pub use element::Element;
pub use rewrite::{
    complete, complete_rules, random_word, random_word_with, RewriteRule, RewriteSystem, Strategy,
};
pub use text::{parse_element, PresentationText};
pub use word::{Alphabet, GenType, GeneratorSymbol, Letter, Sort, Word};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use std::sync::Arc;

    fn h1() -> RewriteSystem {
        let p = PresentationText::parse("generators: g x\ng^3 = g\nx*g = -g*x\nx^2 = 0\n").unwrap();
        complete(p.alphabet.clone(), &p.differences(), 8).unwrap()
    }

    #[test]
    fn h1_rules_are_already_complete() {
        let rs = h1();
        assert_eq!(rs.rule_count(), 3);
        assert_eq!(rs.normal_words(8).len(), 6);
    }

    #[test]
    fn gx_squared_vanishes() {
        let rs = h1();
        let gx = Element::from_word(Word::new(vec![0, 1]));
        assert!(rs.multiply(&gx, &gx).unwrap().is_zero());
    }

    #[test]
    fn empty_rule_set_is_free() {
        let a = Arc::new(Alphabet::new(vec![GeneratorSymbol::other("a")]).unwrap());
        let rs = complete(a, &[], 4).unwrap();
        assert_eq!(rs.rule_count(), 0);
        let w = Element::from_word(Word::new(vec![0, 0, 0]));
        assert_eq!(rs.nf(&w).unwrap(), w);
    }

    #[test]
    fn overflow_is_reported() {
        let rs = h1();
        let w = Element::from_word(Word::new(vec![0; 9]));
        assert!(matches!(rs.nf(&w), Err(crate::Error::DegreeOverflow { .. })));
    }

    #[test]
    fn completion_derives_missing_rules() {
        // gxg = -x with g^3 = g forces x g = -g x and g^2 x = x
        let p = PresentationText::parse("generators: g x\ng^3 = g\ng*x*g = -x\nx^2 = 0\n").unwrap();
        let rs = complete(p.alphabet.clone(), &p.differences(), 8).unwrap();
        assert_eq!(rs.normal_words(8).len(), 5);
        let xg = Element::from_word(Word::new(vec![1, 0]));
        let gx = Element::from_word(Word::new(vec![0, 1]));
        assert_eq!(rs.nf(&xg).unwrap(), gx.scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn random_words_are_reproducible() {
        assert_eq!(random_word(2, 3, 1), random_word(2, 3, 1));
        assert!(random_word(2, 0, 9).is_empty());
        assert!(random_word(2, 3, 1).len() <= 3);
    }
}
