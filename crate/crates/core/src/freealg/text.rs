//! Plain-text presentations.
//!
//! ```text
//! generators: g x
//! variable: q
//! g^3 = g
//! x*g = -g*x
//! x^2 = 0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Generator names are
//! listed in monomial order, smallest first.

use std::sync::Arc;

use super::element::Element;
use super::rewrite::{RewriteRule, RewriteSystem};
use super::word::{Alphabet, GeneratorSymbol};
use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::scalar::{Scalar, Var};

#[derive(Clone, Debug, PartialEq)]
pub struct PresentationText {
    pub alphabet: Arc<Alphabet>,
    pub variable: Option<Var>,
    pub relations: Vec<(Element, Element)>,
}

impl PresentationText {
    pub fn parse(text: &str) -> Result<PresentationText> {
        let mut names: Option<Vec<String>> = None;
        let mut variable = None;
        let mut lines = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("generators:") {
                names = Some(rest.split_whitespace().map(str::to_owned).collect());
            } else if let Some(rest) = line.strip_prefix("variable:") {
                let v = rest.trim();
                variable = Some(
                    Var::from_name(v).ok_or_else(|| Error::Parse(format!("unknown variable `{v}`")))?,
                );
            } else {
                lines.push(line.to_owned());
            }
        }
        let names = names.ok_or_else(|| Error::Parse("missing `generators:` line".into()))?;
        let alphabet = Arc::new(Alphabet::new(
            names.into_iter().map(GeneratorSymbol::other).collect(),
        )?);
        let mut relations = Vec::new();
        for line in lines {
            let (l, r) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `lhs = rhs`: `{line}`")))?;
            relations.push((
                parse_element(l, &alphabet)?,
                parse_element(r, &alphabet)?,
            ));
        }
        Ok(PresentationText {
            alphabet,
            variable,
            relations,
        })
    }

    /// Relations as `lhs - rhs`.
    pub fn differences(&self) -> Vec<Element> {
        self.relations.iter().map(|(l, r)| l - r).collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::from("generators:");
        for s in self.alphabet.symbols() {
            out.push(' ');
            out.push_str(&s.name);
        }
        out.push('\n');
        if let Some(v) = self.variable {
            out.push_str(&format!("variable: {}\n", v.name()));
        }
        for (l, r) in &self.relations {
            out.push_str(&format!(
                "{} = {}\n",
                l.render(&self.alphabet),
                r.render(&self.alphabet)
            ));
        }
        out
    }

    /// The oriented rules of a system in this format.
    pub fn from_system(rs: &RewriteSystem, variable: Option<Var>) -> PresentationText {
        let mut rules: Vec<&RewriteRule> = rs.rules().collect();
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        PresentationText {
            alphabet: rs.alphabet().clone(),
            variable,
            relations: rules
                .into_iter()
                .map(|r| (Element::from_word(r.lhs.clone()), r.rhs.clone()))
                .collect(),
        }
    }
}

/// Parses an element such as `F1*E1 + (q)/(q^2 - 1)*K1` over `alphabet`.
pub fn parse_element(text: &str, alphabet: &Alphabet) -> Result<Element> {
    from_expr(&expr::parse(text)?, alphabet)
}

fn from_expr(e: &Expr, alphabet: &Alphabet) -> Result<Element> {
    Ok(match e {
        Expr::Int(_) => Element::scalar(Scalar::from_expr(e)?),
        Expr::Ident(name) => match alphabet.letter(name) {
            Ok(l) => Element::letter(l),
            Err(_) => Element::scalar(
                Var::from_name(name)
                    .map(Scalar::var)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?,
            ),
        },
        Expr::Neg(a) => -&from_expr(a, alphabet)?,
        Expr::Add(a, b) => &from_expr(a, alphabet)? + &from_expr(b, alphabet)?,
        Expr::Sub(a, b) => &from_expr(a, alphabet)? - &from_expr(b, alphabet)?,
        Expr::Mul(a, b) => {
            let (x, y) = (from_expr(a, alphabet)?, from_expr(b, alphabet)?);
            mul_checked(&x, &y)?
        }
        Expr::Div(a, b) => {
            let num = from_expr(a, alphabet)?;
            let den = from_expr(b, alphabet)?
                .as_scalar()
                .ok_or_else(|| Error::Parse("division by a non-scalar".into()))?;
            let inv = den.inverse()?;
            scale_checked(&num, &inv)?
        }
        Expr::Pow(a, k) => {
            let base = from_expr(a, alphabet)?;
            let mut acc = Element::one();
            for _ in 0..*k {
                acc = mul_checked(&acc, &base)?;
            }
            acc
        }
    })
}

fn scale_checked(e: &Element, c: &Scalar) -> Result<Element> {
    let mut out = Element::zero();
    for (w, d) in e.terms() {
        out.add_term(w.clone(), &c.try_mul(d)?);
    }
    Ok(out)
}

fn mul_checked(a: &Element, b: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            out.add_term(wa.concat(wb), &ca.try_mul(cb)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;

    const H1: &str = "generators: g x\nvariable: alpha\ng^3 = g\nx*g = -g*x\nx^2 = 0\n";

    #[test]
    fn parses_and_round_trips() {
        let p = PresentationText::parse(H1).unwrap();
        assert_eq!(p.relations.len(), 3);
        let again = PresentationText::parse(&p.render()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rational_function_coefficients() {
        let a = Alphabet::new(vec![GeneratorSymbol::other("K"), GeneratorSymbol::other("E")]).unwrap();
        let e = parse_element("E*K + (q)/(q^2 - 1)*K - 1/2", &a).unwrap();
        assert_eq!(parse_element(&e.render(&a), &a).unwrap(), e);
        assert_eq!(e.coefficient(&Word::unit()), Scalar::ratio(-1, 2));
    }

    #[test]
    fn unknown_name_is_an_error() {
        let p = PresentationText::parse("generators: g\ng*y = 0\n");
        assert!(matches!(p, Err(Error::UnknownGenerator(_))));
    }
}
