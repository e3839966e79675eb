//! Concrete presentations: weak `U_q(sl_n)` mixtures, classical `U_q(sl_n)`,
//! and Sweedler's algebra with its two weak variants.

use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::classify;
use crate::error::{Error, Result};
use crate::freealg::{
    complete, Alphabet, Element, GenType, GeneratorSymbol, Letter, RewriteSystem, Sort, Word,
};
use crate::hopf::{AntipodeKind, StructureMaps};
use crate::scalar::{Scalar, Var};
use crate::tensorspace::TensorElement;

/// Environment variable overriding the default completion degree bound.
pub const DEGREE_BOUND_ENV: &str = "WEAKHOPF_DEGREE_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub n: usize,
}

impl CartanMatrix {
    pub fn new(n: usize) -> CartanMatrix {
        CartanMatrix { n }
    }

    /// `a_ij` for 1-based `i, j` in `1..n`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SweedlerKind {
    H,
    H1,
    H2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum AlgebraSpec {
    Wsl { n: usize, d: u64 },
    Uqsl { n: usize },
    Sweedler { kind: SweedlerKind },
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Wsl { n, d } => write!(f, "wsl:{n}:{d}"),
            AlgebraSpec::Uqsl { n } => write!(f, "uqsl:{n}"),
            AlgebraSpec::Sweedler { kind } => write!(f, "sweedler:{kind:?}"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<AlgebraSpec> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number `{t}` in `{s}`")))
        };
        let spec = match parts.as_slice() {
            ["wsl", n, d] => AlgebraSpec::Wsl {
                n: num(n)? as usize,
                d: num(d)?,
            },
            ["uqsl", n] => AlgebraSpec::Uqsl {
                n: num(n)? as usize,
            },
            ["sweedler", k] => AlgebraSpec::Sweedler {
                kind: match *k {
                    "H" => SweedlerKind::H,
                    "H1" => SweedlerKind::H1,
                    "H2" => SweedlerKind::H2,
                    _ => return Err(Error::Parse(format!("unknown Sweedler algebra `{k}`"))),
                },
            },
            _ => return Err(Error::Parse(format!("unknown algebra `{s}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl AlgebraSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            AlgebraSpec::Wsl { n, d } => {
                if n < 2 {
                    return Err(Error::OutOfRange {
                        what: "n".into(),
                        value: n as u64,
                    });
                }
                classify::check_range(n, d)
            }
            AlgebraSpec::Uqsl { n } if n < 2 => Err(Error::OutOfRange {
                what: "n".into(),
                value: n as u64,
            }),
            _ => Ok(()),
        }
    }

    /// Default completion bound: 8 for rank up to 3, 6 above.
    pub fn default_degree_bound(&self) -> usize {
        if let Some(b) = std::env::var(DEGREE_BOUND_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            return b;
        }
        match *self {
            AlgebraSpec::Wsl { n, .. } | AlgebraSpec::Uqsl { n } if n > 3 => 6,
            _ => 8,
        }
    }

    pub fn variable(&self) -> Var {
        match self {
            AlgebraSpec::Sweedler { .. } => Var::Alpha,
            _ => Var::Q,
        }
    }
}

/// A defining relation `lhs = rhs`, kept unoriented for homomorphism checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub label: String,
    pub lhs: Element,
    pub rhs: Element,
}

impl Relation {
    pub fn difference(&self) -> Element {
        &self.lhs - &self.rhs
    }
}

/// A completed presentation together with its structure maps.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub spec: AlgebraSpec,
    pub system: RewriteSystem,
    pub relations: Vec<Relation>,
    pub maps: StructureMaps,
}

impl Algebra {
    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.system.alphabet()
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.alphabet().letter(name)
    }

    pub fn gen(&self, name: &str) -> Result<Element> {
        Ok(Element::letter(self.letter(name)?))
    }

    /// Parses an element written with this algebra's generator names.
    pub fn parse(&self, text: &str) -> Result<Element> {
        crate::freealg::parse_element(text, self.alphabet())
    }

    pub fn nf(&self, e: &Element) -> Result<Element> {
        self.system.nf(e)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.system.multiply(a, b)
    }

    pub fn product(&self, factors: &[Element]) -> Result<Element> {
        self.system.product(factors)
    }

    pub fn render(&self, e: &Element) -> String {
        e.render(self.alphabet())
    }

    pub fn render_tensor(&self, t: &TensorElement) -> String {
        t.render(self.alphabet())
    }

    /// Normal-form word of `J` when the algebra has one.
    pub fn j_word(&self) -> Option<Word> {
        match self.spec {
            AlgebraSpec::Wsl { .. } => {
                let a = self.alphabet();
                let kb = a.find(Sort::CartanBar, 1)?;
                let k = a.find(Sort::Cartan, 1)?;
                Some(Word::new(vec![kb, k]))
            }
            _ => None,
        }
    }

    pub fn j(&self) -> Option<Element> {
        self.j_word().map(Element::from_word)
    }

    /// `n` for the `sl_n` families, 0 for the Sweedler algebras.
    pub fn rank(&self) -> usize {
        match self.spec {
            AlgebraSpec::Wsl { n, .. } | AlgebraSpec::Uqsl { n } => n,
            AlgebraSpec::Sweedler { .. } => 0,
        }
    }
}

/// Builds any catalog algebra with its default degree bound.
pub fn build(spec: AlgebraSpec) -> Result<Algebra> {
    build_with_bound(spec, spec.default_degree_bound())
}

pub fn build_with_bound(spec: AlgebraSpec, bound: usize) -> Result<Algebra> {
    spec.validate()?;
    match spec {
        AlgebraSpec::Wsl { n, d } => build_wsl(n, d, bound),
        AlgebraSpec::Uqsl { n } => build_uqsl_classical(n, bound),
        AlgebraSpec::Sweedler { kind } => build_sweedler(kind, bound),
    }
}

type CacheKey = (AlgebraSpec, usize);

/// Process-wide memoized [`build`]; completion is the expensive step.
pub fn cached(spec: AlgebraSpec) -> Result<Arc<Algebra>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Algebra>>>> = OnceLock::new();
    let key = (spec, spec.default_degree_bound());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().expect("cache lock").get(&key) {
        return Ok(a.clone());
    }
    let a = Arc::new(build(spec)?);
    cache.lock().expect("cache lock").insert(key, a.clone());
    Ok(a)
}

/// Letter layout shared by the `sl_n` families: F, then K̄ (or K⁻¹), then K, then E.
struct SlLetters {
    r: usize,
}

impl SlLetters {
    fn f(&self, i: usize) -> Letter {
        (i - 1) as Letter
    }
    fn kb(&self, i: usize) -> Letter {
        (self.r + i - 1) as Letter
    }
    fn k(&self, i: usize) -> Letter {
        (2 * self.r + i - 1) as Letter
    }
    fn e(&self, i: usize) -> Letter {
        (3 * self.r + i - 1) as Letter
    }
}

fn sl_alphabet(n: usize, bar_prefix: &str, types: Option<&[GenType]>) -> Result<Arc<Alphabet>> {
    let r = n - 1;
    let ty = |k: usize| types.map(|t| t[k]).unwrap_or(GenType::NotApplicable);
    let mut symbols = Vec::new();
    for i in 1..=r {
        symbols.push(GeneratorSymbol::new(format!("F{i}"), Sort::Lowering, Some(i), ty(r + i - 1)));
    }
    for i in 1..=r {
        symbols.push(GeneratorSymbol::new(
            format!("{bar_prefix}{i}"),
            Sort::CartanBar,
            Some(i),
            GenType::NotApplicable,
        ));
    }
    for i in 1..=r {
        symbols.push(GeneratorSymbol::new(format!("K{i}"), Sort::Cartan, Some(i), GenType::NotApplicable));
    }
    for i in 1..=r {
        symbols.push(GeneratorSymbol::new(format!("E{i}"), Sort::Raising, Some(i), ty(i - 1)));
    }
    Ok(Arc::new(Alphabet::new(symbols)?))
}

fn w(letters: &[Letter]) -> Element {
    Element::from_word(Word::new(letters.to_vec()))
}

fn cw(c: Scalar, letters: &[Letter]) -> Element {
    Element::term(c, Word::new(letters.to_vec()))
}

fn rel(label: impl Into<String>, lhs: Element, rhs: Element) -> Relation {
    Relation {
        label: label.into(),
        lhs,
        rhs,
    }
}

/// Relations common to both `sl_n` families that do not involve the Cartan part.
fn ef_and_serre(r: usize, l: &SlLetters, kb: impl Fn(usize) -> Letter, out: &mut Vec<Relation>) {
    let inv = Scalar::inv_q_minus_qinv();
    for i in 1..=r {
        for j in 1..=r {
            let rhs = if i == j {
                &cw(inv.clone(), &[l.k(i)]) - &cw(inv.clone(), &[kb(i)])
            } else {
                Element::zero()
            };
            out.push(rel(
                format!("E{i}F{j}-F{j}E{i}"),
                &w(&[l.e(i), l.f(j)]) - &w(&[l.f(j), l.e(i)]),
                rhs,
            ));
        }
    }
    let b2 = Scalar::q_bracket2();
    for i in 1..=r {
        for j in 1..=r {
            if i.abs_diff(j) == 1 {
                for (name, a, b) in [("E", l.e(i), l.e(j)), ("F", l.f(i), l.f(j))] {
                    let lhs = &(&w(&[a, a, b]) - &cw(b2.clone(), &[a, b, a])) + &w(&[b, a, a]);
                    out.push(rel(format!("serre {name}{i}{name}{j}"), lhs, Element::zero()));
                }
            } else if j > i + 1 {
                out.push(rel(format!("E{i}E{j}"), w(&[l.e(i), l.e(j)]), w(&[l.e(j), l.e(i)])));
                out.push(rel(format!("F{i}F{j}"), w(&[l.f(i), l.f(j)]), w(&[l.f(j), l.f(i)])));
            }
        }
    }
}

/// Options for [`build_wsl_with`].
#[derive(Clone, Copy, Debug)]
pub struct WslOptions {
    pub degree_bound: usize,
    /// Add the commutation and J-absorption consequences for type-2 generators
    /// explicitly instead of leaving them to completion.
    pub derived_type2_rules: bool,
}

pub fn build_wsl(n: usize, d: u64, bound: usize) -> Result<Algebra> {
    build_wsl_with(
        n,
        d,
        WslOptions {
            degree_bound: bound,
            derived_type2_rules: true,
        },
    )
}

pub fn build_wsl_with(n: usize, d: u64, opts: WslOptions) -> Result<Algebra> {
    let spec = AlgebraSpec::Wsl { n, d };
    spec.validate()?;
    let types = classify::decode(n, d)?;
    let r = n - 1;
    let alphabet = sl_alphabet(n, "Kb", Some(&types))?;
    let l = SlLetters { r };
    let cartan = CartanMatrix::new(n);
    let j = [l.k(1), l.kb(1)];
    let mut rels = Vec::new();

    for i in 1..=r {
        for jj in 1..=r {
            if i > jj {
                rels.push(rel(format!("K{i}K{jj}"), w(&[l.k(i), l.k(jj)]), w(&[l.k(jj), l.k(i)])));
                rels.push(rel(format!("Kb{i}Kb{jj}"), w(&[l.kb(i), l.kb(jj)]), w(&[l.kb(jj), l.kb(i)])));
            }
            rels.push(rel(format!("K{i}Kb{jj}"), w(&[l.k(i), l.kb(jj)]), w(&[l.kb(jj), l.k(i)])));
        }
        if i > 1 {
            rels.push(rel(format!("K{i}Kb{i}=J"), w(&[l.k(i), l.kb(i)]), w(&j)));
        }
        for (name, x) in [(format!("K{i}"), l.k(i)), (format!("Kb{i}"), l.kb(i))] {
            rels.push(rel(format!("J{name}"), w(&[j[0], j[1], x]), w(&[x])));
            rels.push(rel(format!("{name}J"), w(&[x, j[0], j[1]]), w(&[x])));
        }
    }
    ef_and_serre(r, &l, |i| l.kb(i), &mut rels);

    for i in 1..=r {
        for (name, x, sign, ty) in [
            ("E", l.e(i), 1, types[i - 1]),
            ("F", l.f(i), -1, types[r + i - 1]),
        ] {
            let type2 = ty == GenType::Type2;
            for jj in 1..=r {
                let a = sign * cartan.entry(i, jj);
                let qa = Scalar::q_pow(a);
                let (kj, kbj) = (l.k(jj), l.kb(jj));
                if type2 {
                    rels.push(rel(
                        format!("K{jj}{name}{i}Kb{jj}"),
                        w(&[kj, x, kbj]),
                        cw(qa.clone(), &[x]),
                    ));
                }
                if !type2 || opts.derived_type2_rules {
                    rels.push(rel(format!("K{jj}{name}{i}"), w(&[kj, x]), cw(qa.clone(), &[x, kj])));
                    rels.push(rel(format!("{name}{i}Kb{jj}"), w(&[x, kbj]), cw(qa, &[kbj, x])));
                }
            }
            if type2 && opts.derived_type2_rules {
                rels.push(rel(format!("J{name}{i}"), w(&[j[0], j[1], x]), w(&[x])));
                rels.push(rel(format!("{name}{i}J"), w(&[x, j[0], j[1]]), w(&[x])));
            }
        }
    }

    let diffs: Vec<Element> = rels.iter().map(Relation::difference).collect();
    let system = complete(alphabet, &diffs, opts.degree_bound)?;

    let jw = Element::from_word(Word::new(vec![l.kb(1), l.k(1)]));
    let one = Element::one();
    let len = 4 * r;
    let mut coproduct = vec![TensorElement::zero(2); len];
    let mut counit = vec![Scalar::one(); len];
    let mut antipode = vec![Element::zero(); len];
    for i in 1..=r {
        let (e, f, k, kb) = (w(&[l.e(i)]), w(&[l.f(i)]), w(&[l.k(i)]), w(&[l.kb(i)]));
        let e_unit = if types[i - 1] == GenType::Type2 { &jw } else { &one };
        let f_unit = if types[r + i - 1] == GenType::Type2 { &jw } else { &one };
        coproduct[l.k(i) as usize] = TensorElement::pure(&[&k, &k]);
        coproduct[l.kb(i) as usize] = TensorElement::pure(&[&kb, &kb]);
        coproduct[l.e(i) as usize] =
            &TensorElement::pure(&[e_unit, &e]) + &TensorElement::pure(&[&e, &k]);
        coproduct[l.f(i) as usize] =
            &TensorElement::pure(&[&f, f_unit]) + &TensorElement::pure(&[&kb, &f]);
        counit[l.e(i) as usize] = Scalar::zero();
        counit[l.f(i) as usize] = Scalar::zero();
        antipode[l.k(i) as usize] = kb.clone();
        antipode[l.kb(i) as usize] = k.clone();
        antipode[l.e(i) as usize] = -&system.nf(&w(&[l.e(i), l.kb(i)]))?;
        antipode[l.f(i) as usize] = -&system.nf(&w(&[l.k(i), l.f(i)]))?;
    }
    Ok(Algebra {
        spec,
        system,
        relations: rels,
        maps: StructureMaps {
            coproduct,
            counit,
            antipode,
            antipode_kind: AntipodeKind::Weak,
        },
    })
}

pub fn build_uqsl_classical(n: usize, bound: usize) -> Result<Algebra> {
    let spec = AlgebraSpec::Uqsl { n };
    spec.validate()?;
    let r = n - 1;
    let alphabet = sl_alphabet(n, "Ki", None)?;
    let l = SlLetters { r };
    let cartan = CartanMatrix::new(n);
    let mut rels = Vec::new();
    for i in 1..=r {
        for jj in 1..=r {
            if i > jj {
                rels.push(rel(format!("K{i}K{jj}"), w(&[l.k(i), l.k(jj)]), w(&[l.k(jj), l.k(i)])));
                rels.push(rel(format!("Ki{i}Ki{jj}"), w(&[l.kb(i), l.kb(jj)]), w(&[l.kb(jj), l.kb(i)])));
            }
            if i != jj {
                rels.push(rel(format!("K{i}Ki{jj}"), w(&[l.k(i), l.kb(jj)]), w(&[l.kb(jj), l.k(i)])));
            }
        }
        rels.push(rel(format!("K{i}Ki{i}"), w(&[l.k(i), l.kb(i)]), Element::one()));
        rels.push(rel(format!("Ki{i}K{i}"), w(&[l.kb(i), l.k(i)]), Element::one()));
    }
    ef_and_serre(r, &l, |i| l.kb(i), &mut rels);
    for i in 1..=r {
        for (name, x, sign) in [("E", l.e(i), 1), ("F", l.f(i), -1)] {
            for jj in 1..=r {
                let qa = Scalar::q_pow(sign * cartan.entry(i, jj));
                let (kj, kij) = (l.k(jj), l.kb(jj));
                rels.push(rel(format!("K{jj}{name}{i}Ki{jj}"), w(&[kj, x, kij]), cw(qa.clone(), &[x])));
                rels.push(rel(format!("K{jj}{name}{i}"), w(&[kj, x]), cw(qa.clone(), &[x, kj])));
                rels.push(rel(format!("{name}{i}Ki{jj}"), w(&[x, kij]), cw(qa, &[kij, x])));
            }
        }
    }
    let diffs: Vec<Element> = rels.iter().map(Relation::difference).collect();
    let system = complete(alphabet, &diffs, bound)?;

    let one = Element::one();
    let len = 4 * r;
    let mut coproduct = vec![TensorElement::zero(2); len];
    let mut counit = vec![Scalar::one(); len];
    let mut antipode = vec![Element::zero(); len];
    for i in 1..=r {
        let (e, f, k, ki) = (w(&[l.e(i)]), w(&[l.f(i)]), w(&[l.k(i)]), w(&[l.kb(i)]));
        coproduct[l.k(i) as usize] = TensorElement::pure(&[&k, &k]);
        coproduct[l.kb(i) as usize] = TensorElement::pure(&[&ki, &ki]);
        coproduct[l.e(i) as usize] = &TensorElement::pure(&[&e, &k]) + &TensorElement::pure(&[&one, &e]);
        coproduct[l.f(i) as usize] = &TensorElement::pure(&[&f, &one]) + &TensorElement::pure(&[&ki, &f]);
        counit[l.e(i) as usize] = Scalar::zero();
        counit[l.f(i) as usize] = Scalar::zero();
        antipode[l.k(i) as usize] = ki.clone();
        antipode[l.kb(i) as usize] = k.clone();
        antipode[l.e(i) as usize] = -&system.nf(&w(&[l.e(i), l.kb(i)]))?;
        antipode[l.f(i) as usize] = -&system.nf(&w(&[l.k(i), l.f(i)]))?;
    }
    Ok(Algebra {
        spec,
        system,
        relations: rels,
        maps: StructureMaps {
            coproduct,
            counit,
            antipode,
            antipode_kind: AntipodeKind::Genuine,
        },
    })
}

pub fn build_sweedler(kind: SweedlerKind, bound: usize) -> Result<Algebra> {
    let (gname, xname) = match kind {
        SweedlerKind::H => ("G", "X"),
        _ => ("g", "x"),
    };
    let alphabet = Arc::new(Alphabet::new(vec![
        GeneratorSymbol::other(gname),
        GeneratorSymbol::other(xname),
    ])?);
    let (g, x) = (0 as Letter, 1 as Letter);
    let minus = |letters: &[Letter]| cw(Scalar::from_int(-1), letters);
    let mut rels = match kind {
        SweedlerKind::H => vec![rel("G^2", w(&[g, g]), Element::one())],
        _ => vec![rel("g^3", w(&[g, g, g]), w(&[g]))],
    };
    match kind {
        SweedlerKind::H2 => rels.push(rel("gxg", w(&[g, x, g]), minus(&[x]))),
        _ => rels.push(rel("gx", w(&[g, x]), minus(&[x, g]))),
    }
    rels.push(rel("x^2", w(&[x, x]), Element::zero()));
    let diffs: Vec<Element> = rels.iter().map(Relation::difference).collect();
    let system = complete(alphabet, &diffs, bound)?;

    let (ge, xe) = (w(&[g]), w(&[x]));
    let x_left_unit = match kind {
        SweedlerKind::H2 => w(&[g, g]),
        _ => Element::one(),
    };
    let coproduct = vec![
        TensorElement::pure(&[&ge, &ge]),
        &TensorElement::pure(&[&xe, &ge]) + &TensorElement::pure(&[&x_left_unit, &xe]),
    ];
    let antipode_kind = match kind {
        SweedlerKind::H => AntipodeKind::Genuine,
        _ => AntipodeKind::Weak,
    };
    Ok(Algebra {
        spec: AlgebraSpec::Sweedler { kind },
        system,
        relations: rels,
        maps: StructureMaps {
            coproduct,
            counit: vec![Scalar::one(), Scalar::zero()],
            antipode: vec![ge.clone(), w(&[g, x])],
            antipode_kind,
        },
    })
}

/// Every catalog algebra named by the verification criteria.
pub fn all_wsl(n: usize) -> Vec<AlgebraSpec> {
    (0..classify::mixture_count(n))
        .map(|d| AlgebraSpec::Wsl { n, d })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_names_round_trip() {
        for s in ["wsl:3:10", "uqsl:2", "sweedler:H1"] {
            assert_eq!(s.parse::<AlgebraSpec>().unwrap().to_string(), s);
        }
        assert!("wsl:2:4".parse::<AlgebraSpec>().is_err());
        assert!("wsl:1:0".parse::<AlgebraSpec>().is_err());
        assert!("sweedler:H3".parse::<AlgebraSpec>().is_err());
    }

    #[test]
    fn cartan_matrix_entries() {
        let c = CartanMatrix::new(4);
        assert_eq!(c.entry(2, 2), 2);
        assert_eq!(c.entry(2, 3), -1);
        assert_eq!(c.entry(1, 3), 0);
    }
}
