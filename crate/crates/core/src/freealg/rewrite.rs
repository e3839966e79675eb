//! Oriented rewrite rules, normal forms, and degree-truncated completion.
//!
//! Rules are oriented by the degree-lexicographic order induced by the
//! alphabet. Completion resolves every overlap ambiguity whose overlap word has
//! degree at most the bound, so normal forms of words up to that degree are
//! unique with respect to the rule set. Inclusion ambiguities never survive:
//! a rule whose left side contains a newer left side is retired and its
//! relation re-reduced.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, VecDeque};
use std::sync::Arc;

use super::element::Element;
use super::word::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Hard cap on rules created during one completion.
const MAX_RULES_CREATED: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
}

impl RewriteRule {
    /// Orients `relation = 0` by its leading word. `None` for the zero relation.
    pub fn orient(relation: &Element) -> Option<RewriteRule> {
        let (lead, lc) = relation.leading()?;
        let lead = lead.clone();
        let inv = lc.inverse().expect("nonzero leading coefficient");
        let mut rhs = relation.scale(&-&inv);
        rhs.remove(&lead);
        Some(RewriteRule { lhs: lead, rhs })
    }

    /// `lhs - rhs`.
    pub fn relation(&self) -> Element {
        &Element::from_word(self.lhs.clone()) - &self.rhs
    }
}

/// How a reducible word picks its next redex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Largest remaining word first; leftmost, shortest redex.
    Leftmost,
    /// Random word, random redex, seeded.
    Random(u64),
}

/// Rule storage with tombstones, shared by completion and the final system.
#[derive(Clone, Debug, Default)]
struct RuleSet {
    slots: Vec<Option<RewriteRule>>,
    index: HashMap<Vec<Letter>, usize>,
    lens: BTreeMap<usize, usize>,
}

impl RuleSet {
    fn live(&self) -> impl Iterator<Item = (usize, &RewriteRule)> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|r| (i, r)))
    }

    fn insert(&mut self, rule: RewriteRule) -> usize {
        let id = self.slots.len();
        self.index.insert(rule.lhs.letters().to_vec(), id);
        *self.lens.entry(rule.lhs.len()).or_default() += 1;
        self.slots.push(Some(rule));
        id
    }

    fn remove(&mut self, id: usize) -> Option<RewriteRule> {
        let rule = self.slots[id].take()?;
        self.index.remove(rule.lhs.letters());
        let n = self.lens.get_mut(&rule.lhs.len()).expect("length tracked");
        *n -= 1;
        if *n == 0 {
            self.lens.remove(&rule.lhs.len());
        }
        Some(rule)
    }

    fn get(&self, id: usize) -> Option<&RewriteRule> {
        self.slots.get(id).and_then(Option::as_ref)
    }

    /// Leftmost occurrence of any left side, preferring the shortest at a position.
    fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &l in self.lens.keys() {
                if start + l > w.len() {
                    break;
                }
                if let Some(&id) = self.index.get(&w[start..start + l]) {
                    return Some((start, id));
                }
            }
        }
        None
    }

    fn all_redexes(&self, w: &[Letter]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for start in 0..w.len() {
            for &l in self.lens.keys() {
                if start + l > w.len() {
                    break;
                }
                if let Some(&id) = self.index.get(&w[start..start + l]) {
                    out.push((start, id));
                }
            }
        }
        out
    }

    fn is_normal(&self, w: &[Letter]) -> bool {
        self.find_redex(w).is_none()
    }

    fn rewrite_at(&self, w: &Word, c: &Scalar, start: usize, id: usize, into: &mut Element) {
        let rule = self.get(id).expect("live rule");
        let end = start + rule.lhs.len();
        for (rw, rc) in rule.rhs.terms() {
            into.add_term(w.splice(start, end, rw), &(c * rc));
        }
    }

    fn reduce(&self, e: Element) -> Element {
        let mut todo = e;
        let mut out = Element::zero();
        while let Some((w, c)) = todo.pop_leading() {
            match self.find_redex(w.letters()) {
                None => out.add_term(w, &c),
                Some((start, id)) => self.rewrite_at(&w, &c, start, id, &mut todo),
            }
        }
        out
    }

    fn reduce_random(&self, e: Element, rng: &mut ChaCha8Rng) -> Element {
        let mut todo = e;
        let mut out = Element::zero();
        while !todo.is_zero() {
            let pick = rng.gen_range(0..todo.len());
            let w = todo.words().nth(pick).expect("in range").clone();
            let c = todo.remove(&w).expect("present");
            let redexes = self.all_redexes(w.letters());
            match redexes.choose(rng) {
                None => out.add_term(w, &c),
                Some(&(start, id)) => self.rewrite_at(&w, &c, start, id, &mut todo),
            }
        }
        out
    }
}

/// A completed, immutable rewriting presentation.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    rules: RuleSet,
    degree_bound: usize,
    complete_up_to: usize,
}

impl RewriteSystem {
    /// A system with no rules: every word is normal.
    pub fn free(alphabet: Arc<Alphabet>, degree_bound: usize) -> RewriteSystem {
        RewriteSystem {
            alphabet,
            rules: RuleSet::default(),
            degree_bound,
            complete_up_to: degree_bound,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.rules.live().map(|(_, r)| r)
    }

    pub fn rule_count(&self) -> usize {
        self.rules.live().count()
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&RewriteRule> {
        self.rules
            .index
            .get(lhs.letters())
            .and_then(|&id| self.rules.get(id))
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn complete_up_to(&self) -> usize {
        self.complete_up_to
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.rules.is_normal(w.letters())
    }

    fn check_degree(&self, e: &Element) -> Result<()> {
        let d = e.degree();
        if d > self.complete_up_to {
            return Err(Error::DegreeOverflow {
                degree: d,
                bound: self.complete_up_to,
            });
        }
        Ok(())
    }

    /// Canonical normal form.
    pub fn nf(&self, e: &Element) -> Result<Element> {
        self.check_degree(e)?;
        Ok(self.rules.reduce(e.clone()))
    }

    pub fn nf_with(&self, e: &Element, strategy: Strategy) -> Result<Element> {
        self.check_degree(e)?;
        Ok(match strategy {
            Strategy::Leftmost => self.rules.reduce(e.clone()),
            Strategy::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                self.rules.reduce_random(e.clone(), &mut rng)
            }
        })
    }

    pub fn nf_word(&self, w: &Word) -> Result<Element> {
        self.nf(&Element::from_word(w.clone()))
    }

    /// Normal form of the product.
    ///
    /// Products whose concatenation would exceed the confirmed degree are
    /// built one letter at a time, normalizing after each letter; an
    /// intermediate word beyond the bound is a [`Error::DegreeOverflow`].
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut direct = Element::zero();
        let mut result = Element::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let c = ca * cb;
                if wa.len() + wb.len() <= self.complete_up_to {
                    direct.add_term(wa.concat(wb), &c);
                } else {
                    let p = self.mul_words_incremental(wa, wb)?;
                    result.add_scaled(&p, &c);
                }
            }
        }
        let reduced = self.rules.reduce(direct);
        result.add_scaled(&reduced, &Scalar::one());
        Ok(result)
    }

    /// Normal form of a product of several factors, left to right.
    pub fn product(&self, factors: &[Element]) -> Result<Element> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    fn mul_words_incremental(&self, wa: &Word, wb: &Word) -> Result<Element> {
        let mut cur = self.nf_word(wa)?;
        for &l in wb.letters() {
            let mut next = Element::zero();
            for (w, c) in cur.terms() {
                let mut v = w.letters().to_vec();
                v.push(l);
                next.add_term(Word::new(v), c);
            }
            self.check_degree(&next)?;
            cur = self.rules.reduce(next);
        }
        Ok(cur)
    }

    /// All normal words of length at most `max_len`, in deglex order.
    pub fn normal_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        let mut frontier = vec![Word::unit()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in self.alphabet.letters() {
                    let mut v = w.letters().to_vec();
                    v.push(l);
                    if self.rules.is_normal(&v) {
                        next.push(Word::new(v));
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Presentation text, one rule per line.
    pub fn render_rules(&self) -> String {
        let mut lines: Vec<String> = self
            .rules()
            .map(|r| {
                format!(
                    "{} = {}",
                    self.alphabet.render_word(&r.lhs),
                    r.rhs.render(&self.alphabet)
                )
            })
            .collect();
        lines.sort();
        lines.join("\n")
    }
}

/// Completes `relations` (each read as `relation = 0`) up to `degree_bound`.
///
/// Deterministic for a given relation order. Fails if more than an internal cap
/// of rules would be created, naming the overlap being resolved at the time.
pub fn complete(
    alphabet: Arc<Alphabet>,
    relations: &[Element],
    degree_bound: usize,
) -> Result<RewriteSystem> {
    let mut state = Completion {
        rules: RuleSet::default(),
        pending: relations.iter().cloned().collect(),
        overlaps: BinaryHeap::new(),
        created: 0,
        bound: degree_bound,
    };
    let mut current_overlap = String::from("<input relations>");
    loop {
        while let Some(p) = state.pending.pop_front() {
            state.absorb(p, &alphabet, &current_overlap)?;
        }
        let Some(Reverse((_, i, j, k))) = state.overlaps.pop() else {
            break;
        };
        let (Some(ri), Some(rj)) = (state.rules.get(i), state.rules.get(j)) else {
            continue;
        };
        let li = ri.lhs.len();
        let head = ri.lhs.slice(0, li - k);
        let tail = rj.lhs.slice(k, rj.lhs.len());
        current_overlap = alphabet.render_word(&ri.lhs.concat(&tail));
        let left = ri.rhs.concat_mul(&Element::from_word(tail));
        let right = Element::from_word(head).concat_mul(&rj.rhs);
        let s = state.rules.reduce(&left - &right);
        if !s.is_zero() {
            state.pending.push_back(s);
        }
    }
    // final right-hand side inter-reduction
    let ids: Vec<usize> = state.rules.live().map(|(i, _)| i).collect();
    for id in ids {
        let rule = state.rules.remove(id).expect("live");
        let rhs = state.rules.reduce(rule.rhs.clone());
        state.rules.insert(RewriteRule { lhs: rule.lhs, rhs });
    }
    let mut compact = RuleSet::default();
    let mut live: Vec<RewriteRule> = state.rules.live().map(|(_, r)| r.clone()).collect();
    live.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    for r in live {
        compact.insert(r);
    }
    Ok(RewriteSystem {
        alphabet,
        rules: compact,
        degree_bound,
        complete_up_to: degree_bound,
    })
}

/// Convenience wrapper taking oriented rules.
pub fn complete_rules(
    alphabet: Arc<Alphabet>,
    rules: &[RewriteRule],
    degree_bound: usize,
) -> Result<RewriteSystem> {
    let relations: Vec<Element> = rules.iter().map(RewriteRule::relation).collect();
    complete(alphabet, &relations, degree_bound)
}

struct Completion {
    rules: RuleSet,
    pending: VecDeque<Element>,
    /// (overlap degree, left rule, right rule, overlap length)
    overlaps: BinaryHeap<Reverse<(usize, usize, usize, usize)>>,
    created: usize,
    bound: usize,
}

impl Completion {
    fn absorb(&mut self, p: Element, alphabet: &Alphabet, overlap: &str) -> Result<()> {
        let r = self.rules.reduce(p);
        let Some(rule) = RewriteRule::orient(&r) else {
            return Ok(());
        };
        if rule.lhs.len() > self.bound {
            return Err(Error::DegreeOverflow {
                degree: rule.lhs.len(),
                bound: self.bound,
            });
        }
        self.created += 1;
        if self.created > MAX_RULES_CREATED {
            return Err(Error::CompletionFailed {
                overlap: format!("{overlap} (rule `{}`)", alphabet.render_word(&rule.lhs)),
            });
        }
        // retire rules whose left side contains the new one
        let retired: Vec<usize> = self
            .rules
            .live()
            .filter(|(_, old)| old.lhs.contains(rule.lhs.letters()))
            .map(|(i, _)| i)
            .collect();
        for id in retired {
            let old = self.rules.remove(id).expect("live");
            self.pending.push_back(old.relation());
        }
        let new_lhs = rule.lhs.clone();
        let id = self.rules.insert(rule);
        let live: Vec<(usize, Word)> = self
            .rules
            .live()
            .map(|(i, r)| (i, r.lhs.clone()))
            .collect();
        for (j, other) in live {
            self.queue_overlaps(id, &new_lhs, j, &other);
            if j != id {
                self.queue_overlaps(j, &other, id, &new_lhs);
            }
        }
        Ok(())
    }

    /// Suffix of `a` equal to a prefix of `b`.
    fn queue_overlaps(&mut self, ia: usize, a: &Word, ib: usize, b: &Word) {
        let (la, lb) = (a.len(), b.len());
        for k in 1..la.min(lb) {
            if la + lb - k > self.bound {
                continue;
            }
            if a.letters()[la - k..] == b.letters()[..k] {
                self.overlaps.push(Reverse((la + lb - k, ia, ib, k)));
            }
        }
    }
}

/// Deterministic pseudo-random word over `alphabet_len` letters, length `0..=max_degree`.
pub fn random_word(alphabet_len: usize, max_degree: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word_with(&mut rng, alphabet_len, max_degree)
}

pub fn random_word_with(rng: &mut impl Rng, alphabet_len: usize, max_degree: usize) -> Word {
    if alphabet_len == 0 {
        return Word::unit();
    }
    let len = rng.gen_range(0..=max_degree);
    Word::new(
        (0..len)
            .map(|_| rng.gen_range(0..alphabet_len) as Letter)
            .collect(),
    )
}
