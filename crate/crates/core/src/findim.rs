//! Finite-dimensional algebras: bases, idempotent splittings, linear
//! isomorphisms onto Sweedler's algebra, and the R-matrix identities on `H_1`.

use serde::Serialize;

use crate::catalog::{self, Algebra, AlgebraSpec, SweedlerKind};
use crate::error::{Error, Result};
use crate::freealg::{Element, RewriteSystem, Word};
use crate::linalg::{self, WordIndex};
use crate::report::{run_check, CheckResult, Report};
use crate::scalar::{Rational, Scalar, Var};
use crate::tensorspace::TensorElement;

/// Default cap for [`close_basis`].
pub const DIMENSION_CAP: usize = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    pub basis: Vec<Word>,
    /// `table[i][j]` lists `(k, c^k_ij)` with nonzero coefficients.
    pub table: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self, w: &Word) -> Option<usize> {
        self.basis.iter().position(|b| b == w)
    }

    /// Coordinates of a normal-form element.
    pub fn coords(&self, e: &Element) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (w, c) in e.terms() {
            let i = self.index(w).ok_or_else(|| Error::DimensionCap {
                cap: self.dim(),
                word: format!("{w:?}"),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, v: &[Scalar]) -> Element {
        Element::from_terms(self.basis.iter().cloned().zip(v.iter().cloned()))
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)` for all triples, from the table alone.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let mul_vec = |a: &[Scalar], j: usize, left: bool| -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(); n];
            for (i, c) in a.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let entries = if left { &self.table[i][j] } else { &self.table[j][i] };
                for (k, d) in entries {
                    out[*k] += &(c * d);
                }
            }
            out
        };
        for i in 0..n {
            for j in 0..n {
                let mut ij = vec![Scalar::zero(); n];
                for (k, c) in &self.table[i][j] {
                    ij[*k] = c.clone();
                }
                for k in 0..n {
                    let left = mul_vec(&ij, k, true);
                    let mut jk = vec![Scalar::zero(); n];
                    for (m, c) in &self.table[j][k] {
                        jk[*m] = c.clone();
                    }
                    let right = mul_vec(&jk, i, false);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Normal words reachable from `1` by right multiplication with generators,
/// with the multiplication table. Fails if more than `cap` words appear.
pub fn close_basis(rs: &RewriteSystem, cap: usize) -> Result<StructureConstants> {
    let mut basis = vec![Word::unit()];
    let mut frontier = vec![Word::unit()];
    while let Some(w) = frontier.pop() {
        for l in rs.alphabet().letters() {
            let p = rs.multiply(&Element::from_word(w.clone()), &Element::letter(l))?;
            for (u, _) in p.terms() {
                if !basis.contains(u) {
                    if basis.len() == cap {
                        return Err(Error::DimensionCap {
                            cap,
                            word: rs.alphabet().render_word(u),
                        });
                    }
                    basis.push(u.clone());
                    frontier.push(u.clone());
                }
            }
        }
    }
    basis.sort();
    let mut table = Vec::with_capacity(basis.len());
    for a in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for b in &basis {
            let p = rs.multiply(&Element::from_word(a.clone()), &Element::from_word(b.clone()))?;
            let mut entries = Vec::new();
            for (w, c) in p.terms() {
                let k = basis.iter().position(|x| x == w).ok_or_else(|| Error::DimensionCap {
                    cap,
                    word: rs.alphabet().render_word(w),
                })?;
                entries.push((k, c.clone()));
            }
            row.push(entries);
        }
        table.push(row);
    }
    Ok(StructureConstants { basis, table })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdempotentCheck {
    pub idempotent: bool,
    pub central: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl IdempotentCheck {
    pub fn holds(&self) -> bool {
        self.idempotent && self.central
    }
}

pub fn check_central_idempotent(
    alg: &Algebra,
    sc: &StructureConstants,
    e: &Element,
) -> Result<IdempotentCheck> {
    let sq = &alg.mul(e, e)? - &alg.nf(e)?;
    let idempotent = sq.is_zero();
    let mut witness = (!idempotent).then(|| format!("e^2 - e = {}", alg.render(&sq)));
    let mut central = true;
    for b in &sc.basis {
        let b = Element::from_word(b.clone());
        let d = &alg.mul(e, &b)? - &alg.mul(&b, e)?;
        if !d.is_zero() {
            central = false;
            witness.get_or_insert_with(|| format!("[e, {}] = {}", alg.render(&b), alg.render(&d)));
            break;
        }
    }
    Ok(IdempotentCheck {
        idempotent,
        central,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentSplit {
    pub e: Element,
    /// Basis of `(1 - e)A`.
    pub zero_part: Vec<Element>,
    /// Basis of `eA`.
    pub one_part: Vec<Element>,
}

/// Greedy basis of `{x · b}` over basis words `b`.
fn span_basis(alg: &Algebra, sc: &StructureConstants, x: &Element) -> Result<Vec<Element>> {
    let mut chosen: Vec<Element> = Vec::new();
    for b in &sc.basis {
        let v = alg.mul(x, &Element::from_word(b.clone()))?;
        if v.is_zero() {
            continue;
        }
        let mut trial = chosen.clone();
        trial.push(v.clone());
        if rank_of(&trial)? == trial.len() {
            chosen.push(v);
        }
    }
    Ok(chosen)
}

pub fn rank_of(elements: &[Element]) -> Result<usize> {
    let m = WordIndex::new().columns(elements);
    linalg::rank(&m)
}

/// Whether two lists of elements span the same subspace.
pub fn same_span(a: &[Element], b: &[Element]) -> Result<bool> {
    let ra = rank_of(a)?;
    let rb = rank_of(b)?;
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    Ok(ra == rb && rank_of(&all)? == ra)
}

pub fn peirce_split(alg: &Algebra, sc: &StructureConstants, e: &Element) -> Result<IdempotentSplit> {
    let check = check_central_idempotent(alg, sc, e)?;
    if !check.holds() {
        return Err(Error::NotCentralIdempotent(alg.render(e)));
    }
    let one_minus = &Element::one() - e;
    Ok(IdempotentSplit {
        e: e.clone(),
        zero_part: span_basis(alg, sc, &one_minus)?,
        one_part: span_basis(alg, sc, e)?,
    })
}

/// `A·part ⊆ part` and `part·A ⊆ part`, checked on basis products.
pub fn is_two_sided_ideal(alg: &Algebra, sc: &StructureConstants, part: &[Element]) -> Result<bool> {
    let r = rank_of(part)?;
    for p in part {
        for b in &sc.basis {
            let b = Element::from_word(b.clone());
            for prod in [alg.mul(&b, p)?, alg.mul(p, &b)?] {
                let mut all = part.to_vec();
                all.push(prod);
                if rank_of(&all)? != r {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A linear map from a subspace (given by a basis of elements) into another algebra.
#[derive(Clone, Debug)]
pub struct SliceMap<'a> {
    pub source: &'a Algebra,
    pub target: &'a Algebra,
    /// Central idempotent acting as the unit of the slice.
    pub unit: Element,
    pub basis: Vec<Element>,
    pub images: Vec<Element>,
}

impl SliceMap<'_> {
    fn coords(&self, x: &Element) -> Result<Option<Vec<Scalar>>> {
        let mut ix = WordIndex::new();
        let mut m = ix.columns(&self.basis);
        let b = ix.vector(x);
        linalg::pad(&mut m, ix.len(), self.basis.len());
        linalg::solve(&m, &b)
    }

    /// Image of an element of the slice; `None` outside the span.
    pub fn apply(&self, x: &Element) -> Result<Option<Element>> {
        Ok(self.coords(x)?.map(|c| {
            let mut out = Element::zero();
            for (ci, img) in c.iter().zip(&self.images) {
                out.add_scaled(img, ci);
            }
            out
        }))
    }

    /// Extension to the whole algebra through `x ↦ e·x`.
    pub fn apply_projected(&self, x: &Element) -> Result<Element> {
        let ex = self.source.mul(&self.unit, x)?;
        self.apply(&ex)?
            .ok_or_else(|| Error::Config(format!("{} is outside the slice", self.source.render(&ex))))
    }

    fn apply_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        t.map_slots(|_, w| self.apply_projected(&Element::from_word(w.clone())))
    }

    pub fn check_bijective(&self) -> Result<std::result::Result<(), String>> {
        let dim = close_basis(&self.target.system, DIMENSION_CAP)?.dim();
        let rs = rank_of(&self.basis)?;
        let ri = rank_of(&self.images)?;
        if rs == self.basis.len() && ri == self.images.len() && ri == dim {
            Ok(Ok(()))
        } else {
            Ok(Err(format!(
                "source rank {rs}/{}, image rank {ri}, target dimension {dim}",
                self.basis.len()
            )))
        }
    }

    pub fn check_multiplicative(&self) -> Result<std::result::Result<(), String>> {
        for (a, ia) in self.basis.iter().zip(&self.images) {
            for (b, ib) in self.basis.iter().zip(&self.images) {
                let p = self.source.mul(a, b)?;
                let lhs = self.apply(&p)?.ok_or_else(|| {
                    Error::Config(format!("product {} leaves the slice", self.source.render(&p)))
                })?;
                let rhs = self.target.mul(ia, ib)?;
                let d = &lhs - &rhs;
                if !d.is_zero() {
                    return Ok(Err(format!(
                        "ψ({}·{}) - ψ({})ψ({}) = {}",
                        self.source.render(a),
                        self.source.render(b),
                        self.source.render(a),
                        self.source.render(b),
                        self.target.render(&d)
                    )));
                }
            }
        }
        Ok(Ok(()))
    }

    /// Slice coproduct `(e⊗e)Δ`, counit restriction, and antipode restriction
    /// are carried to the target's structure maps.
    pub fn check_coalgebra(&self) -> Result<std::result::Result<(), String>> {
        let src = self.source;
        let tgt = self.target;
        let ee = TensorElement::pure(&[&self.unit, &self.unit]);
        for (b, img) in self.basis.iter().zip(&self.images) {
            let slice_delta = ee.multiply(&src.maps.coproduct(&src.system, b)?, &src.system)?;
            let lhs = self.apply_tensor(&slice_delta)?;
            let rhs = tgt.maps.coproduct(&tgt.system, img)?;
            let d = (&lhs - &rhs).normalize(&tgt.system)?;
            if !d.is_zero() {
                return Ok(Err(format!("Δ at {}: {}", src.render(b), tgt.render_tensor(&d))));
            }
            let de = &src.maps.counit(b) - &tgt.maps.counit(img);
            if !de.is_zero() {
                return Ok(Err(format!("ε at {}: {de}", src.render(b))));
            }
            let t = src.mul(&self.unit, &src.maps.antipode(&src.system, b)?)?;
            let lhs = self.apply_projected(&t)?;
            let rhs = tgt.maps.antipode(&tgt.system, img)?;
            let d = &lhs - &rhs;
            if !d.is_zero() {
                return Ok(Err(format!("antipode at {}: {}", src.render(b), tgt.render(&d))));
            }
        }
        Ok(Ok(()))
    }
}

fn sweedler(kind: SweedlerKind) -> Result<std::sync::Arc<Algebra>> {
    catalog::cached(AlgebraSpec::Sweedler { kind })
}

fn parse_all(alg: &Algebra, items: &[&str]) -> Result<Vec<Element>> {
    items.iter().map(|s| alg.parse(s)).collect()
}

/// Dimensions, splits, and the slice isomorphisms onto `H`.
pub fn verify_sweedler_structure() -> Result<Report> {
    let h = sweedler(SweedlerKind::H)?;
    let h1 = sweedler(SweedlerKind::H1)?;
    let h2 = sweedler(SweedlerKind::H2)?;
    let mut report = Report::default();

    for (alg, expected, listed) in [
        (&h, 4, vec!["1", "G", "G*X", "X"]),
        (&h1, 6, vec!["1", "g", "g^2", "x", "g*x", "g^2*x"]),
        (&h2, 5, vec!["1", "g", "x", "g*x", "g^2"]),
    ] {
        let sc = close_basis(&alg.system, DIMENSION_CAP)?;
        let listed = parse_all(alg, &listed)?;
        let span = same_span(
            &sc.basis.iter().cloned().map(Element::from_word).collect::<Vec<_>>(),
            &listed,
        )?;
        let assoc = sc.is_associative();
        report.push(run_check(&alg.name(), "dimension", || {
            if sc.dim() == expected && span && assoc {
                Ok(())
            } else {
                Err(format!(
                    "dimension {} (expected {expected}), spans listed basis: {span}, associative: {assoc}",
                    sc.dim()
                ))
            }
        }).with_detail(format!("dimension {}", sc.dim())));
    }

    for (alg, zero_listed, one_listed) in [
        (&h1, vec!["1 - g^2", "(1 - g^2)*x"], vec!["g", "g^2", "g*x", "g^2*x"]),
        (&h2, vec!["1 - g^2"], vec!["g^2", "g", "x", "g*x"]),
    ] {
        let sc = close_basis(&alg.system, DIMENSION_CAP)?;
        let e = alg.parse("g^2")?;
        let split = peirce_split(alg, &sc, &e)?;
        let zero_listed = parse_all(alg, &zero_listed)?;
        let one_listed = parse_all(alg, &one_listed)?;
        let zero_listed: Vec<Element> = zero_listed.iter().map(|x| alg.nf(x)).collect::<Result<_>>()?;
        let ok_span = same_span(&split.zero_part, &zero_listed)? && same_span(&split.one_part, &one_listed)?;
        let ideals = is_two_sided_ideal(alg, &sc, &split.zero_part)? && is_two_sided_ideal(alg, &sc, &split.one_part)?;
        let dims = (split.zero_part.len(), split.one_part.len());
        report.push(
            run_check(&alg.name(), "peirce-split", || {
                if ok_span && ideals && dims.0 + dims.1 == sc.dim() {
                    Ok(())
                } else {
                    Err(format!("dims {dims:?}, matches listed bases: {ok_span}, ideals: {ideals}"))
                }
            })
            .with_detail(format!("dims {dims:?}")),
        );
    }

    for (alg, name, basis, images) in [
        (&h1, "psi", vec!["g", "g^2", "g*x", "g^2*x"], vec!["G", "1", "G*X", "X"]),
        (&h2, "phi", vec!["g^2", "g", "x", "g*x"], vec!["1", "G", "X", "G*X"]),
    ] {
        let map = SliceMap {
            source: alg,
            target: &h,
            unit: alg.parse("g^2")?,
            basis: parse_all(alg, &basis)?,
            images: parse_all(&h, &images)?,
        };
        report.push(run_check(&alg.name(), format!("{name}-bijective"), || {
            map.check_bijective().map_err(|e| e.to_string())?
        }));
        report.push(run_check(&alg.name(), format!("{name}-multiplicative"), || {
            map.check_multiplicative().map_err(|e| e.to_string())?
        }));
        report.push(run_check(&alg.name(), format!("{name}-coalgebra"), || {
            map.check_coalgebra().map_err(|e| e.to_string())?
        }));
    }
    Ok(report)
}

/// The `H_1` R-matrix and its companion `R̂`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixData {
    pub r: TensorElement,
    pub r_hat: TensorElement,
    pub alpha: Scalar,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlphaMode {
    Symbolic,
    Value(Rational),
}

impl AlphaMode {
    pub fn scalar(&self) -> Scalar {
        match self {
            AlphaMode::Symbolic => Scalar::var(Var::Alpha),
            AlphaMode::Value(r) => Scalar::from_rational(r.clone()),
        }
    }
}

pub fn rmatrix(h1: &Algebra, alpha: &AlphaMode) -> Result<RMatrixData> {
    let a = alpha.scalar();
    let g2 = h1.parse("g^2")?;
    let p = h1.parse("(g^2 - g)/2")?;
    let g2x = h1.parse("g^2*x")?;
    let px = h1.nf(&h1.parse("(g^2 - g)/2*x")?)?;
    let t = |x: &Element, y: &Element| TensorElement::pure(&[x, y]);
    let common = &t(&g2, &g2) - &t(&p, &p).scale(&Scalar::from_int(2));
    let build = |middle: TensorElement| -> TensorElement {
        let mut tail = t(&g2x, &g2x);
        tail.add_scaled(&middle, &Scalar::from_int(-2));
        tail.add_scaled(&t(&px, &px), &Scalar::from_int(2));
        &common + &tail.scale(&a)
    };
    Ok(RMatrixData {
        r: build(t(&g2x, &px)).normalize(&h1.system)?,
        r_hat: build(t(&px, &g2x)).normalize(&h1.system)?,
        alpha: a,
    })
}

fn residual_check(
    alg: &Algebra,
    check: &str,
    f: impl FnOnce() -> Result<TensorElement>,
) -> CheckResult {
    run_check(&alg.name(), check, || {
        let d = f().map_err(|e| e.to_string())?;
        if d.is_zero() {
            Ok(())
        } else {
            Err(alg.render_tensor(&d))
        }
    })
}

/// Intertwining, fusion (printed and alternative orders), regularity, and
/// non-invertibility of `R` in `H_1 ⊗ H_1`.
pub fn verify_rmatrix(alpha: &AlphaMode) -> Result<Report> {
    let h1 = sweedler(SweedlerKind::H1)?;
    let rs = &h1.system;
    let data = rmatrix(&h1, alpha)?;
    let (r, rh) = (&data.r, &data.r_hat);
    let unit = Word::new(vec![0, 0]);
    let mut report = Report::default();

    for gen in ["g", "x"] {
        let a = h1.parse(gen)?;
        report.push(residual_check(&h1, &format!("intertwining-{gen}"), || {
            let d = h1.maps.coproduct(rs, &a)?;
            Ok(&r.multiply(&d, rs)? - &d.flip()?.multiply(r, rs)?)
        }));
    }

    let r12 = r.embed((0, 1), &unit)?;
    let r13 = r.embed((0, 2), &unit)?;
    let r23 = r.embed((1, 2), &unit)?;
    let delta_left = r
        .expand_slot(0, |w| h1.maps.coproduct_word(rs, w))?
        .normalize(rs)?;
    let delta_right = r
        .expand_slot(1, |w| h1.maps.coproduct_word(rs, w))?
        .normalize(rs)?;
    let printed: [(&str, &TensorElement, &TensorElement, &TensorElement, &str, &TensorElement, &TensorElement); 2] = [
        ("fusion-(Δ⊗id)R=R13R23", &delta_left, &r13, &r23, "(Δ⊗id)R=R23R13", &r23, &r13),
        ("fusion-(id⊗Δ)R=R13R12", &delta_right, &r13, &r12, "(id⊗Δ)R=R12R13", &r12, &r13),
    ];
    for (name, lhs, a, b, alt, c, d) in printed {
        let variant = (lhs - &c.multiply(d, rs)?).is_zero();
        report.push(
            residual_check(&h1, name, || Ok(lhs - &a.multiply(b, rs)?)).with_detail(format!(
                "reversed order {alt} {}",
                if variant { "also holds" } else { "fails" }
            )),
        );
    }

    report.push(residual_check(&h1, "regularity-R", || {
        Ok(&r.multiply(rh, rs)?.multiply(r, rs)? - r)
    }));
    report.push(residual_check(&h1, "regularity-Rhat", || {
        Ok(&rh.multiply(r, rs)?.multiply(rh, rs)? - rh)
    }));

    let witness = annihilator(&h1, r)?;
    let slice = parse_all(&h1, &["g", "g^2", "g*x", "g^2*x"])?;
    let slice_inverse = slice_inverse(&h1, r, &slice, &h1.parse("g^2")?)?;
    report.push(
        run_check(&h1.name(), "non-invertible", || match &witness.vector {
            Some(v) => {
                let prod = r.multiply(v, rs).map_err(|e| e.to_string())?;
                if prod.is_zero() && !v.is_zero() {
                    Ok(())
                } else {
                    Err("annihilator check failed".into())
                }
            }
            None => Err("left multiplication by R is injective".into()),
        })
        .with_detail(format!(
            "kernel dimension {} of left multiplication on the {}-dimensional tensor square; annihilator {}; inverse in g^2H1⊗g^2H1: {}",
            witness.kernel_dim,
            witness.space_dim,
            witness.vector.as_ref().map(|v| h1.render_tensor(v)).unwrap_or_default(),
            slice_inverse.as_ref().map(|v| h1.render_tensor(v)).unwrap_or_else(|| "none".into())
        )),
    );
    Ok(report)
}

/// Two-sided inverse of `t` in `S⊗S` for a unital subalgebra `S` spanned by
/// `slice`, with unit `unit⊗unit`.
pub fn slice_inverse(
    alg: &Algebra,
    t: &TensorElement,
    slice: &[Element],
    unit: &Element,
) -> Result<Option<TensorElement>> {
    let rs = &alg.system;
    let mut basis = Vec::new();
    for a in slice {
        for b in slice {
            basis.push(TensorElement::pure(&[a, b]).normalize(rs)?);
        }
    }
    let target = TensorElement::pure(&[unit, unit]).normalize(rs)?;
    let mut rows: std::collections::BTreeMap<Vec<Word>, usize> = Default::default();
    let mut cols = Vec::new();
    for y in &basis {
        let (l, r) = (t.multiply(y, rs)?, y.multiply(t, rs)?);
        for p in [&l, &r] {
            for (k, _) in p.terms() {
                let n = rows.len();
                rows.entry(k.clone()).or_insert(n);
            }
        }
        cols.push((l, r));
    }
    for (k, _) in target.terms() {
        let n = rows.len();
        rows.entry(k.clone()).or_insert(n);
    }
    // left products in the first block of rows, right products in the second
    let n = rows.len();
    let mut m = vec![vec![Scalar::zero(); basis.len()]; 2 * n];
    for (j, (l, r)) in cols.iter().enumerate() {
        for (k, c) in l.terms() {
            m[rows[k]][j] = c.clone();
        }
        for (k, c) in r.terms() {
            m[n + rows[k]][j] = c.clone();
        }
    }
    let mut b = vec![Scalar::zero(); 2 * n];
    for (k, c) in target.terms() {
        b[rows[k]] = c.clone();
        b[n + rows[k]] = c.clone();
    }
    Ok(linalg::solve(&m, &b)?.map(|x| {
        let mut out = TensorElement::zero(2);
        for (y, c) in basis.iter().zip(&x) {
            out.add_scaled(y, c);
        }
        out
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Annihilator {
    pub space_dim: usize,
    pub kernel_dim: usize,
    /// Nonzero `v` with `R v = 0`, preferring `(1 - g^2) ⊗ 1` when it qualifies.
    pub vector: Option<TensorElement>,
}

/// Null space of `v ↦ t·v` on the tensor square of the algebra.
pub fn annihilator(alg: &Algebra, t: &TensorElement) -> Result<Annihilator> {
    let rs = &alg.system;
    let sc = close_basis(rs, DIMENSION_CAP)?;
    let mut pairs = Vec::new();
    for a in &sc.basis {
        for b in &sc.basis {
            pairs.push(vec![a.clone(), b.clone()]);
        }
    }
    let mut rows: std::collections::BTreeMap<Vec<Word>, usize> = Default::default();
    let mut cols = Vec::new();
    for p in &pairs {
        let mut basis_t = TensorElement::zero(2);
        basis_t.add_term(p.clone(), &Scalar::one());
        let prod = t.multiply(&basis_t, rs)?;
        for (k, _) in prod.terms() {
            let n = rows.len();
            rows.entry(k.clone()).or_insert(n);
        }
        cols.push(prod);
    }
    let mut m = vec![vec![Scalar::zero(); pairs.len()]; rows.len()];
    for (j, prod) in cols.iter().enumerate() {
        for (k, c) in prod.terms() {
            m[rows[k]][j] = c.clone();
        }
    }
    let kernel = linalg::kernel(&m, pairs.len())?;
    let to_tensor = |v: &[Scalar]| {
        let mut out = TensorElement::zero(2);
        for (p, c) in pairs.iter().zip(v) {
            out.add_term(p.clone(), c);
        }
        out
    };
    let mut vector = kernel.first().map(|v| to_tensor(v));
    if let Some(g2) = sc.index(&Word::new(vec![0, 0])) {
        let mut preferred = TensorElement::zero(2);
        preferred.add_term(vec![Word::unit(), Word::unit()], &Scalar::one());
        preferred.add_term(vec![sc.basis[g2].clone(), Word::unit()], &Scalar::from_int(-1));
        if !kernel.is_empty() && t.multiply(&preferred, rs)?.is_zero() {
            vector = Some(preferred);
        }
    }
    Ok(Annihilator {
        space_dim: pairs.len(),
        kernel_dim: kernel.len(),
        vector,
    })
}

/// `G = 1 + g - g²`, `X = (1 + αg)gx` satisfy Sweedler's relations in `H_1`.
pub fn verify_embedded_sweedler(alpha: &AlphaMode) -> Result<Report> {
    let h1 = sweedler(SweedlerKind::H1)?;
    let a = Element::scalar(alpha.scalar());
    let g_big = h1.parse("1 + g - g^2")?;
    let gx = h1.parse("g*x")?;
    let x_big = h1.mul(&(&Element::one() + &h1.mul(&a, &h1.parse("g")?)?), &gx)?;
    let mut report = Report::default();
    let name = h1.name();
    let check = |label: &str, e: Result<Element>| {
        run_check(&name, label, || {
            let e = e.map_err(|e| e.to_string())?;
            if e.is_zero() {
                Ok(())
            } else {
                Err(h1.render(&e))
            }
        })
    };
    report.push(check("embedded-G^2=1", h1.mul(&g_big, &g_big).map(|p| &p - &Element::one())));
    report.push(check(
        "embedded-GX=-XG",
        (|| Ok(&h1.mul(&g_big, &x_big)? + &h1.mul(&x_big, &g_big)?))(),
    ));
    report.push(check("embedded-X^2=0", h1.mul(&x_big, &x_big)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1_basis_and_idempotents() {
        let h1 = sweedler(SweedlerKind::H1).unwrap();
        let sc = close_basis(&h1.system, DIMENSION_CAP).unwrap();
        assert_eq!(sc.dim(), 6);
        assert!(sc.is_associative());
        let g2 = h1.parse("g^2").unwrap();
        assert!(check_central_idempotent(&h1, &sc, &g2).unwrap().holds());
        let x = h1.parse("x").unwrap();
        assert!(!check_central_idempotent(&h1, &sc, &x).unwrap().idempotent);
    }

    #[test]
    fn non_injective_map_is_rejected() {
        let h = sweedler(SweedlerKind::H).unwrap();
        let h1 = sweedler(SweedlerKind::H1).unwrap();
        let map = SliceMap {
            source: &h1,
            target: &h,
            unit: h1.parse("g^2").unwrap(),
            basis: parse_all(&h1, &["g", "g^2"]).unwrap(),
            images: parse_all(&h, &["G", "G"]).unwrap(),
        };
        assert!(map.check_bijective().unwrap().is_err());
    }

    #[test]
    fn r_and_r_hat_agree_at_alpha_zero() {
        let h1 = sweedler(SweedlerKind::H1).unwrap();
        let d = rmatrix(&h1, &AlphaMode::Value(Rational::from_integer(0.into()))).unwrap();
        assert_eq!(d.r, d.r_hat);
        let d = rmatrix(&h1, &AlphaMode::Symbolic).unwrap();
        assert_ne!(d.r, d.r_hat);
    }
}
