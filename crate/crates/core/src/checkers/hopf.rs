use super::CheckError;
use crate::free3::{Shape, Subspace, Symmetry, Tree};
use crate::presentation::{vector_to_expr, Presentation};
use crate::scalar::{Field, Poly, Scalar};
use serde::Serialize;
use std::collections::BTreeMap;

type BPoly = Poly<Scalar>;

/// `Δ(m) = A m⊗m + B m⊗m' + C m'⊗m + D m'⊗m'` with `m'` the opposite
/// product; coefficients are polynomials in an unknown `B0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalCandidate {
    pub a: BPoly,
    pub b: BPoly,
    pub c: BPoly,
    pub d: BPoly,
}

impl DiagonalCandidate {
    pub fn numeric(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        DiagonalCandidate {
            a: Poly::constant(a),
            b: Poly::constant(b),
            c: Poly::constant(c),
            d: Poly::constant(d),
        }
    }

    /// The counital family `A = 1 - B0`, `B = C = B0`, `D = -B0`.
    pub fn family() -> Self {
        let b0: BPoly = Poly::x();
        DiagonalCandidate {
            a: Poly::one() - b0.clone(),
            b: b0.clone(),
            c: b0.clone(),
            d: -b0,
        }
    }

    /// Substitutes `B0 = value`.
    pub fn at(&self, value: &Scalar) -> Self {
        let e = |p: &BPoly| p.eval(value);
        Self::numeric(e(&self.a), e(&self.b), e(&self.c), e(&self.d))
    }

    fn numeric_coeffs(&self) -> Option<[Scalar; 4]> {
        let n = |p: &BPoly| p.is_constant().then(|| p.coeff(0));
        Some([n(&self.a)?, n(&self.b)?, n(&self.c)?, n(&self.d)?])
    }

    /// Terms `(coefficient, first factor flipped, second factor flipped)` of
    /// `Δ` applied to the product (`flipped = false`) or its opposite.
    fn terms(&self, flipped: bool) -> [(BPoly, bool, bool); 4] {
        [
            (self.a.clone(), flipped, flipped),
            (self.b.clone(), flipped, !flipped),
            (self.c.clone(), !flipped, flipped),
            (self.d.clone(), !flipped, !flipped),
        ]
    }
}

/// Elements of `P(2)^{⊗k}` for the operation and its opposite, keyed by the
/// flip pattern of the factors.
type Arity2Tensor = BTreeMap<Vec<bool>, Scalar>;

fn add_to(t: &mut Arity2Tensor, key: Vec<bool>, c: Scalar) {
    let e = t.entry(key).or_insert_with(Scalar::zero);
    *e = e.clone() + c;
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ`, checked on the generator and on every arity-3
/// monomial of the free operad on one operation without symmetry.
pub fn check_coassoc(d: &DiagonalCandidate) -> bool {
    let k = d
        .numeric_coeffs()
        .expect("coassociativity is checked for numeric coefficients");
    let delta = |flipped: bool| -> [(Scalar, bool, bool); 4] {
        let f = flipped;
        [
            (k[0].clone(), f, f),
            (k[1].clone(), f, !f),
            (k[2].clone(), !f, f),
            (k[3].clone(), !f, !f),
        ]
    };
    let side = |left: bool| -> [Arity2Tensor; 2] {
        [false, true].map(|flipped| {
            let mut t = Arity2Tensor::new();
            for (c, a, b) in delta(flipped) {
                let (split, keep) = if left { (a, b) } else { (b, a) };
                for (c2, s1, s2) in delta(split) {
                    let key = if left { vec![s1, s2, keep] } else { vec![keep, s1, s2] };
                    add_to(&mut t, key, c.clone() * c2);
                }
            }
            t.retain(|_, c| !c.is_zero());
            t
        })
    };
    let (l, r) = (side(true), side(false));
    if l != r {
        return false;
    }
    // On arity 3 the diagonal acts node by node.
    let shape = Shape::new(vec![crate::free3::GeneratorDecl::new("m", Symmetry::None)]);
    let expand = |tensors: &[Arity2Tensor; 2]| -> BTreeMap<[usize; 4], Scalar> {
        let mut out = BTreeMap::new();
        let node = |flip: bool| -> Vec<(Scalar, Vec<bool>)> {
            tensors[flip as usize]
                .iter()
                .map(|(k, c)| (c.clone(), k.clone()))
                .collect()
        };
        for i in 0..shape.dim() {
            let t = shape.monomial_tree(i);
            for (c, trees) in expand_tree(&t, 3, &node, &Scalar::one()) {
                let mut key = [i, 0, 0, 0];
                let mut coef = c;
                for (slot, tr) in trees.iter().enumerate() {
                    let (idx, s) = shape.locate(tr).expect("arity 3");
                    key[slot + 1] = idx;
                    if s < 0 {
                        coef = -coef;
                    }
                }
                let e = out.entry(key).or_insert_with(Scalar::zero);
                *e = e.clone() + coef;
            }
        }
        out.retain(|_, c: &mut Scalar| !c.is_zero());
        out
    };
    expand(&l) == expand(&r)
}

/// Expands a tree through a node-wise map into `arity`-fold tensors of trees.
fn expand_tree<C: Clone + std::ops::Mul<Output = C>>(
    t: &Tree,
    arity: usize,
    node: &dyn Fn(bool) -> Vec<(C, Vec<bool>)>,
    one: &C,
) -> Vec<(C, Vec<Tree>)> {
    match t {
        Tree::Var(v) => vec![(one.clone(), vec![Tree::Var(*v); arity])],
        Tree::App(g, l, r) => {
            let ls = expand_tree(l, arity, node, one);
            let rs = expand_tree(r, arity, node, one);
            let mut out = Vec::new();
            for (c, flips) in node(false) {
                for (cl, tl) in &ls {
                    for (cr, tr) in &rs {
                        let trees = (0..arity)
                            .map(|k| {
                                let (a, b) = (tl[k].clone(), tr[k].clone());
                                if flips[k] {
                                    Tree::app(*g, b, a)
                                } else {
                                    Tree::app(*g, a, b)
                                }
                            })
                            .collect();
                        out.push((c.clone() * cl.clone() * cr.clone(), trees));
                    }
                }
            }
            out
        }
    }
}

/// The normalized counit conditions `A+C = 1, B+D = 0, A+B = 1, C+D = 0`.
pub fn check_counit(d: &DiagonalCandidate) -> bool {
    let [a, b, c, e] = d
        .numeric_coeffs()
        .expect("the counit is checked for numeric coefficients");
    (a.clone() + c.clone()).is_one()
        && (b.clone() + e.clone()).is_zero()
        && (a + b).is_one()
        && (c + e).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfVerdict {
    /// No diagonal of the normalized form exists.
    None,
    /// Exactly one value of `B0` works.
    Unique,
    /// Every `B0` works.
    All,
    /// `B0` must be a root of a polynomial of degree at least two.
    Constrained,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HopfResult {
    pub verdict: HopfVerdict,
    /// The solved value (`B = ...`, or `A = 1` for a commutative generator).
    pub witness: Option<String>,
    /// Monic polynomial in `B` that `B0` must annihilate, when not constant.
    pub constraint: Option<String>,
    /// The first relation whose image rules out every diagonal.
    pub diagonal_fails_on: Option<String>,
    #[serde(skip)]
    pub value: Option<Scalar>,
}

/// Renders a polynomial in `B`.
fn render_poly(p: &BPoly) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "B".to_string(),
            _ => format!("B^{i}"),
        };
        let (neg, mag) = crate::free3::split_sign(c);
        out.push_str(match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if mono.is_empty() {
            out.push_str(&crate::free3::wrap_scalar(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", crate::free3::wrap_scalar(&mag)));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Coordinates of `Δ(3)(e_i)` in `P(3) ⊗ P(3)`, one matrix per basis monomial,
/// entries polynomial in `B0`.
fn diagonal_images(shape: &Shape, r: &Subspace, d: &DiagonalCandidate) -> Vec<Vec<BPoly>> {
    let quotient: Vec<Vec<Scalar>> = (0..shape.dim())
        .map(|i| {
            let mut e = vec![Scalar::zero(); shape.dim()];
            e[i] = Scalar::one();
            r.quotient_coords(&e).expect("matching dimension")
        })
        .collect();
    let k = shape.dim() - r.rank();
    let node = |flipped: bool| -> Vec<(BPoly, Vec<bool>)> {
        d.terms(flipped)
            .into_iter()
            .filter(|(c, _, _)| !c.is_zero())
            .map(|(c, a, b)| (c, vec![a, b]))
            .collect()
    };
    (0..shape.dim())
        .map(|i| {
            let mut m = vec![BPoly::zero(); k * k];
            for (c, trees) in expand_tree(&shape.monomial_tree(i), 2, &node, &BPoly::one()) {
                let (i1, s1) = shape.locate(&trees[0]).expect("arity 3");
                let (i2, s2) = shape.locate(&trees[1]).expect("arity 3");
                let c = if s1 * s2 < 0 { -c } else { c };
                for (a, qa) in quotient[i1].iter().enumerate() {
                    if qa.is_zero() {
                        continue;
                    }
                    for (b, qb) in quotient[i2].iter().enumerate() {
                        if qb.is_zero() {
                            continue;
                        }
                        let idx = a * k + b;
                        m[idx] = m[idx].clone() + c.scale(&(qa.clone() * qb.clone()));
                    }
                }
            }
            m
        })
        .collect()
}

/// Constraint polynomials of each relation basis vector.
fn constraints(shape: &Shape, r: &Subspace, d: &DiagonalCandidate) -> Vec<Vec<BPoly>> {
    let images = diagonal_images(shape, r, d);
    r.basis()
        .iter()
        .map(|row| {
            let k2 = images.first().map_or(0, |m| m.len());
            let mut acc = vec![BPoly::zero(); k2];
            for (c, img) in row.iter().zip(&images) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in acc.iter_mut().zip(img) {
                    if !y.is_zero() {
                        *x = x.clone() + y.scale(c);
                    }
                }
            }
            acc.retain(|p| !p.is_zero());
            acc
        })
        .collect()
}

/// Whether the diagonal kills `R`, i.e. induces a map `P → P ⊗ P`.
pub fn diagonal_image_vanishes(p: &Presentation, d: &DiagonalCandidate) -> Result<bool, CheckError> {
    let p = single_generator(p)?;
    Ok(constraints(&p.shape, p.relation_space(), d)
        .iter()
        .all(|c| c.is_empty()))
}

/// A presentation with one generator; a polarized pair is depolarized first.
fn single_generator(p: &Presentation) -> Result<Presentation, CheckError> {
    match p.gens() {
        [_] => Ok(p.clone()),
        [c, b] if c.symmetry == Symmetry::Comm && b.symmetry == Symmetry::Anti => Ok(p.depolarize()?),
        gens => Err(CheckError::Unsupported(format!(
            "Hopf analysis needs one generator, {} has {}",
            p.name,
            gens.len()
        ))),
    }
}

/// Decides which normalized diagonals extend to the operad.
pub fn hopf_analyze(p: &Presentation) -> Result<HopfResult, CheckError> {
    let p = single_generator(p)?;
    let result = |verdict, witness: Option<String>, value| HopfResult {
        verdict,
        witness,
        constraint: None,
        diagonal_fails_on: None,
        value,
    };
    match p.gens()[0].symmetry {
        Symmetry::Anti => Ok(HopfResult {
            diagonal_fails_on: Some("the counit vanishes on an anticommutative generator".into()),
            ..result(HopfVerdict::None, None, None)
        }),
        Symmetry::Comm => {
            let d = DiagonalCandidate::numeric(Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero());
            let cons = constraints(&p.shape, p.relation_space(), &d);
            match cons.iter().position(|c| !c.is_empty()) {
                None => Ok(result(HopfVerdict::Unique, Some("A = 1".into()), Some(Scalar::one()))),
                Some(i) => Ok(HopfResult {
                    diagonal_fails_on: Some(render_row(&p, i)),
                    ..result(HopfVerdict::None, None, None)
                }),
            }
        }
        Symmetry::None => {
            let cons = constraints(&p.shape, p.relation_space(), &DiagonalCandidate::family());
            let mut g = BPoly::zero();
            for (i, row) in cons.iter().enumerate() {
                for c in row {
                    g = g.gcd(c);
                }
                if g.degree() == Some(0) {
                    return Ok(HopfResult {
                        diagonal_fails_on: Some(render_row(&p, i)),
                        ..result(HopfVerdict::None, None, None)
                    });
                }
            }
            let out = match g.degree() {
                None => result(HopfVerdict::All, Some("any B".into()), None),
                Some(1) => {
                    let root = -(g.coeff(0));
                    result(HopfVerdict::Unique, Some(format!("B = {root}")), Some(root))
                }
                Some(_) => HopfResult {
                    constraint: Some(render_poly(&g)),
                    ..result(HopfVerdict::Constrained, None, None)
                },
            };
            if let Some(v) = &out.value {
                let check = DiagonalCandidate::family().at(v);
                if !constraints(&p.shape, p.relation_space(), &check).iter().all(|c| c.is_empty()) {
                    return Err(CheckError::InternalInconsistency(format!(
                        "{}: the solved diagonal B = {v} does not preserve the relations",
                        p.name
                    )));
                }
            }
            Ok(out)
        }
    }
}

fn render_row(p: &Presentation, i: usize) -> String {
    let expr = vector_to_expr(&p.shape, &p.relation_space().basis()[i]);
    format!("{} = 0", expr.render(&p.shape.names()))
}
