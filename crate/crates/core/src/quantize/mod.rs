//! Star products on polynomials in `x, p` and their polarizations into
//! `LL_{t²}` data.
//!
//! Every product is a `t`-series of constant-coefficient bidifferential
//! operators. Operators act on all of `k[x, p]` without truncation, so
//! iterated products of carrier elements are exact; the carrier (monomials of
//! total degree `<= D`) is the set of inputs on which identities are checked.
//!
//! Precision: a star product known mod `t^N` corresponds to `•` known mod
//! `t^N` and `{-,-}` known mod `t^(N-1)`. Under this correspondence
//! associativity mod `t^N` is equivalent to associativity of `•` up to the
//! `t²`-bracket term mod `t^N`, the Leibniz rule mod `t^(N-1)` and the Jacobi
//! identity mod `t^(N-2)`; these are the levels [`check_ll`] uses.

mod ops;

pub use ops::{mono_degree, render_mono, BiDiff, Mono, Poly2, TriDiff};

use crate::scalar::{int, rat, Scalar};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuantizeError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("bracket has {got} coefficients, expected {expected}")]
    BracketLength { expected: usize, got: usize },
    #[error("not commutative mod t")]
    NotCommutativeModT,
    #[error("input fails the LL axioms: {0}")]
    FailsLL(LLFailure),
}

/// Polynomials in `x, p` of total degree `<= degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Carrier {
    pub degree: u32,
}

impl Carrier {
    pub fn new(degree: u32) -> Self {
        Carrier { degree }
    }

    /// Monomials ordered by degree, then by descending power of `x`.
    pub fn basis(&self) -> Vec<Mono> {
        (0..=self.degree)
            .flat_map(|d| (0..=d).rev().map(move |a| [a, d - a]))
            .collect()
    }

    pub fn dim(&self) -> usize {
        let d = self.degree as usize;
        (d + 1) * (d + 2) / 2
    }
}

/// `u * v = Σ_k t^k (u *_k v)` mod `t^N` with `N = terms.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarProduct {
    pub carrier: Carrier,
    pub terms: Vec<BiDiff>,
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

fn binomial(n: u32, k: u32) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn inv_sqrt2() -> Scalar {
    Scalar::u() * Scalar::rat(1, 2)
}

impl StarProduct {
    pub fn new(carrier: Carrier, terms: Vec<BiDiff>) -> Result<Self, QuantizeError> {
        if terms.is_empty() {
            return Err(QuantizeError::ZeroOrder);
        }
        Ok(StarProduct { carrier, terms })
    }

    /// Weyl-symmetric Moyal product
    /// `*_k = (1/2)^k / k! Σ_j C(k,j) (-1)^j ∂x^(k-j) ∂p^j ⊗ ∂x^j ∂p^(k-j)`.
    pub fn moyal(order: usize, degree: u32) -> Result<Self, QuantizeError> {
        let terms = (0..order as u32)
            .map(|k| {
                let mut b = BiDiff::zero();
                let scale = rat(1, 1 << k) / int(factorial(k));
                for j in 0..=k {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    let c = scale.clone() * int(sign * binomial(k, j));
                    b.set([k - j, j], [j, k - j], Scalar::from_rational(c));
                }
                b
            })
            .collect();
        Self::new(Carrier::new(degree), terms)
    }

    /// Standard-ordered product `*_k = (1/k!) ∂p^k ⊗ ∂x^k`.
    pub fn standard(order: usize, degree: u32) -> Result<Self, QuantizeError> {
        let terms = (0..order as u32)
            .map(|k| {
                let mut b = BiDiff::zero();
                b.set([0, k], [k, 0], Scalar::from_rational(rat(1, factorial(k))));
                b
            })
            .collect();
        Self::new(Carrier::new(degree), terms)
    }

    /// `t`-independent product `c·uv`.
    pub fn commutative(order: usize, degree: u32, c: Scalar) -> Result<Self, QuantizeError> {
        let mut terms = vec![BiDiff::zero(); order];
        if let Some(t0) = terms.first_mut() {
            *t0 = BiDiff::product().scale(&c);
        }
        Self::new(Carrier::new(degree), terms)
    }

    /// `u * v := (1/√2)(u • v + t{u, v})`, without checking the LL axioms.
    pub fn from_polarized(data: &LLData) -> Self {
        let terms = (0..data.order())
            .map(|k| {
                let mut b = data.product[k].clone();
                if k > 0 {
                    b = b.add(&data.bracket[k - 1]);
                }
                b.scale(&inv_sqrt2())
            })
            .collect();
        StarProduct {
            carrier: data.carrier,
            terms,
        }
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn is_commutative_mod_t(&self) -> bool {
        let t0 = self.terms[0].restrict(self.carrier.degree);
        t0 == t0.opposite()
    }

    /// Coefficients of `u * v` in `t^0, …, t^(N-1)`.
    pub fn apply(&self, u: &Poly2, v: &Poly2) -> Vec<Poly2> {
        self.terms.iter().map(|b| b.apply(u, v)).collect()
    }

    /// `(u * v) * w − u * (v * w)` mod `t^N` by direct evaluation.
    pub fn evaluate_associator(&self, u: &Poly2, v: &Poly2, w: &Poly2) -> Vec<Poly2> {
        let n = self.order();
        let uv = self.apply(u, v);
        let vw = self.apply(v, w);
        (0..n)
            .map(|k| {
                let mut acc = Poly2::zero();
                for i in 0..=k {
                    let b = &self.terms[i];
                    acc = acc.add(&b.apply(&uv[k - i], w)).sub(&b.apply(u, &vw[k - i]));
                }
                acc
            })
            .collect()
    }

    /// First failure of associativity mod `t^N` on carrier triples.
    pub fn associativity_failure(&self) -> Option<LLFailure> {
        let terms = self.restricted();
        let assoc = series_compose(&terms, &terms, 0)
            .iter()
            .zip(series_compose(&terms, &terms, 1))
            .map(|(l, r)| l.sub(&r))
            .collect::<Vec<_>>();
        first_visible(Axiom::Associativity, &assoc, self.order(), self.carrier.degree)
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_failure().is_none()
    }

    fn restricted(&self) -> Vec<BiDiff> {
        self.terms.iter().map(|b| b.restrict(self.carrier.degree)).collect()
    }
}

/// Commutative product `•` mod `t^N` and bracket `{-,-}` mod `t^(N-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LLData {
    pub carrier: Carrier,
    pub product: Vec<BiDiff>,
    pub bracket: Vec<BiDiff>,
}

impl LLData {
    pub fn new(carrier: Carrier, product: Vec<BiDiff>, bracket: Vec<BiDiff>) -> Result<Self, QuantizeError> {
        if product.is_empty() {
            return Err(QuantizeError::ZeroOrder);
        }
        if bracket.len() + 1 != product.len() {
            return Err(QuantizeError::BracketLength {
                expected: product.len() - 1,
                got: bracket.len(),
            });
        }
        Ok(LLData {
            carrier,
            product,
            bracket,
        })
    }

    /// `c·uv` with zero bracket.
    pub fn commutative(order: usize, degree: u32, c: Scalar) -> Result<Self, QuantizeError> {
        let mut product = vec![BiDiff::zero(); order];
        if let Some(p0) = product.first_mut() {
            *p0 = BiDiff::product().scale(&c);
        }
        Self::new(Carrier::new(degree), product, vec![BiDiff::zero(); order.saturating_sub(1)])
    }

    pub fn order(&self) -> usize {
        self.product.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Associativity,
    ProductSymmetry,
    BracketAntisymmetry,
    Jacobi,
    Leibniz,
    LLAssociator,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::ProductSymmetry => "symmetry of the product",
            Axiom::BracketAntisymmetry => "antisymmetry of the bracket",
            Axiom::Jacobi => "Jacobi identity",
            Axiom::Leibniz => "Leibniz rule",
            Axiom::LLAssociator => "(xy)z - x(yz) = t^2 {y,{x,z}}",
        };
        f.write_str(s)
    }
}

/// An identity failing at `t^order` on carrier basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LLFailure {
    pub axiom: Axiom,
    pub order: usize,
    /// Two entries for the tensor symmetry conditions, three otherwise.
    pub inputs: Vec<Mono>,
}

impl fmt::Display for LLFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ins: Vec<String> = self.inputs.iter().map(render_mono).collect();
        write!(f, "{} fails at t^{} on ({})", self.axiom, self.order, ins.join(", "))
    }
}

fn series_compose(outer: &[BiDiff], inner: &[BiDiff], slot: usize) -> Vec<TriDiff> {
    let n = outer.len().min(inner.len());
    (0..n)
        .map(|k| {
            (0..=k).fold(TriDiff::zero(), |acc, i| {
                acc.add(&TriDiff::compose(&outer[i], &inner[k - i], slot))
            })
        })
        .collect()
}

fn first_visible(axiom: Axiom, defect: &[TriDiff], precision: usize, degree: u32) -> Option<LLFailure> {
    defect.iter().take(precision).enumerate().find_map(|(k, t)| {
        t.visible_term(degree).map(|key| LLFailure {
            axiom,
            order: k,
            inputs: key.to_vec(),
        })
    })
}

fn tensor_failure(axiom: Axiom, ops: &[BiDiff], sign: i64, degree: u32) -> Option<LLFailure> {
    ops.iter().enumerate().find_map(|(k, b)| {
        let b = b.restrict(degree);
        let defect = b.sub(&b.opposite().scale(&Scalar::int(sign)));
        defect.terms().keys().next().map(|(a, c)| LLFailure {
            axiom,
            order: k,
            inputs: vec![*a, *c],
        })
    })
}

/// First violated axiom of the `LL_{t²}` structure on carrier triples.
pub fn ll_failure(data: &LLData) -> Option<LLFailure> {
    let d = data.carrier.degree;
    let n = data.order();
    let pr: Vec<BiDiff> = data.product.iter().map(|b| b.restrict(d)).collect();
    let br: Vec<BiDiff> = data.bracket.iter().map(|b| b.restrict(d)).collect();
    if let Some(f) = tensor_failure(Axiom::ProductSymmetry, &pr, 1, d) {
        return Some(f);
    }
    if let Some(f) = tensor_failure(Axiom::BracketAntisymmetry, &br, -1, d) {
        return Some(f);
    }
    // {x,{y,z}} + {y,{z,x}} + {z,{x,y}}
    let nested = series_compose(&br, &br, 1);
    let jacobi: Vec<TriDiff> = nested
        .iter()
        .map(|t| t.add(&t.permuted([2, 0, 1])).add(&t.permuted([1, 2, 0])))
        .collect();
    let jac_prec = n.saturating_sub(2);
    // {x, y•z} - {x,y}•z - y•{x,z}
    let leibniz: Vec<TriDiff> = series_compose(&br, &pr, 1)
        .iter()
        .zip(series_compose(&pr, &br, 0))
        .zip(series_compose(&pr, &br, 1))
        .map(|((a, b), c)| a.sub(&b).sub(&c.permuted([1, 0, 2])))
        .collect();
    // (x•y)•z - x•(y•z) - t²{y,{x,z}}
    let left = series_compose(&pr, &pr, 0);
    let right = series_compose(&pr, &pr, 1);
    let assoc: Vec<TriDiff> = (0..n)
        .map(|k| {
            let mut t = left[k].sub(&right[k]);
            if k >= 2 && k - 2 < nested.len() {
                t = t.sub(&nested[k - 2].permuted([1, 0, 2]));
            }
            t
        })
        .collect();
    let mut failures: Vec<LLFailure> = [
        first_visible(Axiom::Jacobi, &jacobi, jac_prec, d),
        first_visible(Axiom::Leibniz, &leibniz, n - 1, d),
        first_visible(Axiom::LLAssociator, &assoc, n, d),
    ]
    .into_iter()
    .flatten()
    .collect();
    failures.sort_by_key(|f| f.order);
    failures.into_iter().next()
}

/// Whether `data` is an `LL_q`-structure with `q = t²` on the carrier.
pub fn check_ll(data: &LLData) -> bool {
    ll_failure(data).is_none()
}

/// `• = (1/√2)(* + *ᵒᵖ)` and `t{-,-} = (1/√2)(* − *ᵒᵖ)`.
pub fn polarize_star(s: &StarProduct) -> Result<LLData, QuantizeError> {
    if !s.is_commutative_mod_t() {
        return Err(QuantizeError::NotCommutativeModT);
    }
    let h = inv_sqrt2();
    let product: Vec<BiDiff> = s.terms.iter().map(|b| b.add(&b.opposite()).scale(&h)).collect();
    let bracket: Vec<BiDiff> = s.terms[1..]
        .iter()
        .map(|b| b.sub(&b.opposite()).scale(&h))
        .collect();
    LLData::new(s.carrier, product, bracket)
}

/// `u * v := (1/√2)(u • v + t{u, v})` for data satisfying the LL axioms.
pub fn star_from_ll(data: &LLData) -> Result<StarProduct, QuantizeError> {
    if let Some(f) = ll_failure(data) {
        return Err(QuantizeError::FailsLL(f));
    }
    Ok(StarProduct::from_polarized(data))
}

/// `(*₀, *₁ − *₁ᵒᵖ)`.
pub fn classical_limit(s: &StarProduct) -> (BiDiff, BiDiff) {
    let b = s.terms.get(1).cloned().unwrap_or_default();
    (s.terms[0].clone(), b.sub(&b.opposite()))
}

/// First violated Poisson axiom of `(product, bracket)` on carrier triples.
pub fn poisson_failure(carrier: Carrier, product: &BiDiff, bracket: &BiDiff) -> Option<LLFailure> {
    // q = t² is invisible below t², so order 2 checks associativity and Leibniz
    let data = LLData::new(carrier, vec![product.clone(), BiDiff::zero()], vec![bracket.clone()]).ok()?;
    if let Some(f) = ll_failure(&data) {
        return Some(f);
    }
    let br = [bracket.restrict(carrier.degree)];
    let t = &series_compose(&br, &br, 1)[0];
    let jacobi = t.add(&t.permuted([2, 0, 1])).add(&t.permuted([1, 2, 0]));
    first_visible(Axiom::Jacobi, &[jacobi], 1, carrier.degree)
}

/// The monomial `x^a p^b` as a polynomial.
pub fn mono(m: Mono) -> Poly2 {
    Poly2::monomial(m, Scalar::int(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_basis() {
        let c = Carrier::new(2);
        assert_eq!(c.basis(), vec![[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]);
        assert_eq!(c.dim(), 6);
        assert_eq!(Carrier::new(4).basis().len(), 15);
    }

    #[test]
    fn moyal_first_order_is_half_the_poisson_bracket() {
        let m = StarProduct::moyal(3, 4).unwrap();
        assert_eq!(m.terms[0], BiDiff::product());
        assert_eq!(m.terms[1], BiDiff::poisson().scale(&Scalar::rat(1, 2)));
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(StarProduct::moyal(0, 2), Err(QuantizeError::ZeroOrder));
        let e = LLData::new(Carrier::new(1), vec![BiDiff::product()], vec![BiDiff::zero()]);
        assert!(matches!(e, Err(QuantizeError::BracketLength { .. })));
    }

    #[test]
    fn standard_product_is_not_commutative_at_first_order() {
        let s = StarProduct::standard(2, 2).unwrap();
        assert!(s.is_commutative_mod_t());
        assert_ne!(s.terms[1], s.terms[1].opposite());
    }
}
