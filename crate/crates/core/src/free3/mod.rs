//! The arity-3 component of the free operad on binary generators.
//!
//! A generator of type `none` spans the regular representation of `S2` and
//! occupies two *slots* (the operation and its opposite); `comm` and `anti`
//! generators occupy one. A basis monomial is `o(i(a, b), c)` up to the
//! orientation recorded in the slots, so `Γ(E)(3)` has dimension
//! `3 * slots^2`.
//!
//! Basis order: outer generator, inner generator, outer orientation (lone
//! variable on the right, then on the left), inner orientation, lone
//! variable (`z`, `x`, `y`). For a single `none` generator `m` the first
//! three basis vectors are `(x.y).z`, `(y.z).x`, `(x.z).y`.

mod action;
mod subspace;
mod subst;
mod tree;

pub use action::{Perm4, SignedPerm};
pub use subspace::Subspace;
pub use subst::{GenImage, GenSubst, Polarization};
pub use tree::{Tree, Var, VAR_NAMES};

use crate::scalar::{Field, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Coordinates in the canonical basis of `Γ(E)(3)`.
pub type Arity3Vector = Vec<Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Comm,
    Anti,
    None,
}

impl Symmetry {
    /// Sign picked up when the two arguments are swapped.
    fn swap_sign(self) -> i8 {
        match self {
            Symmetry::Anti => -1,
            _ => 1,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Symmetry::Comm => "comm",
            Symmetry::Anti => "anti",
            Symmetry::None => "none",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorDecl {
    pub name: String,
    pub symmetry: Symmetry,
}

impl GeneratorDecl {
    pub fn new(name: &str, symmetry: Symmetry) -> Self {
        GeneratorDecl {
            name: name.to_string(),
            symmetry,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Free3Error {
    #[error("expected a monomial with two operations and leaves x, y, z")]
    NotArity3,
    #[error("variable {0} used twice in a monomial")]
    RepeatedVariable(char),
    #[error("generator index {0} out of range")]
    UnknownGenerator(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("generator {0} cannot be depolarized: expected a comm generator followed by an anti one")]
    NotPolarized(String),
    #[error("substitution is not invertible in arity 2")]
    NotInvertible,
    #[error("substitution for {0} does not respect its symmetry")]
    NotEquivariant(String),
}

/// A generator slot: generator index and orientation (`1` = opposite).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub gen: usize,
    pub flipped: bool,
}

/// Basis monomial `outer(inner(a, b), lone)` with orientations in the slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub outer: Slot,
    pub inner: Slot,
    pub lone: Var,
}

const LONE_ORDER: [Var; 3] = [2, 0, 1];

/// The generator alphabet `E` together with its canonical arity-3 basis.
#[derive(Clone, Debug)]
pub struct Shape {
    gens: Vec<GeneratorDecl>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl PartialEq for Shape {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Shape {}

impl Shape {
    pub fn new(gens: Vec<GeneratorDecl>) -> Self {
        let orients = |g: &GeneratorDecl| -> Vec<bool> {
            if g.symmetry == Symmetry::None {
                vec![false, true]
            } else {
                vec![false]
            }
        };
        let mut basis = Vec::new();
        for (go, gd_o) in gens.iter().enumerate() {
            for (gi, gd_i) in gens.iter().enumerate() {
                for &fo in &orients(gd_o) {
                    for &fi in &orients(gd_i) {
                        for lone in LONE_ORDER {
                            basis.push(Monomial {
                                outer: Slot { gen: go, flipped: fo },
                                inner: Slot { gen: gi, flipped: fi },
                                lone,
                            });
                        }
                    }
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Shape { gens, basis, index }
    }

    pub fn gens(&self) -> &[GeneratorDecl] {
        &self.gens
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// `dim E`.
    pub fn slots(&self) -> usize {
        self.gens
            .iter()
            .map(|g| if g.symmetry == Symmetry::None { 2 } else { 1 })
            .sum()
    }

    /// `dim Γ(E)(3) = 3 (dim E)^2`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Planar representative of a basis monomial; it has coefficient `+1`.
    pub fn monomial_tree(&self, idx: usize) -> Tree {
        let m = self.basis[idx];
        let (a, b) = others(m.lone);
        let (a, b) = if m.inner.flipped { (b, a) } else { (a, b) };
        let inner = Tree::app(m.inner.gen, Tree::Var(a), Tree::Var(b));
        let lone = Tree::Var(m.lone);
        if m.outer.flipped {
            Tree::app(m.outer.gen, lone, inner)
        } else {
            Tree::app(m.outer.gen, inner, lone)
        }
    }

    /// Index and sign of an arbitrary planar arity-3 monomial.
    pub fn locate(&self, t: &Tree) -> Result<(usize, i8), Free3Error> {
        let Tree::App(go, l, r) = t else {
            return Err(Free3Error::NotArity3);
        };
        let (inner, lone, inner_right) = match (l.as_ref(), r.as_ref()) {
            (Tree::App(..), Tree::Var(v)) => (l.as_ref(), *v, false),
            (Tree::Var(v), Tree::App(..)) => (r.as_ref(), *v, true),
            _ => return Err(Free3Error::NotArity3),
        };
        let Tree::App(gi, il, ir) = inner else {
            unreachable!()
        };
        let (Tree::Var(a), Tree::Var(b)) = (il.as_ref(), ir.as_ref()) else {
            return Err(Free3Error::NotArity3);
        };
        let (a, b) = (*a, *b);
        for v in [a, b, lone] {
            if v > 2 {
                return Err(Free3Error::NotArity3);
            }
        }
        if a == b || a == lone {
            return Err(Free3Error::RepeatedVariable(VAR_NAMES[a as usize]));
        }
        if b == lone {
            return Err(Free3Error::RepeatedVariable(VAR_NAMES[b as usize]));
        }
        let sym = |g: usize| {
            self.gens
                .get(g)
                .map(|d| d.symmetry)
                .ok_or(Free3Error::UnknownGenerator(g))
        };
        let (so, si) = (sym(*go)?, sym(*gi)?);
        let mut sign = 1i8;
        let inner_flipped = a > b;
        let fi = inner_flipped && si == Symmetry::None;
        if inner_flipped {
            sign *= si.swap_sign();
        }
        let fo = inner_right && so == Symmetry::None;
        if inner_right {
            sign *= so.swap_sign();
        }
        let m = Monomial {
            outer: Slot { gen: *go, flipped: fo },
            inner: Slot { gen: *gi, flipped: fi },
            lone,
        };
        Ok((self.index[&m], sign))
    }

    /// Coordinates of a weighted sum of planar monomials.
    pub fn vectorize<'a, I>(&self, terms: I) -> Result<Arity3Vector, Free3Error>
    where
        I: IntoIterator<Item = (&'a Scalar, &'a Tree)>,
    {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (c, t) in terms {
            let (i, s) = self.locate(t)?;
            let c = if s < 0 { -c.clone() } else { c.clone() };
            v[i] = v[i].clone() + c;
        }
        Ok(v)
    }

    /// Number of `anti` generators among the two operations of a basis monomial.
    pub fn anti_count(&self, idx: usize) -> usize {
        let m = self.basis[idx];
        [m.outer.gen, m.inner.gen]
            .iter()
            .filter(|&&g| self.gens[g].symmetry == Symmetry::Anti)
            .count()
    }

    pub fn has_none(&self) -> bool {
        self.gens.iter().any(|g| g.symmetry == Symmetry::None)
    }

    /// Renders a vector as a signed sum of prefix monomials.
    pub fn render_vector(&self, v: &[Scalar]) -> String {
        let names = self.names();
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = self.monomial_tree(i).render(&names);
            let (neg, mag) = split_sign(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", wrap_scalar(&mag)));
            }
        }
        if out.is_empty() {
            "0".to_string()
        } else {
            out
        }
    }
}

/// The two variables other than `lone`, in increasing order.
fn others(lone: Var) -> (Var, Var) {
    match lone {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Splits off a leading minus sign when the scalar is a negative rational.
pub(crate) fn split_sign(c: &Scalar) -> (bool, Scalar) {
    match c.as_rational() {
        Some(r) if r < num_traits::Zero::zero() => (true, -c.clone()),
        _ => (false, c.clone()),
    }
}

/// Parenthesizes a scalar unless it is a plain integer or a single symbol.
pub(crate) fn wrap_scalar(c: &Scalar) -> String {
    let s = c.to_string();
    if s.chars().all(|ch| ch.is_ascii_alphanumeric()) {
        s
    } else {
        format!("({s})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_none() -> Shape {
        Shape::new(vec![GeneratorDecl::new("m", Symmetry::None)])
    }

    #[test]
    fn dimensions() {
        assert_eq!(one_none().dim(), 12);
        assert_eq!(Shape::new(vec![GeneratorDecl::new("c", Symmetry::Comm)]).dim(), 3);
        let mixed = Shape::new(vec![
            GeneratorDecl::new("m", Symmetry::None),
            GeneratorDecl::new("c", Symmetry::Comm),
        ]);
        assert_eq!(mixed.dim(), 27);
    }

    #[test]
    fn basis_round_trips_through_locate() {
        let shapes = [
            one_none(),
            Shape::new(vec![
                GeneratorDecl::new("c", Symmetry::Comm),
                GeneratorDecl::new("b", Symmetry::Anti),
            ]),
        ];
        for s in shapes {
            for i in 0..s.dim() {
                assert_eq!(s.locate(&s.monomial_tree(i)).unwrap(), (i, 1));
            }
        }
    }

    #[test]
    fn first_basis_vectors() {
        let s = one_none();
        let r: Vec<String> = (0..3).map(|i| s.monomial_tree(i).render_infix(".")).collect();
        assert_eq!(r, ["(x.y).z", "(y.z).x", "(x.z).y"]);
    }

    #[test]
    fn anti_swap_sign() {
        let s = Shape::new(vec![
            GeneratorDecl::new("c", Symmetry::Comm),
            GeneratorDecl::new("b", Symmetry::Anti),
        ]);
        let t = Tree::app(0, Tree::app(1, Tree::y(), Tree::x()), Tree::z());
        let (i, sign) = s.locate(&t).unwrap();
        assert_eq!(sign, -1);
        let t2 = Tree::app(0, Tree::z(), Tree::app(1, Tree::x(), Tree::y()));
        assert_eq!(s.locate(&t2).unwrap(), (i, 1));
    }

    #[test]
    fn malformed_monomials() {
        let s = one_none();
        let rep = Tree::app(0, Tree::app(0, Tree::x(), Tree::x()), Tree::z());
        assert_eq!(s.locate(&rep), Err(Free3Error::RepeatedVariable('x')));
        assert_eq!(s.locate(&Tree::app(0, Tree::x(), Tree::y())), Err(Free3Error::NotArity3));
    }
}
