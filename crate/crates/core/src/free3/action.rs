use super::{Shape, Tree, Var};
use crate::scalar::{Field, Scalar};
use serde::Serialize;
use std::fmt;

/// A permutation of the legs `{0, 1, 2, 3}`; leg `0` is the output and legs
/// `1, 2, 3` carry `x, y, z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm4(pub [u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// The cycle `0 -> 1 -> 2 -> 3 -> 0`.
    pub const GAMMA: Perm4 = Perm4([1, 2, 3, 0]);

    /// Builds a permutation, rejecting non-bijections.
    pub fn new(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    /// The element of `S3` sending variable `i` to `vars[i]`, fixing the output.
    pub fn from_vars(vars: [Var; 3]) -> Option<Self> {
        Self::new([0, vars[0] + 1, vars[1] + 1, vars[2] + 1])
    }

    /// From disjoint-cycle notation on `{0, .., 3}`, e.g. `&[&[0, 1], &[2, 3]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Option<Self> {
        let mut p = [0, 1, 2, 3];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                p[a as usize] = c[(k + 1) % c.len()];
            }
        }
        Self::new(p)
    }

    pub fn apply(&self, leg: u8) -> u8 {
        self.0[leg as usize]
    }

    /// `self` followed by `other`: `(self.then(other))(l) = other(self(l))`.
    /// The right actions below satisfy `(w.s).r = w.(s.then(r))`.
    pub fn then(&self, other: &Perm4) -> Perm4 {
        Perm4(self.0.map(|l| other.apply(l)))
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0; 4];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Perm4(inv)
    }

    pub fn fixes_output(&self) -> bool {
        self.0[0] == 0
    }

    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    /// The restriction to the variables, for elements fixing the output.
    pub fn vars(&self) -> Option<[Var; 3]> {
        self.fixes_output()
            .then(|| [self.0[1] - 1, self.0[2] - 1, self.0[3] - 1])
    }

    /// All 24 elements in lexicographic order.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Some(p) = Perm4::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// The six elements fixing the output.
    pub fn sigma3() -> Vec<Perm4> {
        Self::all().into_iter().filter(|p| p.fixes_output()).collect()
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 4];
        let mut any = false;
        for start in 0..4u8 {
            if seen[start as usize] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i as usize] {
                seen[i as usize] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.apply(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A linear map sending each basis vector to a signed basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    images: Vec<(usize, i8)>,
}

impl SignedPerm {
    pub fn new(images: Vec<(usize, i8)>) -> Self {
        SignedPerm { images }
    }

    pub fn identity(dim: usize) -> Self {
        SignedPerm {
            images: (0..dim).map(|i| (i, 1)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    /// Image of basis vector `i`.
    pub fn image(&self, i: usize) -> (usize, i8) {
        self.images[i]
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); v.len()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, s) = self.images[i];
            out[j] = if s < 0 { -c.clone() } else { c.clone() };
        }
        out
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm {
            images: self
                .images
                .iter()
                .map(|&(j, s)| {
                    let (k, t) = other.images[j];
                    (k, s * t)
                })
                .collect(),
        }
    }

    /// Row `i` is the image of basis vector `i`.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        self.images
            .iter()
            .map(|&(j, s)| {
                let mut row = vec![Scalar::zero(); n];
                row[j] = Scalar::int(s as i64);
                row
            })
            .collect()
    }

    /// Trace as an integer.
    pub fn trace(&self) -> i64 {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, (j, _))| i == j)
            .map(|(_, (_, s))| *s as i64)
            .sum()
    }
}

/// A trivalent vertex: generator and its legs in cyclic order, output first.
/// Leg `4` is the internal edge.
#[derive(Clone, Copy)]
struct Vertex {
    gen: usize,
    legs: [u8; 3],
}

const EDGE: u8 = 4;

impl Vertex {
    fn rotate_to(&self, leg: u8) -> [u8; 3] {
        let k = self.legs.iter().position(|&l| l == leg).expect("leg on vertex");
        [self.legs[k], self.legs[(k + 1) % 3], self.legs[(k + 2) % 3]]
    }
}

fn leaf(leg: u8) -> Tree {
    Tree::Var(leg - 1)
}

impl Shape {
    /// Right action of `p` on basis vectors: relabel legs, re-root at leg 0.
    pub fn action(&self, p: &Perm4) -> SignedPerm {
        SignedPerm::new(
            (0..self.dim())
                .map(|i| {
                    let t = act_on_tree(&self.monomial_tree(i), p);
                    self.locate(&t).expect("action preserves arity 3")
                })
                .collect(),
        )
    }

    /// The action of the four-cycle `(0 1 2 3)`.
    pub fn gamma(&self) -> SignedPerm {
        self.action(&Perm4::GAMMA)
    }

    /// Left action reversing both arguments at every node.
    pub fn lambda(&self) -> SignedPerm {
        SignedPerm::new(
            (0..self.dim())
                .map(|i| self.locate(&self.monomial_tree(i).mirror()).expect("mirror keeps arity"))
                .collect(),
        )
    }

    /// Right action on a vector.
    pub fn act(&self, v: &[Scalar], p: &Perm4) -> Vec<Scalar> {
        self.action(p).apply(v)
    }
}

/// Applies a leg permutation to a planar arity-3 tree.
pub(crate) fn act_on_tree(t: &Tree, p: &Perm4) -> Tree {
    let Tree::App(go, l, r) = t else {
        panic!("arity-3 tree expected")
    };
    let (inner, lone, inner_right) = match (l.as_ref(), r.as_ref()) {
        (Tree::App(..), Tree::Var(v)) => (l.as_ref(), *v, false),
        (Tree::Var(v), Tree::App(..)) => (r.as_ref(), *v, true),
        _ => panic!("arity-3 tree expected"),
    };
    let Tree::App(gi, a, b) = inner else { unreachable!() };
    let (Tree::Var(a), Tree::Var(b)) = (a.as_ref(), b.as_ref()) else {
        panic!("arity-3 tree expected")
    };
    let outer_legs = if inner_right {
        [0, lone + 1, EDGE]
    } else {
        [0, EDGE, lone + 1]
    };
    let relabel = |l: u8| if l == EDGE { EDGE } else { p.apply(l) };
    let outer = Vertex {
        gen: *go,
        legs: outer_legs.map(relabel),
    };
    let inner = Vertex {
        gen: *gi,
        legs: [EDGE, a + 1, b + 1].map(relabel),
    };
    let (root, other) = if outer.legs.contains(&0) {
        (outer, inner)
    } else {
        (inner, outer)
    };
    let read = |leg: u8| -> Tree {
        if leg == EDGE {
            let [_, s, t] = other.rotate_to(EDGE);
            Tree::app(other.gen, leaf(s), leaf(t))
        } else {
            leaf(leg)
        }
    };
    let [_, s, t] = root.rotate_to(0);
    Tree::app(root.gen, read(s), read(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free3::{GeneratorDecl, Symmetry};

    #[test]
    fn perm_basics() {
        assert_eq!(Perm4::all().len(), 24);
        assert_eq!(Perm4::sigma3().len(), 6);
        assert!(Perm4::new([0, 0, 1, 2]).is_none());
        let g = Perm4::GAMMA;
        assert!(!g.is_even());
        assert_eq!(g.then(&g).then(&g).then(&g), Perm4::IDENTITY);
        assert_eq!(g.then(&g.inverse()), Perm4::IDENTITY);
        assert_eq!(g.to_string(), "(0 1 2 3)");
        assert_eq!(Perm4::from_cycles(&[&[0, 1], &[2, 3]]).unwrap().0, [1, 0, 3, 2]);
    }

    #[test]
    fn transposition_relabels_leaves() {
        let s = Shape::new(vec![GeneratorDecl::new("m", Symmetry::None)]);
        let t = Tree::app(0, Tree::app(0, Tree::x(), Tree::y()), Tree::z());
        let (i, _) = s.locate(&t).unwrap();
        let tau = Perm4::from_vars([1, 0, 2]).unwrap();
        let (j, sign) = s.action(&tau).image(i);
        assert_eq!(sign, 1);
        assert_eq!(s.monomial_tree(j).render_infix("."), "(y.x).z");
    }

    #[test]
    fn anti_generator_sign_under_transposition() {
        let s = Shape::new(vec![
            GeneratorDecl::new("b", Symmetry::Anti),
            GeneratorDecl::new("c", Symmetry::Comm),
        ]);
        let t = Tree::app(1, Tree::app(0, Tree::x(), Tree::y()), Tree::z());
        let (i, _) = s.locate(&t).unwrap();
        let tau = Perm4::from_vars([1, 0, 2]).unwrap();
        assert_eq!(s.action(&tau).image(i), (i, -1));
    }

    #[test]
    fn signed_perm_trace_and_compose() {
        let p = SignedPerm::new(vec![(1, -1), (0, 1), (2, -1)]);
        assert_eq!(p.trace(), -1);
        assert_eq!(p.then(&p), SignedPerm::new(vec![(0, -1), (1, -1), (2, 1)]));
    }
}
