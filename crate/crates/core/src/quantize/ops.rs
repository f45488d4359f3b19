use crate::scalar::{Field, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent pair `[a, b]` of `x^a p^b`, also used as a derivative multi-index.
pub type Mono = [u32; 2];

pub fn mono_degree(m: &Mono) -> u32 {
    m[0] + m[1]
}

fn falling(n: u32, k: u32) -> i64 {
    (0..k).map(|i| (n - i) as i64).product()
}

fn binomial(n: u32, k: u32) -> i64 {
    falling(n, k) / falling(k, k)
}

fn sub(a: &Mono, b: &Mono) -> Option<Mono> {
    Some([a[0].checked_sub(b[0])?, a[1].checked_sub(b[1])?])
}

fn add(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn render_mono(m: &Mono) -> String {
    let f = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [f("x", m[0]), f("p", m[1])].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn insert<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Polynomial in `x, p` with [`Scalar`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Mono, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        insert(&mut self.terms, m, c);
    }

    pub fn add(&self, o: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly2) -> Poly2 {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Poly2 {
        let mut out = Poly2::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, a.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                out.add_term(add(m, n), a.clone() * b.clone());
            }
        }
        out
    }

    /// `∂x^a ∂p^b` for `d = [a, b]`.
    pub fn derive(&self, d: &Mono) -> Poly2 {
        let mut out = Poly2::zero();
        for (m, c) in &self.terms {
            if let Some(r) = sub(m, d) {
                let k = falling(m[0], d[0]) * falling(m[1], d[1]);
                out.add_term(r, c.clone() * Scalar::int(k));
            }
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*{}", render_mono(m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bilinear operator `(u, v) ↦ Σ c · ∂^α u · ∂^β v` with constant
/// coefficients, keyed by `(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiDiff {
    terms: BTreeMap<(Mono, Mono), Scalar>,
}

impl BiDiff {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `(u, v) ↦ uv`.
    pub fn product() -> Self {
        let mut b = Self::zero();
        b.set([0, 0], [0, 0], Scalar::int(1));
        b
    }

    /// `(u, v) ↦ ∂x u ∂p v − ∂p u ∂x v`.
    pub fn poisson() -> Self {
        let mut b = Self::zero();
        b.set([1, 0], [0, 1], Scalar::int(1));
        b.set([0, 1], [1, 0], Scalar::int(-1));
        b
    }

    pub fn terms(&self) -> &BTreeMap<(Mono, Mono), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, a: Mono, b: Mono) -> Scalar {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, a: Mono, b: Mono, c: Scalar) {
        if c.is_zero() {
            self.terms.remove(&(a, b));
        } else {
            self.terms.insert((a, b), c);
        }
    }

    /// `(u, v) ↦ B(v, u)`.
    pub fn opposite(&self) -> BiDiff {
        BiDiff {
            terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect(),
        }
    }

    pub fn add(&self, o: &BiDiff) -> BiDiff {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            insert(&mut out.terms, *k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &BiDiff) -> BiDiff {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> BiDiff {
        BiDiff {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (*k, a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Drops terms that vanish on polynomials of degree `<= degree`.
    pub fn restrict(&self, degree: u32) -> BiDiff {
        BiDiff {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| mono_degree(a) <= degree && mono_degree(b) <= degree)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn apply(&self, u: &Poly2, v: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ((a, b), c) in &self.terms {
            let (du, dv) = (u.derive(a), v.derive(b));
            if !du.is_zero() && !dv.is_zero() {
                out = out.add(&du.mul(&dv).scale(c));
            }
        }
        out
    }
}

impl fmt::Display for BiDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("({c}) d{:?}⊗d{:?}", a, b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Trilinear operator `Σ c · ∂^α x · ∂^β y · ∂^γ z` with constant coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TriDiff {
    terms: BTreeMap<[Mono; 3], Scalar>,
}

impl TriDiff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<[Mono; 3], Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, k: [Mono; 3], c: Scalar) {
        if !c.is_zero() {
            insert(&mut self.terms, k, c);
        }
    }

    /// `b(inner(x, y), z)` for `slot == 0`, `b(x, inner(y, z))` for `slot == 1`.
    pub fn compose(b: &BiDiff, inner: &BiDiff, slot: usize) -> TriDiff {
        let mut out = TriDiff::zero();
        for ((a, bb), c) in &b.terms {
            let outer_d = if slot == 0 { a } else { bb };
            for ((a2, b2), c2) in &inner.terms {
                let cc = c.clone() * c2.clone();
                for g0 in 0..=outer_d[0] {
                    for g1 in 0..=outer_d[1] {
                        let g = [g0, g1];
                        let rest = sub(outer_d, &g).expect("g <= outer_d");
                        let k = binomial(outer_d[0], g0) * binomial(outer_d[1], g1);
                        let key = if slot == 0 {
                            [add(a2, &g), add(b2, &rest), *bb]
                        } else {
                            [*a, add(a2, &g), add(b2, &rest)]
                        };
                        out.push(key, cc.clone() * Scalar::int(k));
                    }
                }
            }
        }
        out
    }

    /// `(x0, x1, x2) ↦ T(x_{p[0]}, x_{p[1]}, x_{p[2]})`.
    pub fn permuted(&self, p: [usize; 3]) -> TriDiff {
        let mut out = TriDiff::zero();
        for (k, c) in &self.terms {
            let mut key = [[0, 0]; 3];
            for slot in 0..3 {
                key[p[slot]] = k[slot];
            }
            out.push(key, c.clone());
        }
        out
    }

    pub fn add(&self, o: &TriDiff) -> TriDiff {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.push(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TriDiff) -> TriDiff {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TriDiff {
        let mut out = TriDiff::zero();
        for (k, a) in &self.terms {
            out.push(*k, a.clone() * c.clone());
        }
        out
    }

    /// A term that is visible on inputs of degree `<= degree`.
    ///
    /// The operator vanishes on all such triples exactly when this is `None`;
    /// for a returned key `[α, β, γ]` the triple `(x^α, x^β, x^γ)` (read as
    /// monomials) has a nonzero constant term.
    pub fn visible_term(&self, degree: u32) -> Option<[Mono; 3]> {
        self.terms
            .keys()
            .find(|k| k.iter().all(|m| mono_degree(m) <= degree))
            .copied()
    }

    pub fn apply(&self, x: &Poly2, y: &Poly2, z: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for ([a, b, g], c) in &self.terms {
            let dx = x.derive(a);
            if dx.is_zero() {
                continue;
            }
            let dy = y.derive(b);
            let dz = z.derive(g);
            out = out.add(&dx.mul(&dy).mul(&dz).scale(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(Mono, i64)]) -> Poly2 {
        let mut p = Poly2::zero();
        for (m, c) in terms {
            p.add_term(*m, Scalar::int(*c));
        }
        p
    }

    #[test]
    fn derivatives() {
        let f = poly(&[([3, 1], 2), ([0, 2], 1)]);
        assert_eq!(f.derive(&[1, 0]), poly(&[([2, 1], 6)]));
        assert_eq!(f.derive(&[0, 2]), poly(&[([0, 0], 2)]));
        assert_eq!(f.derive(&[4, 0]), Poly2::zero());
    }

    #[test]
    fn poisson_bracket_of_coordinates() {
        let x = poly(&[([1, 0], 1)]);
        let p = poly(&[([0, 1], 1)]);
        assert_eq!(BiDiff::poisson().apply(&x, &p), poly(&[([0, 0], 1)]));
        assert_eq!(BiDiff::poisson().apply(&p, &x), poly(&[([0, 0], -1)]));
    }

    #[test]
    fn composition_matches_evaluation() {
        let b = BiDiff::poisson().add(&BiDiff::product());
        let mut c = BiDiff::zero();
        c.set([2, 0], [0, 1], Scalar::int(3));
        c.set([0, 0], [1, 1], Scalar::int(-1));
        let x = poly(&[([2, 1], 1), ([1, 0], 2)]);
        let y = poly(&[([1, 2], 1), ([0, 1], -1)]);
        let z = poly(&[([3, 0], 1), ([0, 2], 5)]);
        let t0 = TriDiff::compose(&b, &c, 0);
        assert_eq!(t0.apply(&x, &y, &z), b.apply(&c.apply(&x, &y), &z));
        let t1 = TriDiff::compose(&b, &c, 1);
        assert_eq!(t1.apply(&x, &y, &z), b.apply(&x, &c.apply(&y, &z)));
        let t = t1.permuted([1, 0, 2]);
        assert_eq!(t.apply(&x, &y, &z), b.apply(&y, &c.apply(&x, &z)));
    }
}
