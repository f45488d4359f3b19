//! Multilinear maps `V^{⊗m} -> V^{⊗n}` on a small exact `V` and the
//! compositions `∘_i^j`, the signed sum `∘`, its commutator and the master
//! equation for infinitesimal bialgebras.

mod suites;

pub use suites::{alternating_associator, catalogue, master_samples, run_suites, SuiteReport};

use crate::scalar::{int, Rational};
use num_traits::{One, Zero};
use rand::Rng;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MlabError {
    #[error("index out of range: input {i} of {inputs}, output {j} of {outputs}")]
    IndexOutOfRange { i: usize, inputs: usize, j: usize, outputs: usize },
    #[error("base dimensions differ: {0} vs {1}")]
    BaseMismatch(usize, usize),
    #[error("expected a map {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
}

/// A map `V^{⊗ins} -> V^{⊗outs}` with `dim V = d`, stored densely; the entry
/// for outputs `o` and inputs `i` is the coefficient of `e_o` in `f(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiMap {
    d: usize,
    ins: usize,
    outs: usize,
    coeffs: Vec<Rational>,
}

fn flat(d: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &k| acc * d + k)
}

fn unflat(d: usize, mut n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = n % d;
        n /= d;
    }
    out
}

impl MultiMap {
    pub fn zero(d: usize, ins: usize, outs: usize) -> Self {
        assert!(d >= 1 && ins >= 1 && outs >= 1, "arities start at 1");
        MultiMap {
            d,
            ins,
            outs,
            coeffs: vec![Rational::zero(); d.pow((ins + outs) as u32)],
        }
    }

    pub fn from_fn(d: usize, ins: usize, outs: usize, mut f: impl FnMut(&[usize], &[usize]) -> Rational) -> Self {
        let mut m = Self::zero(d, ins, outs);
        for n in 0..m.coeffs.len() {
            let (o, i) = m.split(n);
            m.coeffs[n] = f(&o, &i);
        }
        m
    }

    pub fn identity(d: usize) -> Self {
        Self::from_fn(d, 1, 1, |o, i| if o == i { Rational::one() } else { Rational::zero() })
    }

    /// Integer entries drawn from `-range..=range`.
    pub fn random<R: Rng>(rng: &mut R, d: usize, ins: usize, outs: usize, range: i64) -> Self {
        Self::from_fn(d, ins, outs, |_, _| int(rng.gen_range(-range..=range)))
    }

    pub fn base_dim(&self) -> usize {
        self.d
    }

    pub fn ins(&self) -> usize {
        self.ins
    }

    pub fn outs(&self) -> usize {
        self.outs
    }

    pub fn shape(&self) -> String {
        format!("{} -> {}", self.ins, self.outs)
    }

    fn split(&self, n: usize) -> (Vec<usize>, Vec<usize>) {
        let w = self.d.pow(self.ins as u32);
        (unflat(self.d, n / w, self.outs), unflat(self.d, n % w, self.ins))
    }

    fn index(&self, outs: &[usize], ins: &[usize]) -> usize {
        flat(self.d, outs) * self.d.pow(self.ins as u32) + flat(self.d, ins)
    }

    pub fn get(&self, outs: &[usize], ins: &[usize]) -> &Rational {
        &self.coeffs[self.index(outs, ins)]
    }

    pub fn set(&mut self, outs: &[usize], ins: &[usize], c: Rational) {
        let n = self.index(outs, ins);
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MultiMap {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    fn same_shape(&self, other: &Self) -> Result<(), MlabError> {
        if self.d != other.d {
            return Err(MlabError::BaseMismatch(self.d, other.d));
        }
        if (self.ins, self.outs) != (other.ins, other.outs) {
            return Err(MlabError::ShapeMismatch {
                expected: self.shape(),
                got: other.shape(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MlabError> {
        self.same_shape(other)?;
        Ok(MultiMap {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MlabError> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    /// `p^{-1} f p` on every line: inputs through `p`, outputs through `p_inv`.
    pub fn conjugate(&self, p: &[Vec<Rational>], p_inv: &[Vec<Rational>]) -> Self {
        let mut cur = self.clone();
        for line in 0..self.ins {
            cur = cur.transform_line(false, line, p);
        }
        for line in 0..self.outs {
            cur = cur.transform_line(true, line, p_inv);
        }
        cur
    }

    /// Precomposes input `line` with `m`, or postcomposes output `line`.
    fn transform_line(&self, output: bool, line: usize, m: &[Vec<Rational>]) -> Self {
        Self::from_fn(self.d, self.ins, self.outs, |o, i| {
            let mut s = Rational::zero();
            for k in 0..self.d {
                let (o2, i2, c) = if output {
                    let mut o2 = o.to_vec();
                    o2[line] = k;
                    (o2, i.to_vec(), &m[o[line]][k])
                } else {
                    let mut i2 = i.to_vec();
                    i2[line] = k;
                    (o.to_vec(), i2, &m[k][i[line]])
                };
                if !c.is_zero() {
                    s += c * self.get(&o2, &i2);
                }
            }
            s
        })
    }
}

impl fmt::Display for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.shape())?;
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| {
                let (o, i) = self.split(n);
                let s = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<String>();
                format!("{c}·e{}<-e{}", s(&o), s(&i))
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Output `j` of `g` fed into input `i` of `f` (both 1-based). Inputs of the
/// result: those of `f` before `i`, all of `g`, those of `f` after `i`.
/// Outputs: those of `g` before `j`, all of `f`, those of `g` after `j`.
pub fn comp_ij(f: &MultiMap, g: &MultiMap, i: usize, j: usize) -> Result<MultiMap, MlabError> {
    if f.d != g.d {
        return Err(MlabError::BaseMismatch(f.d, g.d));
    }
    if i < 1 || i > f.ins || j < 1 || j > g.outs {
        return Err(MlabError::IndexOutOfRange {
            i,
            inputs: f.ins,
            j,
            outputs: g.outs,
        });
    }
    let (i, j) = (i - 1, j - 1);
    let d = f.d;
    Ok(MultiMap::from_fn(d, f.ins + g.ins - 1, f.outs + g.outs - 1, |o, inp| {
        let g_in = &inp[i..i + g.ins];
        let mut f_in: Vec<usize> = inp[..i].to_vec();
        f_in.push(0);
        f_in.extend_from_slice(&inp[i + g.ins..]);
        let f_out = &o[j..j + f.outs];
        let mut g_out: Vec<usize> = o[..j].to_vec();
        g_out.push(0);
        g_out.extend_from_slice(&o[j + f.outs..]);
        let mut s = Rational::zero();
        for k in 0..d {
            f_in[i] = k;
            g_out[j] = k;
            let a = f.get(f_out, &f_in);
            if a.is_zero() {
                continue;
            }
            s += a * g.get(&g_out, g_in);
        }
        s
    }))
}

/// Sign rule for the total composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Signs {
    /// `(-1)^{i(b+1) + j(c+1)}` with `b` the inputs of `f` and `c` the
    /// outputs of `g`.
    #[default]
    Koszul,
    /// Every `f ∘_i^j g` with coefficient `+1`.
    Unsigned,
}

impl Signs {
    fn negative(self, i: usize, j: usize, b: usize, c: usize) -> bool {
        match self {
            Signs::Koszul => (i * (b + 1) + j * (c + 1)) % 2 == 1,
            Signs::Unsigned => false,
        }
    }
}

/// `Σ ± f ∘_i^j g` over `1 <= i <= b`, `1 <= j <= c`.
pub fn circ_with(f: &MultiMap, g: &MultiMap, signs: Signs) -> Result<MultiMap, MlabError> {
    let (b, c) = (f.ins, g.outs);
    let mut acc = MultiMap::zero(f.d, f.ins + g.ins - 1, f.outs + g.outs - 1);
    for i in 1..=b {
        for j in 1..=c {
            let t = comp_ij(f, g, i, j)?;
            let t = if signs.negative(i, j, b, c) {
                t.scale(&-Rational::one())
            } else {
                t
            };
            acc = acc.try_add(&t)?;
        }
    }
    Ok(acc)
}

pub fn circ(f: &MultiMap, g: &MultiMap) -> Result<MultiMap, MlabError> {
    circ_with(f, g, Signs::Koszul)
}

pub fn bracket(f: &MultiMap, g: &MultiMap) -> Result<MultiMap, MlabError> {
    circ(f, g)?.try_sub(&circ(g, f)?)
}

/// `(f ∘ g) ∘ h - f ∘ (g ∘ h)`.
pub fn associator(f: &MultiMap, g: &MultiMap, h: &MultiMap) -> Result<MultiMap, MlabError> {
    associator_with(f, g, h, Signs::Koszul)
}

pub fn associator_with(f: &MultiMap, g: &MultiMap, h: &MultiMap, signs: Signs) -> Result<MultiMap, MlabError> {
    let c = |a: &MultiMap, b: &MultiMap| circ_with(a, b, signs);
    c(&c(f, g)?, h)?.try_sub(&c(f, &c(g, h)?)?)
}

/// Graded components of `(μ + δ) ∘ (μ + δ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MasterResidual {
    /// `μ ∘ μ`, a map `3 -> 1`.
    pub mu_mu: MultiMap,
    /// `μ ∘ δ + δ ∘ μ`, a map `2 -> 2`.
    pub mixed: MultiMap,
    /// `δ ∘ δ`, a map `1 -> 3`.
    pub delta_delta: MultiMap,
}

impl MasterResidual {
    pub fn is_zero(&self) -> bool {
        self.mu_mu.is_zero() && self.mixed.is_zero() && self.delta_delta.is_zero()
    }
}

fn expect_shape(m: &MultiMap, ins: usize, outs: usize) -> Result<(), MlabError> {
    if (m.ins, m.outs) == (ins, outs) {
        Ok(())
    } else {
        Err(MlabError::ShapeMismatch {
            expected: format!("{ins} -> {outs}"),
            got: m.shape(),
        })
    }
}

/// The commutator `[x, x] = x∘x - x∘x` vanishes identically, so the master
/// equation is read on `x ∘ x` with `x = μ + δ`, one component per arity.
pub fn master_residual(mu: &MultiMap, delta: &MultiMap) -> Result<MasterResidual, MlabError> {
    expect_shape(mu, 2, 1)?;
    expect_shape(delta, 1, 2)?;
    Ok(MasterResidual {
        mu_mu: circ(mu, mu)?,
        mixed: circ(mu, delta)?.try_add(&circ(delta, mu)?)?,
        delta_delta: circ(delta, delta)?,
    })
}

/// The three infinitesimal-bialgebra axioms evaluated on basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct BialgebraDefects {
    /// `μ(μ(u,v),w) - μ(u,μ(v,w))`.
    pub associativity: MultiMap,
    /// `(δ ⊗ 1)δ - (1 ⊗ δ)δ`.
    pub coassociativity: MultiMap,
    /// `δμ(u,v) - δ_(1)(u) ⊗ μ(δ_(2)(u),v) - μ(u,δ_(1)(v)) ⊗ δ_(2)(v)`.
    pub compatibility: MultiMap,
}

impl BialgebraDefects {
    pub fn is_zero(&self) -> bool {
        self.associativity.is_zero() && self.coassociativity.is_zero() && self.compatibility.is_zero()
    }
}

pub fn bialgebra_defects(mu: &MultiMap, delta: &MultiMap) -> Result<BialgebraDefects, MlabError> {
    expect_shape(mu, 2, 1)?;
    expect_shape(delta, 1, 2)?;
    let d = mu.d;
    if delta.d != d {
        return Err(MlabError::BaseMismatch(d, delta.d));
    }
    let m = |k: usize, a: usize, b: usize| mu.get(&[k], &[a, b]);
    let dl = |a: usize, b: usize, k: usize| delta.get(&[a, b], &[k]);
    let sum = |f: &dyn Fn(usize) -> Rational| (0..d).map(f).fold(Rational::zero(), |s, x| s + x);
    let associativity = MultiMap::from_fn(d, 3, 1, |o, i| {
        let (u, v, w) = (i[0], i[1], i[2]);
        sum(&|l| m(l, u, v) * m(o[0], l, w)) - sum(&|l| m(l, v, w) * m(o[0], u, l))
    });
    let coassociativity = MultiMap::from_fn(d, 1, 3, |o, i| {
        let (a, b, c) = (o[0], o[1], o[2]);
        sum(&|l| dl(l, c, i[0]) * dl(a, b, l)) - sum(&|l| dl(a, l, i[0]) * dl(b, c, l))
    });
    let compatibility = MultiMap::from_fn(d, 2, 2, |o, i| {
        let (a, b, u, v) = (o[0], o[1], i[0], i[1]);
        let lhs = sum(&|l| m(l, u, v) * dl(a, b, l));
        let left = sum(&|l| dl(a, l, u) * m(b, l, v));
        let right = sum(&|l| dl(l, b, v) * m(a, u, l));
        lhs - left - right
    });
    Ok(BialgebraDefects {
        associativity,
        coassociativity,
        compatibility,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn composition_arities() {
        let f = MultiMap::zero(1, 6, 3);
        let g = MultiMap::zero(1, 5, 5);
        let h = comp_ij(&f, &g, 4, 3).unwrap();
        assert_eq!((h.ins(), h.outs()), (10, 7));
        assert!(matches!(comp_ij(&f, &g, 7, 1), Err(MlabError::IndexOutOfRange { .. })));
        assert!(matches!(comp_ij(&f, &g, 1, 6), Err(MlabError::IndexOutOfRange { .. })));
    }

    #[test]
    fn identity_contraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (ins, outs) in [(1, 1), (2, 1), (3, 2), (2, 3)] {
            let f = MultiMap::random(&mut rng, 2, ins, outs, 3);
            assert_eq!(comp_ij(&f, &MultiMap::identity(2), 1, 1).unwrap(), f);
            assert_eq!(comp_ij(&MultiMap::identity(2), &f, 1, 1).unwrap(), f);
        }
    }

    #[test]
    fn one_dimensional_scalars_multiply() {
        let f = MultiMap::from_fn(1, 2, 2, |_, _| int(3));
        let g = MultiMap::from_fn(1, 1, 3, |_, _| int(-5));
        let h = comp_ij(&f, &g, 2, 2).unwrap();
        assert_eq!(h.get(&[0; 4], &[0; 2]), &int(-15));
    }

    #[test]
    fn shapes_checked() {
        let mu = MultiMap::zero(2, 2, 1);
        assert!(master_residual(&mu, &mu).is_err());
        assert!(MultiMap::zero(2, 1, 1).try_add(&MultiMap::zero(3, 1, 1)).is_err());
    }

    #[test]
    fn conjugation_by_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = MultiMap::random(&mut rng, 2, 2, 2, 3);
        let id = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        assert_eq!(f.conjugate(&id, &id), f);
    }
}
