use super::{Free3Error, GeneratorDecl, Shape, Slot, Subspace, Symmetry, Tree};
use crate::linalg;
use crate::scalar::{Field, Scalar};

/// One term `coef * gen(x1, x2)`, or `coef * gen(x2, x1)` when `swapped`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenImage {
    pub coef: Scalar,
    pub gen: usize,
    pub swapped: bool,
}

impl GenImage {
    pub fn new(coef: Scalar, gen: usize, swapped: bool) -> Self {
        GenImage { coef, gen, swapped }
    }
}

/// A generator substitution `E -> E'`: each source generator applied to
/// `(x1, x2)` is sent to a linear combination of target generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSubst {
    pub images: Vec<Vec<GenImage>>,
}

impl Shape {
    /// Arity-2 basis: `gen(x1, x2)` per slot, followed by `gen(x2, x1)` for
    /// generators without symmetry.
    pub fn slot_list(&self) -> Vec<Slot> {
        let mut out = Vec::new();
        for (g, d) in self.gens().iter().enumerate() {
            out.push(Slot { gen: g, flipped: false });
            if d.symmetry == Symmetry::None {
                out.push(Slot { gen: g, flipped: true });
            }
        }
        out
    }

    /// Arity-2 coordinates of `coef * gen(x1, x2)` (or swapped).
    fn arity2_term(&self, t: &GenImage, slots: &[Slot]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); slots.len()];
        let sym = self.gens()[t.gen].symmetry;
        let (flipped, coef) = match (sym, t.swapped) {
            (Symmetry::None, s) => (s, t.coef.clone()),
            (Symmetry::Anti, true) => (false, -t.coef.clone()),
            _ => (false, t.coef.clone()),
        };
        let k = slots
            .iter()
            .position(|s| s.gen == t.gen && s.flipped == flipped)
            .expect("slot exists");
        v[k] = coef;
        v
    }

    /// Splits `Γ(E)(3)` by the parity of the number of brackets in the
    /// polarized basis. Returns `(Γ+, Γ-)`.
    pub fn gamma_split(&self) -> (Subspace, Subspace) {
        let n = self.dim();
        if !self.has_none() {
            let unit = |i: usize| {
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::one();
                v
            };
            let even = (0..n).filter(|&i| self.anti_count(i).is_multiple_of(2)).map(unit);
            let odd = (0..n).filter(|&i| self.anti_count(i) % 2 == 1).map(unit);
            return (
                Subspace::span(n, even).expect("lengths match"),
                Subspace::span(n, odd).expect("lengths match"),
            );
        }
        let pol = Polarization::of(self);
        let back = pol
            .backward
            .arity3_images(&pol.polarized, self)
            .expect("polarization is well formed");
        let ps = &pol.polarized;
        let even = (0..ps.dim())
            .filter(|&i| ps.anti_count(i).is_multiple_of(2))
            .map(|i| back[i].clone());
        let odd = (0..ps.dim())
            .filter(|&i| ps.anti_count(i) % 2 == 1)
            .map(|i| back[i].clone());
        (
            Subspace::span(n, even).expect("lengths match"),
            Subspace::span(n, odd).expect("lengths match"),
        )
    }
}

impl GenSubst {
    pub fn new(images: Vec<Vec<GenImage>>) -> Self {
        GenSubst { images }
    }

    /// Substitutes `q = q0` in every coefficient.
    pub fn specialize(&self, q0: &crate::scalar::Rational) -> Result<Self, crate::scalar::ScalarError> {
        let images = self
            .images
            .iter()
            .map(|imgs| {
                imgs.iter()
                    .map(|im| {
                        Ok(GenImage {
                            coef: im.coef.specialize(q0)?,
                            ..im.clone()
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GenSubst { images })
    }

    /// Expands every node of `t` through the substitution.
    pub fn substitute(&self, t: &Tree) -> Vec<(Scalar, Tree)> {
        match t {
            Tree::Var(v) => vec![(Scalar::one(), Tree::Var(*v))],
            Tree::App(g, l, r) => {
                let ls = self.substitute(l);
                let rs = self.substitute(r);
                let mut out = Vec::new();
                for img in &self.images[*g] {
                    for (cl, tl) in &ls {
                        for (cr, tr) in &rs {
                            let (a, b) = if img.swapped { (tr, tl) } else { (tl, tr) };
                            let c = img.coef.clone() * cl.clone() * cr.clone();
                            out.push((c, Tree::app(img.gen, a.clone(), b.clone())));
                        }
                    }
                }
                out
            }
        }
    }

    /// Row `i` is the image of source basis vector `i` in the target basis.
    pub fn arity3_images(&self, src: &Shape, dst: &Shape) -> Result<Vec<Vec<Scalar>>, Free3Error> {
        if self.images.len() != src.gens().len() {
            return Err(Free3Error::DimensionMismatch(src.gens().len(), self.images.len()));
        }
        for imgs in &self.images {
            if let Some(bad) = imgs.iter().find(|im| im.gen >= dst.gens().len()) {
                return Err(Free3Error::UnknownGenerator(bad.gen));
            }
        }
        (0..src.dim())
            .map(|i| {
                let terms = self.substitute(&src.monomial_tree(i));
                dst.vectorize(terms.iter().map(|(c, t)| (c, t)))
            })
            .collect()
    }

    pub fn apply(&self, src: &Shape, dst: &Shape, v: &[Scalar]) -> Result<Vec<Scalar>, Free3Error> {
        if v.len() != src.dim() {
            return Err(Free3Error::DimensionMismatch(src.dim(), v.len()));
        }
        Ok(combine(&self.arity3_images(src, dst)?, v, dst.dim()))
    }

    /// Rows: images of the source arity-2 basis in the target arity-2 basis.
    pub fn arity2_matrix(&self, src: &Shape, dst: &Shape) -> Vec<Vec<Scalar>> {
        let dslots = dst.slot_list();
        src.slot_list()
            .iter()
            .map(|s| {
                let mut row = vec![Scalar::zero(); dslots.len()];
                for img in &self.images[s.gen] {
                    let term = GenImage {
                        swapped: img.swapped ^ s.flipped,
                        ..img.clone()
                    };
                    for (x, y) in row.iter_mut().zip(dst.arity2_term(&term, &dslots)) {
                        *x = x.clone() + y;
                    }
                }
                row
            })
            .collect()
    }

    /// Checks that images respect the source symmetries and that the map is
    /// invertible on `E`.
    pub fn validate(&self, src: &Shape, dst: &Shape) -> Result<(), Free3Error> {
        if self.images.len() != src.gens().len() {
            return Err(Free3Error::DimensionMismatch(src.gens().len(), self.images.len()));
        }
        let dslots = dst.slot_list();
        for (g, decl) in src.gens().iter().enumerate() {
            if let Some(bad) = self.images[g].iter().find(|im| im.gen >= dst.gens().len()) {
                return Err(Free3Error::UnknownGenerator(bad.gen));
            }
            if decl.symmetry == Symmetry::None {
                continue;
            }
            let sum = |swap: bool| {
                self.images[g].iter().fold(vec![Scalar::zero(); dslots.len()], |acc, im| {
                    let t = GenImage {
                        swapped: im.swapped ^ swap,
                        ..im.clone()
                    };
                    acc.into_iter()
                        .zip(dst.arity2_term(&t, &dslots))
                        .map(|(a, b)| a + b)
                        .collect()
                })
            };
            let straight = sum(false);
            let swapped = sum(true);
            let expected: Vec<Scalar> = if decl.symmetry == Symmetry::Anti {
                straight.iter().map(|c| -c.clone()).collect()
            } else {
                straight
            };
            if swapped != expected {
                return Err(Free3Error::NotEquivariant(decl.name.clone()));
            }
        }
        let m = self.arity2_matrix(src, dst);
        if m.len() != dslots.len() || linalg::rank(&m) != m.len() {
            return Err(Free3Error::NotInvertible);
        }
        Ok(())
    }
}

/// `sum_i v[i] * rows[i]`.
fn combine(rows: &[Vec<Scalar>], v: &[Scalar], dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (c, img) in v.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in out.iter_mut().zip(img) {
            if !y.is_zero() {
                *x = x.clone() + c.clone() * y.clone();
            }
        }
    }
    out
}

/// A shape with generators of type `none` together with its polarized form,
/// where each such `m` becomes a commutative `•` and an anticommutative
/// `[-,-]` with `x.y = (1/sqrt 2)(x•y + [x,y])`.
#[derive(Clone, Debug)]
pub struct Polarization {
    pub source: Shape,
    pub polarized: Shape,
    /// `source -> polarized`.
    pub forward: GenSubst,
    /// `polarized -> source`.
    pub backward: GenSubst,
    forward_rows: Vec<Vec<Scalar>>,
    backward_rows: Vec<Vec<Scalar>>,
}

fn half_u() -> Scalar {
    Scalar::u() * Scalar::rat(1, 2)
}

impl Polarization {
    /// Polarizes every generator of type `none`.
    pub fn of(source: &Shape) -> Self {
        let single = source.gens().len() == 1 && source.has_none();
        let mut gens = Vec::new();
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for (g, d) in source.gens().iter().enumerate() {
            let base = gens.len();
            if d.symmetry == Symmetry::None {
                let (cn, bn) = if single {
                    ("c".to_string(), "b".to_string())
                } else {
                    (format!("{}_c", d.name), format!("{}_b", d.name))
                };
                gens.push(GeneratorDecl {
                    name: cn,
                    symmetry: Symmetry::Comm,
                });
                gens.push(GeneratorDecl {
                    name: bn,
                    symmetry: Symmetry::Anti,
                });
                forward.push(vec![
                    GenImage::new(half_u(), base, false),
                    GenImage::new(half_u(), base + 1, false),
                ]);
                backward.push(vec![GenImage::new(half_u(), g, false), GenImage::new(half_u(), g, true)]);
                backward.push(vec![GenImage::new(half_u(), g, false), GenImage::new(-half_u(), g, true)]);
            } else {
                gens.push(d.clone());
                forward.push(vec![GenImage::new(Scalar::one(), base, false)]);
                backward.push(vec![GenImage::new(Scalar::one(), g, false)]);
            }
        }
        Self::build(source.clone(), Shape::new(gens), GenSubst::new(forward), GenSubst::new(backward))
    }

    fn build(source: Shape, polarized: Shape, forward: GenSubst, backward: GenSubst) -> Self {
        let forward_rows = forward
            .arity3_images(&source, &polarized)
            .expect("polarization images are well formed");
        let backward_rows = backward
            .arity3_images(&polarized, &source)
            .expect("polarization images are well formed");
        Polarization {
            source,
            polarized,
            forward,
            backward,
            forward_rows,
            backward_rows,
        }
    }

    /// Merges each `comm` generator immediately followed by an `anti` one into
    /// a generator of type `none`; `polarized` is the given shape.
    pub fn depolarize(polarized: &Shape) -> Result<Self, Free3Error> {
        let pg = polarized.gens();
        let whole_pair = pg.len() == 2;
        let mut gens: Vec<GeneratorDecl> = Vec::new();
        let mut forward: Vec<Vec<GenImage>> = Vec::new();
        let mut backward: Vec<Vec<GenImage>> = Vec::new();
        let mut i = 0;
        let mut paired = false;
        while i < pg.len() {
            let g = gens.len();
            let is_pair = pg[i].symmetry == Symmetry::Comm
                && pg.get(i + 1).is_some_and(|d| d.symmetry == Symmetry::Anti);
            if is_pair {
                paired = true;
                let (cn, bn) = (&pg[i].name, &pg[i + 1].name);
                let name = match (cn.strip_suffix("_c"), bn.strip_suffix("_b")) {
                    (Some(a), Some(b)) if a == b => a.to_string(),
                    _ if whole_pair => "m".to_string(),
                    _ => format!("{cn}_{bn}"),
                };
                gens.push(GeneratorDecl {
                    name,
                    symmetry: Symmetry::None,
                });
                forward.push(vec![
                    GenImage::new(half_u(), i, false),
                    GenImage::new(half_u(), i + 1, false),
                ]);
                backward.push(vec![GenImage::new(half_u(), g, false), GenImage::new(half_u(), g, true)]);
                backward.push(vec![GenImage::new(half_u(), g, false), GenImage::new(-half_u(), g, true)]);
                i += 2;
            } else {
                gens.push(pg[i].clone());
                forward.push(vec![GenImage::new(Scalar::one(), i, false)]);
                backward.push(vec![GenImage::new(Scalar::one(), g, false)]);
                i += 1;
            }
        }
        if !paired {
            let name = pg.first().map(|d| d.name.clone()).unwrap_or_default();
            return Err(Free3Error::NotPolarized(name));
        }
        Ok(Self::build(
            Shape::new(gens),
            polarized.clone(),
            GenSubst::new(forward),
            GenSubst::new(backward),
        ))
    }

    pub fn polarize_vector(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Free3Error> {
        if v.len() != self.source.dim() {
            return Err(Free3Error::DimensionMismatch(self.source.dim(), v.len()));
        }
        Ok(combine(&self.forward_rows, v, self.polarized.dim()))
    }

    pub fn depolarize_vector(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Free3Error> {
        if v.len() != self.polarized.dim() {
            return Err(Free3Error::DimensionMismatch(self.polarized.dim(), v.len()));
        }
        Ok(combine(&self.backward_rows, v, self.source.dim()))
    }

    pub fn polarize_subspace(&self, s: &Subspace) -> Result<Subspace, Free3Error> {
        s.map(&self.forward_rows, self.polarized.dim())
    }

    pub fn depolarize_subspace(&self, s: &Subspace) -> Result<Subspace, Free3Error> {
        s.map(&self.backward_rows, self.source.dim())
    }
}
