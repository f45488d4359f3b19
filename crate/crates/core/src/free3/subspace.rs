use super::{Free3Error, SignedPerm};
use crate::linalg;
use crate::scalar::{Field, Scalar};

/// A subspace of `Scalar^dim` stored as its reduced row echelon basis.
///
/// The representation is canonical, so two subspaces are equal exactly when
/// their bases compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

fn check_len(expected: usize, got: usize) -> Result<(), Free3Error> {
    if expected == got {
        Ok(())
    } else {
        Err(Free3Error::DimensionMismatch(expected, got))
    }
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut r = vec![Scalar::zero(); dim];
                r[i] = Scalar::one();
                r
            })
            .collect();
        Subspace {
            dim,
            rows,
            pivots: (0..dim).collect(),
        }
    }

    pub fn span<I>(dim: usize, vectors: I) -> Result<Self, Free3Error>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            check_len(dim, v.len())?;
            if v.iter().any(|c| !c.is_zero()) {
                rows.push(v);
            }
        }
        let pivots = linalg::rref(&mut rows);
        Ok(Subspace { dim, rows, pivots })
    }

    /// The smallest subspace containing `vectors` and stable under `group`.
    pub fn closure<I>(dim: usize, vectors: I, group: &[SignedPerm]) -> Result<Self, Free3Error>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut s = Self::span(dim, vectors)?;
        loop {
            let mut grown = s.rows.clone();
            for g in group {
                check_len(dim, g.dim())?;
                grown.extend(s.rows.iter().map(|r| g.apply(r)));
            }
            let next = Self::span(dim, grown)?;
            if next.rank() == s.rank() {
                return Ok(s);
            }
            s = next;
        }
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Free3Error> {
        check_len(self.dim, v.len())?;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Free3Error> {
        Ok(self.reduce(v)?.iter().all(|c| c.is_zero()))
    }

    /// Coordinates of the class of `v` in the quotient by `self`, in the basis
    /// given by the non-pivot coordinate vectors.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Free3Error> {
        let r = self.reduce(v)?;
        Ok(r
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !self.pivots.contains(i))
            .map(|(_, c)| c)
            .collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, Free3Error> {
        check_len(self.dim, other.dim)?;
        for r in &other.rows {
            if !self.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Free3Error> {
        check_len(self.dim, other.dim)?;
        Self::span(self.dim, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Intersection by the Zassenhaus algorithm.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Free3Error> {
        check_len(self.dim, other.dim)?;
        let n = self.dim;
        let zero = vec![Scalar::zero(); n];
        let mut m: Vec<Vec<Scalar>> = self
            .rows
            .iter()
            .map(|r| [r.clone(), r.clone()].concat())
            .chain(other.rows.iter().map(|r| [r.clone(), zero.clone()].concat()))
            .collect();
        linalg::rref(&mut m);
        let meet = m
            .into_iter()
            .filter(|r| r[..n].iter().all(|c| c.is_zero()))
            .map(|r| r[n..].to_vec());
        Self::span(n, meet)
    }

    /// Whether `g` maps the subspace into itself.
    pub fn is_invariant(&self, g: &SignedPerm) -> Result<bool, Free3Error> {
        check_len(self.dim, g.dim())?;
        for r in &self.rows {
            if !self.contains(&g.apply(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First basis vector whose image under `g` leaves the subspace.
    pub fn invariance_witness(&self, g: &SignedPerm) -> Result<Option<Vec<Scalar>>, Free3Error> {
        check_len(self.dim, g.dim())?;
        for r in &self.rows {
            let img = g.apply(r);
            if !self.contains(&img)? {
                return Ok(Some(img));
            }
        }
        Ok(None)
    }

    /// Image under a linear map given by the images of basis vectors.
    pub fn map(&self, images: &[Vec<Scalar>], target_dim: usize) -> Result<Subspace, Free3Error> {
        check_len(self.dim, images.len())?;
        let mut out = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut v = vec![Scalar::zero(); target_dim];
            for (c, img) in r.iter().zip(images) {
                if c.is_zero() {
                    continue;
                }
                check_len(target_dim, img.len())?;
                for (x, y) in v.iter_mut().zip(img) {
                    if !y.is_zero() {
                        *x = x.clone() + c.clone() * y.clone();
                    }
                }
            }
            out.push(v);
        }
        Self::span(target_dim, out)
    }

    /// Coordinate-wise specialization of every basis vector.
    pub fn map_scalars<F>(&self, f: F) -> Result<Subspace, crate::scalar::ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, crate::scalar::ScalarError>,
    {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::span(self.dim, rows).expect("lengths preserved"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(3, vec![v(&[0, 1, 0])]).unwrap());
        assert_eq!(a.sum(&b).unwrap(), Subspace::whole(3));
        assert!(matches!(
            a.intersect(&Subspace::zero(2)),
            Err(Free3Error::DimensionMismatch(3, 2))
        ));
    }

    #[test]
    fn closure_under_cyclic_shift() {
        let shift = SignedPerm::new(vec![(1, 1), (2, 1), (0, 1)]);
        let s = Subspace::closure(3, vec![v(&[1, -1, 0])], std::slice::from_ref(&shift)).unwrap();
        assert_eq!(s.rank(), 2);
        assert!(s.is_invariant(&shift).unwrap());
        assert!(!s.contains(&v(&[1, 1, 1])).unwrap());
        let trivial = Subspace::closure(3, vec![v(&[1, -1, 0])], &[]).unwrap();
        assert_eq!(trivial.rank(), 1);
    }

    #[test]
    fn quotient_coordinates() {
        let s = Subspace::span(3, vec![v(&[1, 1, 0])]).unwrap();
        assert_eq!(s.quotient_coords(&v(&[1, 0, 0])).unwrap(), v(&[-1, 0]));
        assert_eq!(s.quotient_coords(&v(&[2, 2, 0])).unwrap(), v(&[0, 0]));
    }
}
