use super::Field;
use std::ops::{Add, Mul, Neg, Sub};

/// Power series in `t` truncated modulo `t^N`.
///
/// The order `N` is fixed at construction; products silently drop every
/// term of degree `>= N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncSeries<F> {
    /// Pads with zeros or truncates `coeffs` to exactly `order` entries.
    pub fn new(order: usize, mut coeffs: Vec<F>) -> Self {
        assert!(order > 0, "series order must be positive");
        coeffs.resize(order, F::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: F) -> Self {
        Self::new(order, vec![c])
    }

    /// `c * t^k`, zero if `k >= order`.
    pub fn monomial(order: usize, c: F, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `t`.
    pub fn shift(&self) -> Self {
        let mut coeffs = vec![F::zero()];
        coeffs.extend(self.coeffs[..self.order() - 1].iter().cloned());
        TruncSeries { coeffs }
    }

    /// Division by `t`, `None` when the constant term is nonzero. The top
    /// coefficient of the quotient is unknown mod `t^N` and is set to zero.
    pub fn divide_by_t(&self) -> Option<Self> {
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let mut coeffs: Vec<F> = self.coeffs[1..].to_vec();
        coeffs.push(F::zero());
        Some(TruncSeries { coeffs })
    }

    /// Drops to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs[..order.min(self.order())].to_vec())
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }
}

impl<F: Field> Add for TruncSeries<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check_order(&rhs);
        TruncSeries {
            coeffs: self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<F: Field> Neg for TruncSeries<F> {
    type Output = Self;
    fn neg(self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.into_iter().map(|a| -a).collect(),
        }
    }
}

impl<F: Field> Sub for TruncSeries<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for TruncSeries<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_order(&rhs);
        let n = self.order();
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn ser(cs: &[i64]) -> TruncSeries<Rational> {
        TruncSeries::new(3, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn product_truncates() {
        let a = ser(&[1, 1]);
        assert_eq!(a.clone() * a.clone(), ser(&[1, 2, 1]));
        assert_eq!(a.clone() * a.clone() * a, ser(&[1, 3, 3]));
    }

    #[test]
    fn shifting() {
        let a = ser(&[1, 2, 3]);
        assert_eq!(a.shift(), ser(&[0, 1, 2]));
        assert_eq!(a.divide_by_t(), None);
        assert_eq!(a.shift().divide_by_t(), Some(ser(&[1, 2])));
        assert_eq!(ser(&[5, 6, 7, 8]).order(), 3);
    }
}
