use super::{fmt_rational, int, rational_sqrt, Field, Poly, RatFunc, Rational, ScalarError};
use crate::linalg;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Element `c00 + c10*u + c01*v + c11*u*v` of `Q(q)[u, v]` with `u^2 = 2`,
/// `v^2 = q`.
///
/// Components are canonical rational functions, so structural equality and
/// hashing agree with equality of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    c: [RatFunc; 4],
}

const ONE: usize = 0;
const U: usize = 1;
const V: usize = 2;
const UV: usize = 3;

impl Scalar {
    pub fn from_components(c00: RatFunc, c10: RatFunc, c01: RatFunc, c11: RatFunc) -> Self {
        Scalar {
            c: [c00, c10, c01, c11],
        }
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        Self::from_components(f, RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_ratfunc(RatFunc::constant(r))
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Self::from_rational(super::rat(n, d))
    }

    /// `sqrt(2)`.
    pub fn u() -> Self {
        let mut s = Self::zero();
        s.c[U] = RatFunc::one();
        s
    }

    /// `sqrt(q)`.
    pub fn v() -> Self {
        let mut s = Self::zero();
        s.c[V] = RatFunc::one();
        s
    }

    pub fn q() -> Self {
        Self::from_ratfunc(RatFunc::q())
    }

    /// The components `(c00, c10, c01, c11)`.
    pub fn components(&self) -> &[RatFunc; 4] {
        &self.c
    }

    fn is_base(&self) -> bool {
        self.c[U].is_zero() && self.c[V].is_zero() && self.c[UV].is_zero()
    }

    /// The value as a rational function of `q`, if it involves neither `u` nor `v`.
    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        self.is_base().then_some(&self.c[ONE])
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_ratfunc().and_then(|f| f.as_rational())
    }

    /// True when no component depends on `q` and `v` does not occur.
    pub fn is_q_free(&self) -> bool {
        self.c[V].is_zero() && self.c[UV].is_zero() && self.c.iter().all(|f| f.is_constant())
    }

    pub fn powi(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 {
            self.inv().ok_or(ScalarError::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        Ok(acc)
    }

    /// Substitutes `q = q0` and `v = sqrt(q0)`; the result no longer depends on `q`.
    pub fn specialize(&self, q0: &Rational) -> Result<Self, ScalarError> {
        let vals = self
            .c
            .iter()
            .map(|f| f.eval(q0))
            .collect::<Result<Vec<_>, _>>()?;
        let [a, b, c, d]: [Rational; 4] = vals.try_into().expect("four components");
        let zero = int(0);
        if c == zero && d == zero {
            return Ok(Self::from_components(
                RatFunc::constant(a),
                RatFunc::constant(b),
                RatFunc::zero(),
                RatFunc::zero(),
            ));
        }
        let r = rational_sqrt(q0).ok_or_else(|| ScalarError::IrrationalSqrt(fmt_rational(q0)))?;
        Ok(Self::from_components(
            RatFunc::constant(a + c * &r),
            RatFunc::constant(b + d * &r),
            RatFunc::zero(),
            RatFunc::zero(),
        ))
    }

    /// The matrix of `x -> self * x` in the basis `1, u, v, uv`.
    fn mul_matrix(&self) -> Vec<Vec<RatFunc>> {
        let [a0, a1, a2, a3] = self.c.clone();
        let two = RatFunc::constant(int(2));
        let q = RatFunc::q();
        vec![
            vec![
                a0.clone(),
                two.clone() * a1.clone(),
                q.clone() * a2.clone(),
                two.clone() * q.clone() * a3.clone(),
            ],
            vec![a1.clone(), a0.clone(), q.clone() * a3.clone(), q * a2.clone()],
            vec![a2.clone(), two.clone() * a3.clone(), a0.clone(), two * a1.clone()],
            vec![a3, a2, a1, a0],
        ]
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<RatFunc> for Scalar {
    fn from(f: RatFunc) -> Self {
        Self::from_ratfunc(f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl Add for Scalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Scalar {
            c: [a0 + b0, a1 + b1, a2 + b2, a3 + b3],
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Self) {
        *self = std::mem::replace(self, Self::zero()) + rhs;
    }
}

impl Neg for Scalar {
    type Output = Self;
    fn neg(self) -> Self {
        Scalar {
            c: self.c.map(|f| -f),
        }
    }
}

impl Sub for Scalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_base() {
            let a = &self.c[ONE];
            return Scalar {
                c: rhs.c.map(|f| a.clone() * f),
            };
        }
        if rhs.is_base() {
            let b = &rhs.c[ONE];
            return Scalar {
                c: self.c.map(|f| f * b.clone()),
            };
        }
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        let two = RatFunc::constant(int(2));
        let q = RatFunc::q();
        let c0 = a0.clone() * b0.clone()
            + two.clone() * a1.clone() * b1.clone()
            + q.clone() * a2.clone() * b2.clone()
            + two.clone() * q.clone() * a3.clone() * b3.clone();
        let c1 = a0.clone() * b1.clone()
            + a1.clone() * b0.clone()
            + q * (a2.clone() * b3.clone() + a3.clone() * b2.clone());
        let c2 = a0.clone() * b2.clone()
            + a2.clone() * b0.clone()
            + two * (a1.clone() * b3.clone() + a3.clone() * b1.clone());
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Scalar {
            c: [c0, c1, c2, c3],
        }
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Self::from_ratfunc(RatFunc::zero())
    }
    fn one() -> Self {
        Self::from_ratfunc(RatFunc::one())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|f| f.is_zero())
    }
    fn inv(&self) -> Option<Self> {
        if self.is_base() {
            return self.c[ONE].inv().map(Self::from_ratfunc);
        }
        let rhs = [RatFunc::one(), RatFunc::zero(), RatFunc::zero(), RatFunc::zero()];
        let x = linalg::solve(&self.mul_matrix(), &rhs)?;
        let [x0, x1, x2, x3]: [RatFunc; 4] = x.try_into().expect("four components");
        Some(Self::from_components(x0, x1, x2, x3))
    }
}

/// Formats a component coefficient in front of a monomial.
fn fmt_coeff(f: &RatFunc, mono: &str) -> String {
    if f.is_one() {
        return mono.to_string();
    }
    if (-f.clone()).is_one() {
        return format!("-{mono}");
    }
    let s = f.to_string();
    let atomic = s
        .trim_start_matches('-')
        .chars()
        .all(|ch| ch.is_ascii_digit() || matches!(ch, 'q' | '*' | '^'));
    if atomic {
        format!("{s}*{mono}")
    } else {
        format!("({s})*{mono}")
    }
}

impl fmt::Display for Scalar {
    /// Renders e.g. `(q-1)/(q+3) + (1/2)*u`; parsable by the relation grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos = ["", "u", "v", "u*v"];
        let terms: Vec<String> = self
            .c
            .iter()
            .zip(monos)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| if m.is_empty() { c.to_string() } else { fmt_coeff(c, m) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Polynomial in an auxiliary unknown with [`Scalar`] coefficients.
pub type ScalarPoly = Poly<Scalar>;

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn u_squared_relation() {
        let u = Scalar::u();
        assert_eq!((s(1) + u.clone()) * (s(1) - u.clone()), s(-1));
        let half_u = u * Scalar::rat(1, 2);
        assert_eq!(half_u.clone() * half_u * s(2), s(1));
    }

    #[test]
    fn inverse_of_v() {
        let v = Scalar::v();
        let expect = v.clone() * Scalar::q().inv().unwrap();
        assert_eq!(v.inv().unwrap(), expect);
        assert_eq!(Scalar::zero().inv(), None);
        assert_eq!(s(1).div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let a = s(1) + Scalar::u() + Scalar::v() * s(3) + Scalar::u() * Scalar::v();
        assert_eq!(a.clone() * a.inv().unwrap(), s(1));
    }

    #[test]
    fn specialization() {
        assert_eq!(Scalar::v().specialize(&int(4)).unwrap(), s(2));
        let f = (Scalar::q() - s(1)).div(&(Scalar::q() + s(3))).unwrap();
        assert_eq!(f.specialize(&int(1)).unwrap(), s(0));
        let g = s(1).div(&(Scalar::q() + s(3))).unwrap();
        assert!(matches!(g.specialize(&int(-3)), Err(ScalarError::Pole(_))));
        assert!(matches!(
            Scalar::v().specialize(&int(2)),
            Err(ScalarError::IrrationalSqrt(_))
        ));
        assert_eq!(Scalar::u().specialize(&int(2)).unwrap(), Scalar::u());
    }

    #[test]
    fn rendering() {
        let f = (Scalar::q() - s(1)).div(&(Scalar::q() + s(3))).unwrap();
        let x = f + Scalar::u() * Scalar::rat(1, 2);
        assert_eq!(x.to_string(), "(q-1)/(q+3) + (1/2)*u");
        assert_eq!((Scalar::u() * Scalar::v()).to_string(), "u*v");
        assert_eq!((-Scalar::v()).to_string(), "-v");
        assert_eq!((Scalar::u() * s(3)).to_string(), "3*u");
        assert_eq!((Scalar::u() * Scalar::q()).to_string(), "q*u");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn powers() {
        assert_eq!(Scalar::u().powi(4).unwrap(), s(4));
        assert_eq!(Scalar::u().powi(-2).unwrap(), Scalar::rat(1, 2));
        assert_eq!(Scalar::v().powi(0).unwrap(), s(1));
    }
}
