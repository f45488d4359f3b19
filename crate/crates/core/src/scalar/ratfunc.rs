use super::{fmt_rational, Field, Poly, Rational, ScalarError};
use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of `Q(q)`: a reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    /// Builds `num / den` in canonical form.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        if den.is_constant() {
            let c = den.coeff(0).recip();
            return RatFunc {
                num: num.scale(&c),
                den: Poly::one(),
            };
        }
        let g = rational_gcd(&num, &den);
        let (mut n, mut d) = (num, den);
        if !g.is_constant() {
            n = n.div_rem(&g).expect("gcd is nonzero").0;
            d = d.div_rem(&g).expect("gcd is nonzero").0;
        }
        let lc = d.leading().expect("nonzero denominator").recip();
        RatFunc {
            num: n.scale(&lc),
            den: d.scale(&lc),
        }
    }

    /// `num / den` for coprime inputs: only the leading coefficient is fixed.
    fn normalized(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        let lc = den.leading().expect("nonzero denominator").recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(num: Poly<Rational>) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The rational value if this does not depend on `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    /// Substitutes `q = at`.
    pub fn eval(&self, at: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(at);
        if Zero::is_zero(&d) {
            return Err(ScalarError::Pole(fmt_rational(at)));
        }
        Ok(self.num.eval(at) / d)
    }
}

/// Scales a rational polynomial to a primitive integer one, returning the
/// factor `c` with `p = c * primitive`.
fn primitive_part(p: &Poly<Rational>) -> (Rational, Vec<BigInt>) {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let g = if g.is_zero() { BigInt::one() } else { g };
    let ints = ints.into_iter().map(|c| c / &g).collect();
    (Rational::new(g, lcm), ints)
}

fn int_content_free(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
    p
}

/// `lc(b)^k * a mod b` over the integers, for the `k` that keeps it integral.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r.pop();
        r = int_content_free(r);
    }
    r
}

fn exact_div(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    if b.is_constant() {
        return a.scale(&b.coeff(0).recip());
    }
    a.div_rem(b).expect("nonzero divisor").0
}

/// Monic gcd of rational polynomials through a primitive remainder sequence
/// over the integers, which keeps coefficient growth in check.
fn rational_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    let (mut x, mut y) = (int_content_free(primitive_part(a).1), int_content_free(primitive_part(b).1));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = r;
    }
    Poly::new(x.into_iter().map(Rational::from_integer).collect()).monic()
}

fn fmt_int_poly(cs: &[BigInt]) -> String {
    let mut out = String::new();
    for (deg, c) in cs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match deg {
            0 => String::new(),
            1 => "q".to_string(),
            d => format!("q^{d}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl fmt::Display for RatFunc {
    /// Integer-coefficient form, e.g. `(q-1)/(q+3)` or `-1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_rational() {
            return write!(f, "{}", fmt_rational(&c));
        }
        let (cn, n) = primitive_part(&self.num);
        let (cd, d) = primitive_part(&self.den);
        let c = cn / cd;
        let scaled_num: Vec<BigInt> = n.iter().map(|x| x * c.numer()).collect();
        let den_scale = c.denom();
        let num_s = fmt_int_poly(&scaled_num);
        let num_s = if scaled_num.iter().filter(|x| !x.is_zero()).count() > 1 {
            format!("({num_s})")
        } else {
            num_s
        };
        if d.len() == 1 {
            if den_scale.is_one() {
                write!(f, "{num_s}")
            } else {
                write!(f, "{num_s}/{den_scale}")
            }
        } else {
            let scaled_den: Vec<BigInt> = d.iter().map(|x| x * den_scale).collect();
            write!(f, "{num_s}/({})", fmt_int_poly(&scaled_den))
        }
    }
}

impl Add for RatFunc {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            if self.den.is_constant() {
                return Self::from_poly(self.num + rhs.num);
            }
            return Self::reduce(self.num + rhs.num, self.den);
        }
        let g = rational_gcd(&self.den, &rhs.den);
        if g.is_constant() {
            let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
            return Self::reduce(num, self.den * rhs.den);
        }
        let (a, b) = (exact_div(&self.den, &g), exact_div(&rhs.den, &g));
        let num = self.num * b.clone() + rhs.num * a.clone();
        if num.is_zero() {
            return Self::zero();
        }
        let h = rational_gcd(&num, &g);
        let (num, g) = (exact_div(&num, &h), exact_div(&g, &h));
        Self::normalized(num, a * b * g)
    }
}

impl Neg for RatFunc {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RatFunc {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return Self::from_poly(self.num * rhs.num);
        }
        let g1 = rational_gcd(&self.num, &rhs.den);
        let g2 = rational_gcd(&rhs.num, &self.den);
        let num = exact_div(&self.num, &g1) * exact_div(&rhs.num, &g2);
        let den = exact_div(&self.den, &g2) * exact_div(&rhs.den, &g1);
        Self::normalized(num, den)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn q_plus(c: i64) -> RatFunc {
        RatFunc::q() + RatFunc::constant(int(c))
    }

    #[test]
    fn canonical_form() {
        let a = q_plus(-1) * q_plus(3);
        let b = q_plus(3) * RatFunc::constant(int(2));
        let f = a.div(&b).unwrap();
        assert_eq!(f, q_plus(-1) * RatFunc::constant(rat(1, 2)));
        assert!(f.denom().is_constant());
    }

    #[test]
    fn render() {
        let f = q_plus(-1).div(&q_plus(3)).unwrap();
        assert_eq!(f.to_string(), "(q-1)/(q+3)");
        let g = (RatFunc::constant(int(1)) - RatFunc::q()) * RatFunc::constant(rat(1, 4));
        assert_eq!(g.to_string(), "(-q+1)/4");
        assert_eq!(RatFunc::constant(rat(-1, 3)).to_string(), "-1/3");
        assert_eq!(RatFunc::q().to_string(), "q");
        let h = RatFunc::constant(int(2)).div(&q_plus(3)).unwrap();
        assert_eq!(h.to_string(), "2/(q+3)");
    }

    #[test]
    fn eval_pole() {
        let f = RatFunc::constant(int(1)).div(&q_plus(3)).unwrap();
        assert_eq!(f.eval(&int(1)).unwrap(), rat(1, 4));
        assert!(matches!(f.eval(&int(-3)), Err(ScalarError::Pole(_))));
    }
}
