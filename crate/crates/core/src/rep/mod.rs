//! Characters of `Σ3+ ≅ S4` on invariant subspaces of `Γ(E)(3)`.

use crate::free3::{Free3Error, Perm4, Shape, Subspace};
use crate::scalar::{int, Field, Rational};
use serde::Serialize;
use std::fmt;
use std::sync::OnceLock;

pub const CLASS_NAMES: [&str; 5] = ["I", "(01)", "(012)", "(0123)", "(01)(23)"];
pub const CLASS_SIZES: [i64; 5] = [1, 6, 8, 6, 3];
pub const IRREP_NAMES: [&str; 5] = ["id", "sgn", "V22", "V31", "V211"];

const TABLE_SOURCE: &str = include_str!("character_table.txt");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    Free3(#[from] Free3Error),
    #[error("subspace is not stable under {0}")]
    NotInvariant(Perm4),
    #[error("trace under {0} is not rational")]
    IrrationalTrace(Perm4),
    #[error("class {0}: representatives give traces {1} and {2}")]
    ClassFunction(&'static str, String, String),
    #[error("not a character: multiplicity of {0} is {1}")]
    NotACharacter(&'static str, String),
}

/// Traces on the classes `I, (01), (012), (0123), (01)(23)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector(pub [Rational; 5]);

impl CharacterVector {
    pub fn from_ints(v: [i64; 5]) -> Self {
        CharacterVector(v.map(int))
    }

    pub fn degree(&self) -> &Rational {
        &self.0[0]
    }

    /// `(1/24) Σ |C| χ(C) ψ(C)`.
    pub fn inner(&self, other: &CharacterVector) -> Rational {
        let mut s = Rational::zero();
        for k in 0..5 {
            s += int(CLASS_SIZES[k]) * &self.0[k] * &other.0[k];
        }
        s / int(24)
    }
}

impl std::ops::Add for CharacterVector {
    type Output = CharacterVector;
    fn add(self, o: CharacterVector) -> CharacterVector {
        let mut out = self.0;
        for (a, b) in out.iter_mut().zip(o.0) {
            *a += b;
        }
        CharacterVector(out)
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Multiplicities of `id, sgn, V22, V31, V211`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition(pub [u64; 5]);

impl Decomposition {
    pub fn dim(&self) -> u64 {
        let degrees = [1, 1, 2, 3, 3];
        self.0.iter().zip(degrees).map(|(m, d)| m * d).sum()
    }

    /// Irreducibles occurring in both.
    pub fn common_factors(&self, other: &Decomposition) -> Vec<&'static str> {
        (0..5)
            .filter(|&k| self.0[k] > 0 && other.0[k] > 0)
            .map(|k| IRREP_NAMES[k])
            .collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(IRREP_NAMES)
            .map(|(m, n)| format!("{m}·{n}"))
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// The rows `id, sgn, V22, V31, V211` read from the fixture.
pub fn character_table() -> &'static [CharacterVector; 5] {
    static TABLE: OnceLock<[CharacterVector; 5]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let rows: Vec<CharacterVector> = TABLE_SOURCE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .enumerate()
            .map(|(i, l)| {
                let mut it = l.split_whitespace();
                assert_eq!(it.next(), Some(IRREP_NAMES[i]), "character table row {i}");
                let vals: Vec<i64> = it.map(|t| t.parse().expect("integer entry")).collect();
                CharacterVector::from_ints(vals.try_into().expect("five classes"))
            })
            .collect();
        rows.try_into().expect("five irreducibles")
    })
}

/// Orthonormality of the rows and `Σ deg² = 24`.
pub fn verify_table() -> bool {
    let t = character_table();
    let degrees_ok = t
        .iter()
        .zip([1, 1, 2, 3, 3])
        .all(|(row, d)| *row.degree() == int(d));
    let square_sum: Rational = t.iter().map(|r| r.degree() * r.degree()).sum();
    let orthonormal = (0..5).all(|i| {
        (0..5).all(|j| t[i].inner(&t[j]) == if i == j { Rational::one() } else { Rational::zero() })
    });
    degrees_ok && square_sum == int(24) && orthonormal
}

/// Two representatives of each class.
pub fn class_representatives() -> [[Perm4; 2]; 5] {
    let p = |c: &[&[u8]]| Perm4::from_cycles(c).expect("disjoint cycles");
    [
        [Perm4::IDENTITY, Perm4::IDENTITY],
        [p(&[&[0, 1]]), p(&[&[1, 2]])],
        [p(&[&[0, 1, 2]]), p(&[&[1, 3, 2]])],
        [p(&[&[0, 1, 2, 3]]), p(&[&[0, 2, 1, 3]])],
        [p(&[&[0, 1], &[2, 3]]), p(&[&[0, 3], &[1, 2]])],
    ]
}

/// Trace of `g` restricted to the invariant subspace `s`.
fn restricted_trace(shape: &Shape, s: &Subspace, g: &Perm4) -> Result<Rational, RepError> {
    let action = shape.action(g);
    if !s.is_invariant(&action)? {
        return Err(RepError::NotInvariant(*g));
    }
    let mut tr = crate::scalar::Scalar::zero();
    for (row, &p) in s.basis().iter().zip(s.pivots()) {
        tr += action.apply(row)[p].clone();
    }
    tr.as_rational().ok_or(RepError::IrrationalTrace(*g))
}

pub fn character_of(shape: &Shape, s: &Subspace) -> Result<CharacterVector, RepError> {
    let mut out: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
    for (k, [a, b]) in class_representatives().iter().enumerate() {
        let ta = restricted_trace(shape, s, a)?;
        let tb = restricted_trace(shape, s, b)?;
        if ta != tb {
            return Err(RepError::ClassFunction(CLASS_NAMES[k], ta.to_string(), tb.to_string()));
        }
        out[k] = ta;
    }
    Ok(CharacterVector(out))
}

pub fn decompose(chi: &CharacterVector) -> Result<Decomposition, RepError> {
    let mut m = [0u64; 5];
    for (k, row) in character_table().iter().enumerate() {
        let c = chi.inner(row);
        if !c.is_integer() || c < Rational::zero() {
            return Err(RepError::NotACharacter(IRREP_NAMES[k], c.to_string()));
        }
        m[k] = c.to_integer().try_into().expect("small multiplicity");
    }
    Ok(Decomposition(m))
}

/// Decompositions of `Γ+(E)(3)` and `Γ-(E)(3)`.
pub fn gamma_decompositions(shape: &Shape) -> Result<(Decomposition, Decomposition), RepError> {
    let (plus, minus) = shape.gamma_split();
    Ok((
        decompose(&character_of(shape, &plus)?)?,
        decompose(&character_of(shape, &minus)?)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free3::GeneratorDecl;
    use crate::free3::Symmetry;

    fn one_gen() -> Shape {
        Shape::new(vec![GeneratorDecl::new("m", Symmetry::None)])
    }

    #[test]
    fn table_is_orthonormal() {
        assert!(verify_table());
        let t = character_table();
        assert_eq!(t[0].inner(&t[0]), Rational::one());
        assert_eq!(t[3].inner(&t[4]), Rational::zero());
    }

    #[test]
    fn representatives_are_in_their_classes() {
        for pair in class_representatives() {
            let order = |p: &Perm4| (1..=4).find(|&k| (0..k).fold(Perm4::IDENTITY, |a, _| a.then(p)) == Perm4::IDENTITY);
            assert_eq!(order(&pair[0]), order(&pair[1]));
            assert_eq!(pair[0].is_even(), pair[1].is_even());
        }
    }

    #[test]
    fn zero_and_whole() {
        let s = one_gen();
        let z = character_of(&s, &Subspace::zero(12)).unwrap();
        assert_eq!(z, CharacterVector::from_ints([0; 5]));
        let whole = character_of(&s, &Subspace::whole(12)).unwrap();
        assert_eq!(*whole.degree(), int(12));
        assert_eq!(decompose(&whole).unwrap().dim(), 12);
    }

    #[test]
    fn non_characters_rejected() {
        assert!(matches!(
            decompose(&CharacterVector::from_ints([1, 0, 0, 0, 0])),
            Err(RepError::NotACharacter(..))
        ));
    }

    #[test]
    fn render() {
        assert_eq!(
            Decomposition([1, 1, 2, 0, 0]).to_string(),
            "1·id ⊕ 1·sgn ⊕ 2·V22 ⊕ 0·V31 ⊕ 0·V211"
        );
    }
}
