//! Decision procedures on compiled presentations: cyclicity, dihedrality,
//! Hopf diagonals, isomorphism by generator substitution and implication of
//! axioms.

mod hopf;
mod iso;

pub use hopf::{
    check_coassoc, check_counit, diagonal_image_vanishes, hopf_analyze, DiagonalCandidate, HopfResult,
    HopfVerdict,
};
pub use iso::{check_substitution_iso, named_map, MapError};

use crate::free3::{Free3Error, Subspace};
use crate::presentation::{Presentation, RelationExpr};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Free3(#[from] Free3Error),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unsupported presentation: {0}")]
    Unsupported(String),
    #[error("generator alphabets differ: {0} vs {1}")]
    AlphabetMismatch(String, String),
}

/// Whether `R` is stable under the cycle `(0 1 2 3)`.
pub fn check_cyclic(p: &Presentation) -> bool {
    p.relation_space()
        .is_invariant(&p.shape.gamma())
        .expect("shape and relation space agree")
}

/// A relation whose image under the cycle leaves `R`, rendered.
pub fn cyclic_witness(p: &Presentation) -> Option<String> {
    p.relation_space()
        .invariance_witness(&p.shape.gamma())
        .expect("shape and relation space agree")
        .map(|v| p.shape.render_vector(&v))
}

/// `R` is stable under node reversal. Decided twice, by `λ`-invariance and by
/// `R = (R ∩ Γ+) ⊕ (R ∩ Γ-)`; disagreement is reported as an error.
pub fn check_dihedral(p: &Presentation) -> Result<bool, CheckError> {
    let r = p.relation_space();
    let by_lambda = r.is_invariant(&p.shape.lambda())?;
    let by_split = splits(r, p)?;
    if by_lambda != by_split {
        return Err(CheckError::InternalInconsistency(format!(
            "{}: lambda-invariance says {by_lambda}, the plus/minus split says {by_split}",
            p.name
        )));
    }
    Ok(by_lambda)
}

fn splits(r: &Subspace, p: &Presentation) -> Result<bool, Free3Error> {
    let (plus, minus) = p.shape.gamma_split();
    Ok(r.intersect(&plus)?.rank() + r.intersect(&minus)?.rank() == r.rank())
}

/// Whether `expr` lies in the relation space of `p`.
pub fn check_implies(p: &Presentation, expr: &RelationExpr) -> Result<bool, CheckError> {
    let v = p.relation_vector(expr)?;
    Ok(p.relation_space().contains(&v)?)
}

/// Whether every relation of `weaker` holds in `stronger`.
pub fn presentation_implies(stronger: &Presentation, weaker: &Presentation) -> Result<bool, CheckError> {
    if stronger.shape != weaker.shape {
        return Err(CheckError::AlphabetMismatch(
            stronger.shape.names().join(","),
            weaker.shape.names().join(","),
        ));
    }
    Ok(stronger.relation_space().contains_subspace(weaker.relation_space())?)
}

/// Exact equality of the two sides as vectors of `Γ(E)(3)`.
pub fn verify_identity(p: &Presentation, lhs: &RelationExpr, rhs: &RelationExpr) -> Result<bool, CheckError> {
    Ok(p.relation_vector(lhs)? == p.relation_vector(rhs)?)
}

/// The verdicts shown for one presentation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdicts {
    pub presentation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dihedral: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfResult>,
}

/// Runs the selected checks.
pub fn verdicts(p: &Presentation, cyclic: bool, dihedral: bool, hopf: bool) -> Result<Verdicts, CheckError> {
    Ok(Verdicts {
        presentation: p.name.clone(),
        cyclic: cyclic.then(|| check_cyclic(p)),
        dihedral: if dihedral { Some(check_dihedral(p)?) } else { None },
        hopf: if hopf { Some(hopf_analyze(p)?) } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{builtin, parse_relation};

    #[test]
    fn cyclic_examples() {
        for (n, c) in [("Ass", true), ("Vinberg", false), ("PreLie", false), ("G5", false), ("Lie", true), ("Com", true)] {
            assert_eq!(check_cyclic(&builtin(n).unwrap()), c, "{n}");
        }
        assert!(cyclic_witness(&builtin("G5").unwrap()).is_some());
        assert!(cyclic_witness(&builtin("Ass").unwrap()).is_none());
    }

    #[test]
    fn dihedral_examples() {
        for (n, d) in [("G5", true), ("G4", true), ("LLq", true), ("Lie", true), ("Com", true), ("CyclicNotDihedral", false)] {
            assert_eq!(check_dihedral(&builtin(n).unwrap()).unwrap(), d, "{n}");
        }
        assert!(check_cyclic(&builtin("CyclicNotDihedral").unwrap()));
    }

    #[test]
    fn implication_and_alphabet() {
        let ll = builtin("LLq").unwrap();
        let g5 = parse_relation(&ll, "b(c(x,y),z) + b(c(y,z),x) + b(c(z,x),y)").unwrap();
        assert!(check_implies(&ll, &g5).unwrap());
        let ass = builtin("Ass").unwrap();
        assert!(matches!(
            presentation_implies(&ass, &ll),
            Err(CheckError::AlphabetMismatch(..))
        ));
        assert!(presentation_implies(&builtin("G2").unwrap(), &builtin("G6").unwrap()).unwrap());
    }
}
