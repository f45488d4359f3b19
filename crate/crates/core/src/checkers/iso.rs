use super::CheckError;
use crate::free3::{Free3Error, GenImage, GenSubst, Shape, Symmetry};
use crate::presentation::Presentation;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("unknown map {0:?}; known: identity, star, sign")]
    Unknown(String),
    #[error("map {0} does not apply to generators {1} -> {2}")]
    Shape(String, String, String),
}

fn is_pair(s: &Shape) -> bool {
    matches!(s.gens(), [c, b] if c.symmetry == Symmetry::Comm && b.symmetry == Symmetry::Anti)
}

fn is_single_none(s: &Shape) -> bool {
    matches!(s.gens(), [m] if m.symmetry == Symmetry::None)
}

/// A named substitution expressing the generators of `target` through those
/// of `source`; it turns `source`-algebras into `target`-algebras.
///
/// * `identity`: equal alphabets.
/// * `star`: `x*y = ((1+v)/2) x.y + ((1-v)/2) y.x`, written over a single
///   product or over its polarized pair.
/// * `sign`: the opposite product, i.e. `xy -> xy`, `[x,y] -> -[x,y]`.
pub fn named_map(name: &str, source: &Shape, target: &Shape) -> Result<GenSubst, MapError> {
    let bad = || {
        MapError::Shape(
            name.to_string(),
            source.names().join(","),
            target.names().join(","),
        )
    };
    let half = Scalar::rat(1, 2);
    match name {
        "identity" => {
            if source != target {
                return Err(bad());
            }
            Ok(GenSubst::new(
                (0..target.gens().len())
                    .map(|g| vec![GenImage::new(Scalar::one(), g, false)])
                    .collect(),
            ))
        }
        "star" if is_single_none(target) && is_single_none(source) => Ok(GenSubst::new(vec![vec![
            GenImage::new((Scalar::one() + Scalar::v()) * half.clone(), 0, false),
            GenImage::new((Scalar::one() - Scalar::v()) * half, 0, true),
        ]])),
        "star" if is_single_none(target) && is_pair(source) => {
            let hu = Scalar::u() * half;
            Ok(GenSubst::new(vec![vec![
                GenImage::new(hu.clone(), 0, false),
                GenImage::new(hu * Scalar::v(), 1, false),
            ]]))
        }
        "sign" if source == target => Ok(GenSubst::new(
            target
                .gens()
                .iter()
                .enumerate()
                .map(|(g, d)| match d.symmetry {
                    Symmetry::None => vec![GenImage::new(Scalar::one(), g, true)],
                    Symmetry::Comm => vec![GenImage::new(Scalar::one(), g, false)],
                    Symmetry::Anti => vec![GenImage::new(-Scalar::one(), g, false)],
                })
                .collect(),
        )),
        "star" | "sign" => Err(bad()),
        other => Err(MapError::Unknown(other.to_string())),
    }
}

/// Whether `map`, sending each generator of `target` to a combination of
/// generators of `source`, carries `R_target` exactly onto `R_source`.
pub fn check_substitution_iso(source: &Presentation, target: &Presentation, map: &GenSubst) -> Result<bool, CheckError> {
    map.validate(&target.shape, &source.shape).map_err(|e| match e {
        Free3Error::NotInvertible => CheckError::Free3(Free3Error::NotInvertible),
        other => CheckError::Free3(other),
    })?;
    let images = map.arity3_images(&target.shape, &source.shape)?;
    let image = target.relation_space().map(&images, source.shape.dim())?;
    Ok(&image == source.relation_space())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::builtin;

    #[test]
    fn ll_q_to_associative() {
        let ll = builtin("LLq").unwrap();
        let ass = builtin("Ass").unwrap();
        let star = named_map("star", &ll.shape, &ass.shape).unwrap();
        assert!(check_substitution_iso(&ll, &ass, &star).unwrap());
        let lld = builtin("LLq_depolarized").unwrap();
        let star = named_map("star", &lld.shape, &ass.shape).unwrap();
        assert!(check_substitution_iso(&lld, &ass, &star).unwrap());
    }

    #[test]
    fn pre_lie_to_vinberg() {
        let pl = builtin("PreLie").unwrap();
        let vb = builtin("Vinberg").unwrap();
        let sign = named_map("sign", &pl.shape, &vb.shape).unwrap();
        assert!(check_substitution_iso(&pl, &vb, &sign).unwrap());
        let id = named_map("identity", &pl.shape, &vb.shape).unwrap();
        assert!(!check_substitution_iso(&pl, &vb, &id).unwrap());
    }

    #[test]
    fn non_invertible_map_is_rejected() {
        let ass = builtin("Ass").unwrap();
        let zero = GenSubst::new(vec![vec![GenImage::new(Scalar::zero(), 0, false)]]);
        assert!(matches!(
            check_substitution_iso(&ass, &ass, &zero),
            Err(CheckError::Free3(Free3Error::NotInvertible))
        ));
        assert!(named_map("star", &builtin("Lie").unwrap().shape, &ass.shape).is_err());
    }
}
