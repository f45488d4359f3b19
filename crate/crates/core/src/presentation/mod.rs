//! Quadratic presentations: generators, relations and the compiled
//! relation space `R ⊆ Γ(E)(3)`.

mod builtins;
mod parser;

pub use builtins::{builtin, builtin_names, builtin_source, ll_at, BuiltinError};
pub use parser::{parse_presentation, parse_relation, parse_substitution, ParseError, ParseErrorKind};

pub use crate::free3::{GeneratorDecl, Symmetry};

use crate::free3::{split_sign, wrap_scalar, Arity3Vector, Free3Error, Perm4, Polarization, Shape, Subspace, Tree};
use crate::scalar::{Field, Rational, Scalar, ScalarError};

/// A weighted sum of planar arity-3 monomials, read as `sum = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationExpr {
    pub terms: Vec<(Scalar, Tree)>,
}

impl RelationExpr {
    pub fn new(terms: Vec<(Scalar, Tree)>) -> Self {
        RelationExpr { terms }
    }

    pub fn zero() -> Self {
        RelationExpr { terms: Vec::new() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RelationExpr {
            terms: self
                .terms
                .iter()
                .map(|(k, t)| (c.clone() * k.clone(), t.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &RelationExpr) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        RelationExpr { terms }
    }

    /// Substitutes `x_i -> x_{vars[i]}` in every monomial.
    pub fn permute_vars(&self, vars: [u8; 3]) -> Self {
        RelationExpr {
            terms: self
                .terms
                .iter()
                .map(|(k, t)| (k.clone(), t.relabel(&vars)))
                .collect(),
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (c, t) in &self.terms {
            let (neg, mag) = split_sign(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&wrap_scalar(&mag));
                out.push('*');
            }
            out.push_str(&t.render(names));
        }
        out
    }

    fn map_scalars(&self, f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>) -> Result<Self, ScalarError> {
        Ok(RelationExpr {
            terms: self
                .terms
                .iter()
                .map(|(c, t)| Ok((f(c)?, t.clone())))
                .collect::<Result<_, ScalarError>>()?,
        })
    }
}

/// The associator `A(a, b, c) = m(m(a,b),c) - m(a,m(b,c))` for generator `m`.
pub fn associator(m: usize, a: u8, b: u8, c: u8) -> RelationExpr {
    let (a, b, c) = (Tree::Var(a), Tree::Var(b), Tree::Var(c));
    RelationExpr::new(vec![
        (Scalar::one(), Tree::app(m, Tree::app(m, a.clone(), b.clone()), c.clone())),
        (-Scalar::one(), Tree::app(m, a, Tree::app(m, b, c))),
    ])
}

/// `Γ(E)/(R)` with `R` the `S3`-span of the listed relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub params: Vec<String>,
    pub shape: Shape,
    pub relations: Vec<RelationExpr>,
    space: Subspace,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.params == other.params
            && self.shape == other.shape
            && self.relations == other.relations
            && self.space == other.space
    }
}

impl Presentation {
    pub fn new(
        name: &str,
        params: Vec<String>,
        gens: Vec<GeneratorDecl>,
        relations: Vec<RelationExpr>,
    ) -> Result<Self, Free3Error> {
        let shape = Shape::new(gens);
        let vectors = relations
            .iter()
            .map(|r| shape.vectorize(r.terms.iter().map(|(c, t)| (c, t))))
            .collect::<Result<Vec<_>, _>>()?;
        let space = sigma3_span(&shape, vectors);
        Ok(Presentation {
            name: name.to_string(),
            params,
            shape,
            relations,
            space,
        })
    }

    /// Wraps an already computed relation space.
    pub fn from_space(name: &str, params: Vec<String>, shape: Shape, space: Subspace) -> Self {
        let relations = space
            .basis()
            .iter()
            .map(|v| vector_to_expr(&shape, v))
            .collect();
        Presentation {
            name: name.to_string(),
            params,
            shape,
            relations,
            space,
        }
    }

    /// The compiled, `S3`-closed relation space.
    pub fn relation_space(&self) -> &Subspace {
        &self.space
    }

    pub fn gens(&self) -> &[GeneratorDecl] {
        self.shape.gens()
    }

    pub fn uses_q(&self) -> bool {
        self.params.iter().any(|p| p == "q")
    }

    pub fn relation_vector(&self, expr: &RelationExpr) -> Result<Arity3Vector, Free3Error> {
        self.shape.vectorize(expr.terms.iter().map(|(c, t)| (c, t)))
    }

    /// Substitutes `q = q0` in every relation and recompiles.
    pub fn specialize(&self, q0: &Rational, name: &str) -> Result<Self, ScalarError> {
        let relations = self
            .relations
            .iter()
            .map(|r| r.map_scalars(|c| c.specialize(q0)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation::new(name, Vec::new(), self.gens().to_vec(), relations)
            .expect("specialization keeps monomials well formed"))
    }

    /// Every generator of type `none` replaced by its commutative and
    /// anticommutative parts.
    pub fn polarize(&self) -> Self {
        let pol = Polarization::of(&self.shape);
        let space = pol
            .polarize_subspace(&self.space)
            .expect("polarization preserves arity 3");
        Presentation::from_space(&format!("{}_polarized", self.name), self.params.clone(), pol.polarized, space)
    }

    /// Inverse of [`Presentation::polarize`]; fails when no `comm` generator
    /// is directly followed by an `anti` one.
    pub fn depolarize(&self) -> Result<Self, Free3Error> {
        let pol = Polarization::depolarize(&self.shape)?;
        let space = pol.depolarize_subspace(&self.space)?;
        Ok(Presentation::from_space(
            &format!("{}_depolarized", self.name),
            self.params.clone(),
            pol.source,
            space,
        ))
    }

    /// Text in the presentation grammar; `parse_presentation` reads it back.
    pub fn render(&self) -> String {
        let names = self.shape.names();
        let mut out = format!("operad {} {{\n", self.name);
        if !self.params.is_empty() {
            out.push_str(&format!("  params: {};\n", self.params.join(", ")));
        }
        for g in self.gens() {
            out.push_str(&format!("  gen {}: {};\n", g.name, g.symmetry));
        }
        for r in &self.relations {
            out.push_str(&format!("  rel {} = 0;\n", r.render(&names)));
        }
        out.push_str("}\n");
        out
    }
}

/// Span of the `S3`-orbits of `vectors`.
pub fn sigma3_span(shape: &Shape, vectors: Vec<Arity3Vector>) -> Subspace {
    let actions: Vec<_> = Perm4::sigma3().iter().map(|p| shape.action(p)).collect();
    let orbit = vectors
        .iter()
        .flat_map(|v| actions.iter().map(move |a| a.apply(v)));
    Subspace::span(shape.dim(), orbit).expect("vectors have ambient length")
}

/// A relation expression whose vector is `v`.
pub fn vector_to_expr(shape: &Shape, v: &[Scalar]) -> RelationExpr {
    RelationExpr::new(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), shape.monomial_tree(i)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn associator_vector() {
        let p = builtin("Ass").unwrap();
        let v = p.relation_vector(&associator(0, 0, 1, 2)).unwrap();
        let nonzero: Vec<_> = v.iter().filter(|c| !c.is_zero()).collect();
        assert_eq!(nonzero, vec![&Scalar::one(), &-Scalar::one()]);
        assert!(p.relation_vector(&RelationExpr::zero()).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn relation_space_is_sigma3_closed() {
        for name in builtin_names() {
            let p = builtin(name).unwrap();
            for perm in Perm4::sigma3() {
                assert!(p.relation_space().is_invariant(&p.shape.action(&perm)).unwrap(), "{name}");
            }
        }
    }
}
