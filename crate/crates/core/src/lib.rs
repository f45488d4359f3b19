//! Exact computations with quadratic operads generated by binary operations.
//!
//! Coefficients live in `Q(q)[u,v]/(u^2 - 2, v^2 - q)` ([`Scalar`]). Arity-3
//! components of free operads, their symmetric-group actions and relation
//! spaces are in [`free3`]; presentations are parsed and polarized in
//! [`presentation`]; [`checkers`] decides cyclicity, dihedrality, Hopf
//! diagonals and isomorphisms. [`rep`] decomposes characters of `Σ4`,
//! [`quantize`] compares star products with LL data, and [`mlab`] runs
//! randomized identities for multilinear maps.

pub mod checkers;
pub mod free3;
pub mod linalg;
pub mod mlab;
pub mod presentation;
pub mod quantize;
pub mod rep;
pub mod scalar;

pub use checkers::{CheckError, HopfResult, HopfVerdict, MapError, Verdicts};
pub use free3::{Free3Error, GenSubst, GeneratorDecl, Perm4, Shape, SignedPerm, Subspace, Symmetry, Tree};
pub use mlab::{MlabError, MultiMap, SuiteReport};
pub use presentation::{BuiltinError, ParseError, Presentation, RelationExpr};
pub use quantize::{LLData, QuantizeError, StarProduct};
pub use rep::{CharacterVector, Decomposition, RepError};
pub use scalar::{Field, RatFunc, Rational, Scalar, ScalarError, TruncSeries};
