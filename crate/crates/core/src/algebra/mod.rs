//! Exact multivariate polynomial arithmetic over the rationals and the
//! Gaussian rationals, quotient-ring reduction by triangular relation sets,
//! the tacnode criterion, univariate gcd/resultant machinery, and exact
//! replays of the singular-curve computations.

mod cases;
mod elim;
mod gcd;
mod poly;
mod scalar;
mod tacnode;

pub use cases::{verify_case, CaseId, CaseReport, CaseVerdict};
pub use elim::{replay_elimination, ElimCase, EliminationStep, EliminationTranscript};
pub use gcd::{
    poly_gcd, poly_gcd_mod, resultant_modulus_norm, GcdError, UnivariateError,
};
pub use poly::{ExactPoly, PolyParseError, TriangularRelations, Vars};

/// Reduce a polynomial to its canonical normal form modulo a terminating
/// triangular relation set (alias for [`TriangularRelations::reduce`]).
pub fn reduce_mod<C: Coeff>(f: &ExactPoly<C>, relations: &TriangularRelations<C>) -> ExactPoly<C> {
    relations.reduce(f)
}
pub use scalar::{Coeff, FieldCoeff, Gauss};
pub use tacnode::{
    ring_class, ring_class_mod, symbolic_tacnode_invariants, tacnode_check, tacnode_check_mod,
    tacnode_check_with, tacnode_invariants, RingClass, SingularityVerdict, TacnodeInvariants,
};
