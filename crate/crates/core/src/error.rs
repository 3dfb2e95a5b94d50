use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be an odd prime, got {0}")]
    NonPrimeModulus(String),
    #[error("extension modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("extension modulus must be monic of degree at least 2")]
    BadModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operation is undefined over the rational field")]
    RationalField,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
    #[error("field is not an extension of the matrix field")]
    IncompatibleFields,
    #[error("subspace is not lagrangian")]
    NotLagrangian,
    #[error("subspaces are not complementary")]
    NotComplementary,
    #[error("operator is not self-adjoint with respect to the symplectic form")]
    NotSelfAdjoint,
    #[error("characteristic polynomial has an unresolved nonlinear factor over Q")]
    UnresolvedFactor,
    #[error("operator is not nilpotent on the subspace")]
    NotNilpotent,
    #[error("not all eigenvalues lie in the base field")]
    EigenvaluesNotInField,
    #[error("operation requires a finite field")]
    NotFiniteField,
    #[error("Galois descent produced a subspace of the wrong dimension")]
    InternalDescentFailure,
    #[error("no supported normal-form path: nonlinear irreducible factor over Q")]
    UnsupportedFieldPath,
    #[error("certificate is invalid: {0}")]
    InvalidCertificate(String),
    #[error("bad instance spec: {0}")]
    BadSpec(String),
    #[error("post-condition failed: {0}")]
    PostCondition(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
