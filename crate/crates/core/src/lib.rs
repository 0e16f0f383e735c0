//! Exact computations with cubic Dirac operators and Lie algebra cohomology.
//!
//! Everything runs over the Gaussian rationals: no floats, no rounding, no
//! probabilistic identity testing. The crate builds the operators
//! `A, A⁻, a, a⁻, E, C, C⁻, D, D⁻` attached to a polarized orthogonal
//! decomposition `g = r ⊕ s`, verifies their superalgebra relations
//! symbolically in `U(g) ⊗ C(s)`, and computes Dirac cohomology,
//! `ū`-cohomology, `u`-homology, Hodge decompositions, cohomology in stages
//! and six-term exact sequences for weight modules.
//!
//! Module map:
//! - [`scalar`]: the ground field ℚ(i),
//! - [`linalg`]: exact sparse linear algebra (kernels, images, quotients),
//! - [`liecore`]: Lie algebra data, decompositions, weights, Weyl orbits,
//! - [`clifford`]: Clifford algebras, spin modules, the map `α: r → C(s)`,
//! - [`enveloping`]: PBW normal forms and the superalgebra `U(g) ⊗ C(s)`,
//! - [`diracops`]: the operator catalog and the identity verifier,
//! - [`repmod`]: weight modules, operator actions, invariant forms,
//! - [`cohomology`]: all cohomological reports.

pub mod scalar;
pub mod linalg;
pub mod liecore;
pub mod clifford;
pub mod enveloping;
pub mod diracops;
pub mod repmod;
pub mod cohomology;

use thiserror::Error;

/// Crate-wide error type. Mathematical failures (an identity that does not
/// hold) are *data*, not errors; this type covers malformed inputs and
/// violated preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("bracket antisymmetry fails at ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("invariant form is degenerate")]
    DegenerateForm,
    #[error("form invariance B([x,y],z) = B(x,[y,z]) fails on triple ({0}, {1}, {2})")]
    FormInvariance(usize, usize, usize),
    #[error("theta is not an involutive bracket- and form-preserving map: {0}")]
    BadTheta(String),
    #[error("sigma is not a conjugate-linear involutive bracket-preserving map: {0}")]
    BadSigma(String),
    #[error("ad h is not semisimple with rational eigenvalues: {0}")]
    BadGrading(String),
    #[error("subspace is not stable under the required action: {0}")]
    NotStable(String),
    #[error("unsupported rank or missing reflection data: {0}")]
    UnsupportedRank(String),
    #[error("polarization error: {0}")]
    Polarization(String),
    #[error("incompatible decompositions: {0}")]
    Incompatible(String),
    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),
    #[error("missing or degenerate form: {0}")]
    MissingForm(String),
    #[error("weight window too small: need cutoff of at least {needed} (got {got})")]
    Window { needed: i64, got: i64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
