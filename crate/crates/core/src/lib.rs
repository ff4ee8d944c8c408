//! Exact local invariants of graded and local algebras, their tensor
//! products over a common base, and a dense-matrix oracle for Artinian
//! algebras.

pub mod corpus;
pub mod groebner;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod random;
pub mod theorems;

pub use groebner::{GroebnerBasis, Ideal};
pub use invariants::{report, ExtNat, InvariantConfig, InvariantError, InvariantReport, DEFAULT_SEED};
pub use oracle::{build_model, oracle_flatness, oracle_report, ArtinianModel, OracleError};
pub use poly::{Field, PolyRing, Polynomial, DEFAULT_PRIME};
pub use presentation::{
    parse_presentation_file, AlgebraPresentation, BaseDescriptor, FlatnessCertificate, LocalAlgebra, Mode,
    PresentationError, PresentationFile,
};
pub use theorems::{
    check_nontrivial, run_checks, run_suite, TensorSetup, TheoremCheckResult, TheoremError, TheoremFilter,
};
