//! Exact Alexander polynomials and spectral pairs for complements and
//! boundary manifolds of affine hypersurfaces that are transversal at
//! infinity and have only isolated singularities.
//!
//! All arithmetic is exact: polynomials are products of cyclotomic factors
//! and eigenvalue arguments are reduced fractions.

pub mod boundary;
pub mod census;
pub mod complement;
pub mod cyclotomic;
pub mod error;
pub mod io;
pub mod local;
pub mod milnor;
pub mod poly;
pub mod report;
pub mod spec;
pub mod table;

pub use boundary::{BoundaryInvariants, CurveHodgeNumbers};
pub use complement::{Bound, BoundTable};
pub use cyclotomic::{cyclotomic, factor_roots_of_unity, CyclotomicFactorization};
pub use error::{AlgebraError, InvariantError, LocalError, MilnorError, SpecError};
pub use local::{ExplicitSingularity, LocalSingularity};
pub use poly::LaurentPoly;
pub use report::{build_report, Check, CheckKind, InvariantReport};
pub use spec::{validate, DerivedQuantities, HypersurfaceSpec, SingularityEntry, Violation};
pub use table::{Alpha, PairKey, SpectralPairTable};
