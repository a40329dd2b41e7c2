use thiserror::Error;

use crate::spec::Violation;

/// Failures of the exact polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("polynomial has an irreducible factor that is not cyclotomic")]
    NotCyclotomicProduct,
    #[error("cannot expand a formal bound: Phi_{order} has multiplicity {multiplicity}")]
    NegativeMultiplicity { order: u64, multiplicity: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("enumeration of {tuples} exponent tuples exceeds the limit of {limit}")]
    EnumerationTooLarge { tuples: u128, limit: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("explicit singularity data carries no spectrum")]
    ExplicitHasNoSpectrum,
}

/// Failures while computing global invariants from a hypersurface description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("sum of local Milnor numbers {local} exceeds (d-1)^(n+1) = {global}")]
    NegativeMu { local: u64, global: u64 },
    #[error("Phi_1 exponent {0} of the boundary Alexander polynomial is negative")]
    NegativeExponent(i64),
    #[error("delta_U(t) * delta_U(t^-1) does not divide delta_M(t)")]
    NotDivisible,
    #[error("error term has odd degree {0}")]
    OddDegree(i64),
    #[error("mu + 2r - d - 1 - sum(r_x - 1) = {0} is odd")]
    ParityViolation(i64),
    #[error("{what} = {value} is negative")]
    NegativeCount { what: &'static str, value: i64 },
    #[error("operation requires a plane curve (n = 1), got n = {0}")]
    NotACurve(u32),
    #[error("hypersurface is not flagged as a rational homology manifold")]
    NotRationalHomologyManifold,
    #[error("singularity #{0} has no graded Hodge dimensions")]
    MissingLocalHodgeData(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures while reading a hypersurface document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("invalid hypersurface data: {}", render(.0))]
    Validation(Vec<Violation>),
}

fn render(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
