use crate::partition::Partition;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two objects that must live over the same symmetric group do not.
    #[error("conformal weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    /// Character table requested beyond the configured limit.
    #[error("character table for n={n} exceeds the configured limit {limit}")]
    BoundExceeded { n: usize, limit: usize },

    /// The character-formula engine produced a non-integer structure
    /// constant. This is an internal bug signal, never valid output.
    #[error("non-integer structure constant at ({lambda}, {mu}) -> {nu}")]
    NonIntegerResult {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },

    /// Degree index outside 0..=max(n-1, 0).
    #[error("degree {degree} out of range for weight {n}")]
    OutOfRange { n: usize, degree: usize },

    /// No associated partition of the requested weight exists. This signal
    /// is exactly the relation condition sum_i (i+1)*alpha_i > n.
    #[error("no associated partition of {n} for {lambda}")]
    Infeasible { lambda: Partition, n: usize },

    /// A polynomial that must be homogeneous in conformal weight is not.
    #[error("polynomial mixes conformal weights {first} and {second}")]
    MixedWeight { first: usize, second: usize },

    /// The gamma monomials failed to be linearly independent. They form a
    /// basis whenever n >= 2d, so this signals a bug.
    #[error("gamma monomial basis is singular at d={d}, n={n}")]
    SingularBasis { d: usize, n: usize },

    /// A relation polynomial came out non-integral, which contradicts the
    /// integrality of the change of basis.
    #[error("non-integer coefficient in the relation polynomial for {lambda}")]
    NonIntegerCoefficient { lambda: Partition },

    /// Verification suite name not recognised.
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),

    /// An internal soundness check failed (bug signal).
    #[error("soundness check failed: {0}")]
    CheckFailed(String),

    /// Malformed JSON input for one of the documented wire formats.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
