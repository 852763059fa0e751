//! Shared error type.
//!
//! Validation failures, mathematical degeneracies and numerical
//! indeterminacies are kept apart so the CLI can map them to distinct exit
//! codes (1, 2 and 3 respectively).

use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoamoebaError {
    /// A circuit must have exactly `n + 2` points.
    #[error("configuration has {got} points, a circuit in dimension {dim} needs {expected}")]
    WrongCardinality { got: usize, dim: usize, expected: usize },

    /// The Newton polytope does not span the ambient space.
    #[error("points do not affinely span dimension {dim} (rank {rank})")]
    NotFullDimensional { dim: usize, rank: usize },

    /// Some maximal minor vanishes; the configuration is a pyramid.
    #[error("degenerate circuit: {0}")]
    DegenerateCircuit(String),

    /// The kernel-row transform to orthogonal form is not invertible over Z.
    #[error("kernel-row transform has determinant {det}, not a unit in Z")]
    NonUnimodularKernelBasis { det: i64 },

    /// Order map evaluated at a point of the closed lopsided coamoeba.
    #[error("polynomial is not colopsided at the requested point: {0}")]
    NotInComplement(String),

    /// An edge truncation with a vanishing extreme coefficient.
    #[error("degenerate edge polynomial on edge {0:?}")]
    DegenerateEdgePolynomial(Vec<usize>),

    /// Boundary case of the space classification that cannot be decided
    /// at the configured tolerance.
    #[error("numerically indeterminate: {0}")]
    NumericallyIndeterminate(String),

    /// Input rejected by a numeric kernel.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Binomial system with a singular exponent matrix.
    #[error("exponent matrix is singular")]
    SingularExponentMatrix,

    /// No fiber of the curve has roots in the torus.
    #[error("no torus points found on the curve")]
    EmptyCurve,

    /// The Sylvester resultant vanishes identically.
    #[error("resultant is identically zero (non-generic pair)")]
    IdenticallyZeroResultant,

    /// Critical-point analysis requires special orthogonal form.
    #[error("configuration is not in special orthogonal form: {0}")]
    NotSpecialOrthogonalForm(String),

    /// The 2x2 elimination submatrix is singular.
    #[error("singular elimination: {0}")]
    SingularElimination(String),

    /// No monomial pairing satisfies the interior-line hypothesis.
    #[error("no admissible monomial choice for trinomial reduction")]
    NoAdmissibleChoice,

    /// System with infinitely many roots or identically zero resultant.
    #[error("non-generic system: {0}")]
    NonGenericSystem(String),

    /// Malformed request (CLI / JSON layer).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl CoamoebaError {
    /// CLI exit code classification: 1 validation, 2 degeneracy, 3 indeterminacy.
    pub fn exit_code(&self) -> i32 {
        use CoamoebaError::*;
        match self {
            WrongCardinality { .. } | NotFullDimensional { .. } | InvalidInput(_) => 1,
            NumericallyIndeterminate(_) => 3,
            _ => 2,
        }
    }
}
