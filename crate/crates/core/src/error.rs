use thiserror::Error;

use crate::lattice::IntVector;

/// Why a ray list was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayDefect {
    /// Fewer than two rays, or a ray count different from the dimension.
    WrongCount { rays: usize, dim: usize },
    /// A ray whose length differs from the first ray's.
    RaggedDimension {
        index: usize,
        len: usize,
        dim: usize,
    },
    /// A ray with a negative coordinate.
    Negative { index: usize },
    /// A ray whose coordinates have a common divisor greater than one.
    NotPrimitive { index: usize },
    /// The rays do not span a full-dimensional cone.
    Dependent,
}

impl std::fmt::Display for RayDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RayDefect::WrongCount { rays, dim } => {
                write!(
                    f,
                    "expected {dim} rays in dimension {dim} (at least 2), got {rays}"
                )
            }
            RayDefect::RaggedDimension { index, len, dim } => {
                write!(f, "ray {index} has {len} coordinates, expected {dim}")
            }
            RayDefect::Negative { index } => write!(f, "ray {index} has a negative coordinate"),
            RayDefect::NotPrimitive { index } => write!(f, "ray {index} is not primitive"),
            RayDefect::Dependent => write!(f, "rays are linearly dependent"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero vector has no primitive form")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid rays: {0}")]
    InvalidRays(RayDefect),

    #[error("{what} needs {needed} lattice points, budget is {budget}")]
    LimitExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    #[error("{0} is not an interior lattice point of the cone")]
    NotInOmega(IntVector),

    #[error("not applicable: {0}")]
    Inapplicable(&'static str),

    #[error("value does not fit the 64-bit reference arithmetic: {0}")]
    OutOfRange(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
