//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Failures of preconditions and malformed inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    ZeroOrder,
    ZeroInverse,
    OrderMismatch(u32, u32),
    EmptyInterval,
    OverlappingIntervals,
    Collision,
    PathMismatch,
    NotSquare,
    NotSymmetric,
    OddLattice,
    Singular,
    NotPointed,
    NonModular(String),
    MissingEntry(String),
    Structural(String),
    BadParameter(String),
    Precondition(String),
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroOrder => write!(f, "cyclotomic order must be positive"),
            Error::ZeroInverse => write!(f, "inverse of zero"),
            Error::OrderMismatch(a, b) => write!(f, "order {} does not divide {}", a, b),
            Error::EmptyInterval => write!(f, "interval must satisfy 0 < b - a < 1"),
            Error::OverlappingIntervals => write!(f, "intervals overlap on the circle"),
            Error::Collision => write!(f, "marked points coincide"),
            Error::PathMismatch => write!(f, "path endpoints do not match"),
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotSymmetric => write!(f, "Gram matrix is not symmetric"),
            Error::OddLattice => write!(f, "Gram matrix has an odd diagonal entry"),
            Error::Singular => write!(f, "Gram matrix is singular"),
            Error::NotPointed => write!(f, "category is not pointed"),
            Error::NonModular(s) => write!(f, "non-modular data: {}", s),
            Error::MissingEntry(s) => write!(f, "missing entry: {}", s),
            Error::Structural(s) => write!(f, "structural error: {}", s),
            Error::BadParameter(s) => write!(f, "bad parameter: {}", s),
            Error::Precondition(s) => write!(f, "precondition violated: {}", s),
            Error::Internal(s) => write!(f, "internal error: {}", s),
        }
    }
}
