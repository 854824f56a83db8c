use thiserror::Error;

use crate::partitions::Partition;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the requested specialization")]
    PoleAtSpecialization,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("partition {partition} has more than {n} parts")]
    LengthExceedsN { partition: Partition, n: usize },
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },
    #[error("transition matrix is singular at degree {degree}")]
    SingularTransition { degree: usize },
    #[error("polynomial is not symmetric: {witness}")]
    NotSymmetric { witness: String },
    #[error("polynomial is not alternating: {witness}")]
    NotAlternating { witness: String },
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("{lambda} is not obtained from {mu} by adding one box")]
    NotOneBoxUp { lambda: Partition, mu: Partition },
    #[error("{mu} is not obtained from {lambda} by removing one box")]
    NotOneBoxDown { mu: Partition, lambda: Partition },
    #[error("removing a box from row {row} of {lambda} does not give a partition")]
    InvalidStep { lambda: Partition, row: usize },
    #[error("could not find a nonsingular set of sample points")]
    SingularSampleSystem,
    #[error("pole at sample point u = {0}")]
    PoleAtSample(String),
    #[error("{0}")]
    Precondition(String),
    #[error("cache i/o: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
