use thiserror::Error;

use crate::faces::SignVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("hyperplane normal is the zero vector")]
    ZeroNormal,

    #[error("hyperplanes {first} and {second} define the same affine subspace")]
    DuplicateHyperplane { first: usize, second: usize },

    #[error("hyperplane index {index} out of range for an arrangement of {len}")]
    HyperplaneIndex { index: usize, len: usize },

    #[error("constraint system is infeasible")]
    Infeasible,

    #[error("face {0} is not a chamber")]
    NotAChamber(usize),

    #[error("face {0} is a chamber")]
    IsAChamber(usize),

    #[error("face {lower} is not below face {upper}")]
    NotNested { lower: usize, upper: usize },

    #[error("hyperplane {hyperplane} does not contain face {face}")]
    NotInCentralization { face: usize, hyperplane: usize },

    #[error("sign vector {0} is missing from the face complex")]
    MissingFace(SignVector),

    #[error("odd chamber count {count} for face {face} on hyperplane {hyperplane}")]
    OddMultiplicity { face: usize, hyperplane: usize, count: usize },

    #[error("invalid apartment: {0}")]
    InvalidApartment(String),

    #[error("invalid panel subset: {0}")]
    InvalidPanelSubset(String),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("matrix is not square: {0} entries")]
    NotSquare(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
