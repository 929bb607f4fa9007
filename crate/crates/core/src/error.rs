use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {modulus} exceeds the configured maximum {max}")]
    ModulusTooLarge { modulus: usize, max: usize },
    #[error("coefficient overflow while computing the cyclotomic polynomial of order {0}")]
    CoefficientOverflow(usize),
    #[error("index {index} is not a residue modulo {modulus}")]
    IndexOutOfRange { index: usize, modulus: usize },
    #[error("index {0} appears more than once")]
    DuplicateIndex(usize),
    #[error("index set must be nonempty")]
    EmptySet,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("dimension mismatch: {rows} rows vs {cols} columns")]
    DimensionMismatch { rows: usize, cols: usize },
    #[error("matrix dimension {dim} outside the supported range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },
    #[error("invalid residue arguments: {0}")]
    InvalidResidues(String),
    #[error("{0} is not square-free")]
    NotSquareFree(usize),
    #[error("{0} is square-free")]
    SquareFree(usize),
    #[error("modulus {0} is below the minimum of 4")]
    ModulusTooSmall(usize),
    #[error("size {size} outside the admissible range {min}..={max}")]
    SizeOutOfRange { size: usize, min: usize, max: usize },
    #[error("{what} {value} exceeds the ceiling {ceiling}; pass an explicit override to proceed")]
    CeilingExceeded {
        what: &'static str,
        value: usize,
        ceiling: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

impl Error {
    /// Errors that signal an unmet mathematical hypothesis or a resource
    /// ceiling rather than malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotSquareFree(_)
                | Error::SquareFree(_)
                | Error::ModulusTooSmall(_)
                | Error::SizeOutOfRange { .. }
                | Error::CeilingExceeded { .. }
                | Error::ModulusTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
