use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} out of range (need 2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("exponent tuples have different lengths ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("ideal generators must be nonzero")]
    ZeroGenerator,
    #[error("operation requires a homogeneous ideal")]
    InhomogeneousInput,
    #[error("operation requires an inhomogeneous ideal")]
    HomogeneousInput,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("degree cap {0} exceeded before a Gröbner basis was found")]
    DegreeCapExceeded(u32),
    #[error("not a unique-solution system: {0}")]
    NotUniqueSolution(String),
    #[error("points are not in normal position: {0}")]
    NormalPosition(String),
    #[error("degree of regularity undefined: {0}")]
    DregUndefined(String),
    #[error("generators must be quadratic, found degree {0}")]
    NonQuadraticGenerator(u32),
    #[error("line {line}: unknown variable `{name}`")]
    UnknownVariable { line: usize, name: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty system: no polynomials given")]
    EmptySystem,
    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::UnknownVariable { .. }
            | Error::EmptySystem
            | Error::NotPrime(_)
            | Error::ModulusOutOfRange(_) => 4,
            Error::DegreeCapExceeded(_) => 3,
            _ => 2,
        }
    }
}
