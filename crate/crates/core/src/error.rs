use thiserror::Error;

/// Errors produced by constructors, generators and evaluators.
///
/// The CLI maps these onto its stable exit codes; see [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("sets {first} and {second} are identical; set systems must consist of distinct sets")]
    DuplicateSets { first: u32, second: u32 },

    #[error("empty union: every point has empty membership")]
    EmptyUnion,

    #[error("missing weight for region {index} = {region}")]
    MissingWeight { index: usize, region: String },

    #[error("nerve too large: more than {budget} faces")]
    NerveTooLarge { budget: usize },

    #[error("q must be prime, got {0}")]
    NotPrime(u64),

    #[error("lattice too large: {size} elements exceeds budget {budget}")]
    LatticeBudget { size: u64, budget: u64 },

    #[error("restart limit exhausted after {restarts} rejected permutations")]
    RestartsExhausted { restarts: u32 },

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable exit code used by the `ievec` binary:
    /// 2 input, 3 empty union, 4 restarts, 5 validation failure, 6 resource.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_)
            | Error::DuplicateSets { .. }
            | Error::MissingWeight { .. }
            | Error::NotPrime(_)
            | Error::Json(_) => 2,
            Error::EmptyUnion => 3,
            Error::RestartsExhausted { .. } => 4,
            Error::NerveTooLarge { .. } | Error::LatticeBudget { .. } => 6,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
