use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every layer of the crate.
///
/// `Indeterminate` is special: randomized searches report it when their caps
/// are exhausted instead of guessing a boolean.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus has degree {got}, expected {want}")]
    ModulusDegree { want: u32, got: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a permutation of 0..{degree}")]
    NotAPermutation { degree: usize },
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("matrix for generator `{name}` is not invertible")]
    NotInvertible { name: String },
    #[error("generator matrices do not define a representation (witness word {word:?})")]
    NotAHomomorphism { word: Vec<String> },
    #[error("modules are defined over different groups")]
    GroupMismatch,
    #[error("modules are defined over different fields")]
    FieldMismatch,
    #[error("conjugation does not preserve the subgroup")]
    ConjugationLeavesSubgroup,
    #[error("enumeration of {needed} candidates exceeds the cap of {cap}")]
    EnumCapExceeded { cap: u64, needed: u64 },
    #[error("indeterminate: {0}")]
    Indeterminate(String),
    #[error("hypothesis not verified: {0}")]
    HypothesisNotVerified(String),
    #[error("subgroup index {index} is not a power of the characteristic {p}")]
    IndexNotPPower { index: usize, p: u32 },
    #[error("subgroup index {index} is divisible by the characteristic {p}")]
    IndexDivisibleByP { index: usize, p: u32 },
    #[error("the given map is not a retraction of the section")]
    NotARetraction,
    #[error("module is not stable under conjugation: {0}")]
    NotGInvariantModule(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit-code class used by the CLI: 2 for indeterminate results and
    /// unverified hypotheses, 3 for input errors.
    pub fn is_indeterminate(&self) -> bool {
        matches!(
            self,
            Error::Indeterminate(_)
                | Error::EnumCapExceeded { .. }
                | Error::HypothesisNotVerified(_)
                | Error::IndexNotPPower { .. }
                | Error::IndexDivisibleByP { .. }
        )
    }
}
