use alloc::string::String;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined on the zero element")]
    Zero,
    #[error("root of unity order {0} unsupported (supported: 2..=48)")]
    UnsupportedOrder(u32),
    #[error("degree {degree} exceeds the factorization bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("element is not invertible modulo {0}")]
    NotInvertible(String),
    #[error("extension of the ground field required: {0}")]
    ExtensionRequired(String),
    #[error("factor recombination budget exhausted")]
    RecombinationBudget,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("points missing from the reciprocity ledger: {0}")]
    MissedPoints(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("sampling budget exhausted: {0}")]
    SamplingExhausted(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Errors that signal inputs outside the supported scope rather than a
    /// failed verification.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedOrder(_)
                | Error::DegreeBound { .. }
                | Error::ExtensionRequired(_)
                | Error::RecombinationBudget
                | Error::Invalid(_)
                | Error::Unsupported(_)
                | Error::SamplingExhausted(_)
                | Error::DivisionByZero
                | Error::Zero
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
