use thiserror::Error;

/// Every way an evaluation can refuse or fail.
///
/// Refusals near singular sets are typed so callers (and the CLI) can report
/// them as records instead of crashing.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("integrand tail does not decay: {0}")]
    TailDivergence(String),
    #[error("contour pinched between opposite pole families: {0}")]
    ContourPinch(String),
    #[error("point outside the domain of convergence: {0}")]
    OutOfDomain(String),
    #[error("series converges too slowly: {0}")]
    SlowConvergence(String),
    #[error("no admissible shift K: {0}")]
    NoAdmissibleK(String),
    #[error("denominator too close to zero: {0}")]
    NearSingularDenominator(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("unsupported derivative order {0}")]
    UnsupportedOrder(u32),
    #[error("parity condition violated: {0}")]
    ParityViolation(String),
    #[error("truncation order too small: {0}")]
    InsufficientOrder(String),
    #[error("non-finite value produced in {0}")]
    NonFinite(String),
}

impl Error {
    /// Short machine-readable tag used in result records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole(_) => "PoleError",
            Error::Domain(_) => "DomainError",
            Error::NonConvergence(_) => "NonConvergence",
            Error::TailDivergence(_) => "TailDivergence",
            Error::ContourPinch(_) => "ContourPinch",
            Error::OutOfDomain(_) => "OutOfDomain",
            Error::SlowConvergence(_) => "SlowConvergence",
            Error::NoAdmissibleK(_) => "NoAdmissibleK",
            Error::NearSingularDenominator(_) => "NearSingularDenominator",
            Error::SingularPoint(_) => "SingularPoint",
            Error::UnsupportedOrder(_) => "UnsupportedOrder",
            Error::ParityViolation(_) => "ParityViolation",
            Error::InsufficientOrder(_) => "InsufficientOrder",
            Error::NonFinite(_) => "NonFinite",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
