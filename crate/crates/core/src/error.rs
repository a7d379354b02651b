use crate::linalg::Tensor3;
use crate::model::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("missing member {0:?}")]
    MissingMember(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown profile {0:?}")]
    UnknownProfile(String),
    #[error("precondition failed for {context}: {}", failing_ids(.reports))]
    PreconditionFailed { context: String, reports: Vec<Report> },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("tensor is not antisymmetric")]
    NotAntisymmetric,
    #[error("r does not solve the Yang-Baxter equation ({} nonzero residual entries)", .0.nonzero().count())]
    NybeNonzero(Tensor3),
    #[error("construction requires weight 0, got {0}")]
    WeightNotZero(String),
    #[error("search needs {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}

fn failing_ids(reports: &[Report]) -> String {
    let ids: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(Report::label)
        .collect();
    ids.join(", ")
}

impl Error {
    pub(crate) fn missing(name: &str) -> Error {
        Error::MissingMember(name.to_string())
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Error {
        Error::DimensionMismatch(msg.into())
    }

    /// Reports attached to a precondition failure, if any.
    pub fn reports(&self) -> &[Report] {
        match self {
            Error::PreconditionFailed { reports, .. } => reports,
            _ => &[],
        }
    }
}
