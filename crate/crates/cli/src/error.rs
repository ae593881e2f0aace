use hartogs::analysis::AnalysisError;
use hartogs::combinatorics::CombinatoricsError;
use hartogs::domain::DomainError;
use hartogs::kernel::KernelError;
use hartogs::regularity::RegularityError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Regularity(#[from] RegularityError),
    #[error("writing report: {0}")]
    Io(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("serializing report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// Bad input of any kind is a usage error; failures while producing
    /// output are reported as 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Io(_) | Self::Csv(_) | Self::Json(_) | Self::Threads(_) => 1,
            _ => 2,
        }
    }
}
