use thiserror::Error;

use tfkernel::kernelize::KernelError;
use tfkernel::plr::PlrError;
use tfkernel::solver::SolverError;
use tfkernel::tw_family::TwError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown family `{0}` (expected tw, rtw, st, patched or grid)")]
    BadFamily(String),
    #[error("unknown suite `{0}` (expected euler, deltagood, margin, coltw, extend, kernel, alpha or tightness)")]
    UnknownSuite(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: PlrError },
    #[error(transparent)]
    Family(#[from] TwError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    /// A checked property failed.
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) | CliError::Kernel(_) | CliError::Solver(_) => 1,
            _ => 2,
        }
    }
}
