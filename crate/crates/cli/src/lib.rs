//! Library side of the `areal` command: the registered closed-form cases,
//! the verification suite and its text/JSON/CSV renderings.

pub mod cases;
pub mod record;
pub mod render;
pub mod suite;

use areal_core::closed::ClosedError;
use areal_core::{ExprError, NumericError, SpecialError};
use thiserror::Error;

pub use record::{Status, VerificationRecord};
pub use suite::{run_suite, Report, Suite, SuiteConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown case '{0}'")]
    UnknownCase(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("missing option: {0}")]
    MissingOption(&'static str),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Closed(#[from] ClosedError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error("output error: {0}")]
    Output(String),
}
