use hurwitz_core::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Hypothesis(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        if e.is_cap() {
            CliError::Cap(msg)
        } else if e.is_hypothesis() {
            CliError::Hypothesis(msg)
        } else if matches!(e, Error::Inconsistent(_) | Error::MissingTransversal(_)) {
            CliError::Internal(msg)
        } else {
            CliError::Input(msg)
        }
    }
}

impl From<hurwitz_core::PermError> for CliError {
    fn from(e: hurwitz_core::PermError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
