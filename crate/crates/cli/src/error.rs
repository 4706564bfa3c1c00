use std::fmt;
use std::process::ExitCode;

/// Failure classes with stable exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input, non-convex bodies, I/O.
    Input(String),
    /// A checked mathematical relation did not hold.
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Assertion(_) => ExitCode::from(1),
            CliError::Input(_) => ExitCode::from(2),
        }
    }

    pub fn input(err: impl fmt::Display) -> Self {
        CliError::Input(err.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Assertion(msg) => write!(f, "assertion failed: {msg}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Input(err.to_string())
    }
}
