use std::fmt;
use std::io;

/// A failed invocation and the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments: exit code 1.
    Usage(String),
    /// IO, budget, ceiling or data problems: exit code 2.
    Runtime(String),
    /// The reader of stdout went away; not reported.
    BrokenPipe,
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
            CliError::BrokenPipe => 0,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
            CliError::BrokenPipe => f.write_str("broken pipe"),
        }
    }
}

impl From<digitlaw::Error> for CliError {
    fn from(e: digitlaw::Error) -> Self {
        use digitlaw::Error::*;
        match e {
            InvalidDigit(_) | EmptyRange { .. } | InvalidColumn { .. } | BelowDigit { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError::BrokenPipe
        } else {
            CliError::Runtime(e.to_string())
        }
    }
}
