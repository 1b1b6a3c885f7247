use alloc::string::String;
use core::fmt;

/// Errors raised by the analysis kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input violates a documented precondition or structural invariant
    /// (degenerate geometry, mismatched shapes, out-of-range parameters).
    Validation(String),
    /// A text payload could not be parsed. `line` is 1-based.
    Parse { line: usize, msg: String },
    /// The requested cluster count exceeds the number of must-link groups,
    /// so no constraint-satisfying partition exists.
    InfeasibleK { k: usize, groups: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::InfeasibleK { k, groups } => write!(
                f,
                "infeasible constraints: k={k} exceeds the {groups} distinct must-link group(s)"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
