use std::fmt;

use thiserror::Error;

use crate::graph::Vertex;

/// What went wrong while reading an edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    SelfLoop,
    DuplicateEdge,
    Syntax,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::SelfLoop => f.write_str("self-loop"),
            ParseErrorKind::DuplicateEdge => f.write_str("duplicate edge"),
            ParseErrorKind::Syntax => f.write_str("syntax error"),
        }
    }
}

/// The conjunct of the construction hypothesis that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjunct {
    Connected,
    MinOrder,
    Mu2AtLeastN,
}

impl fmt::Display for Conjunct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conjunct::Connected => f.write_str("graph is not connected"),
            Conjunct::MinOrder => f.write_str("n < 7"),
            Conjunct::Mu2AtLeastN => f.write_str("mu2 < n"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {kind}: {detail}")]
    Parse {
        kind: ParseErrorKind,
        line: usize,
        detail: String,
    },
    #[error("vertex {0} out of range")]
    InvalidVertex(Vertex),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not a 2-CIST-partition")]
    NotACistPartition,
    #[error("tree {tree} is not a spanning tree: {reason}")]
    NotASpanningTree { tree: u8, reason: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(Conjunct),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("graph has {n} vertices, the exhaustive search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("generation failed after {attempts} attempts (seed {seed})")]
    GenerationFailed { seed: u64, attempts: usize },
}

impl Error {
    pub(crate) fn parse(kind: ParseErrorKind, line: usize, detail: impl Into<String>) -> Self {
        Error::Parse {
            kind,
            line,
            detail: detail.into(),
        }
    }

    pub fn parse_kind(&self) -> Option<ParseErrorKind> {
        match self {
            Error::Parse { kind, .. } => Some(*kind),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Fails with [`Error::InternalInvariantViolation`] when the condition does not hold.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::InternalInvariantViolation(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
