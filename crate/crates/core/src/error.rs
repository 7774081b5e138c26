use thiserror::Error;

use crate::words::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("{}", format_line_errors(.0))]
    System(Vec<(usize, Error)>),

    #[error("empty identity system")]
    EmptySystem,

    #[error("letter {0} is not mapped by the assignment")]
    UnmappedLetter(Letter),

    #[error("unknown semigroup or basis name `{0}`")]
    UnknownName(String),

    #[error("`{0}` requires the parameter n")]
    MissingParameter(String),

    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("presentation quotient is not closed at cap {cap}: {detail}")]
    NotClosed { cap: usize, detail: String },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

fn format_line_errors(errors: &[(usize, Error)]) -> String {
    errors
        .iter()
        .map(|(line, e)| format!("line {line}: {e}"))
        .collect::<Vec<_>>()
        .join("\n")
}
