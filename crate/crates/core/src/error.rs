use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid degree {0}: a permutation needs at least one point")]
    InvalidDegree(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} is outside 1..={degree}")]
    Point { point: usize, degree: usize },

    #[error("point {0} repeated within one cycle")]
    Cycle(usize),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("bad row: {0}")]
    Row(String),

    #[error("format error at `{path}`: {message}")]
    Format { path: String, message: String },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("unsupported stage {stage}: {reason}")]
    Stage { stage: usize, reason: String },

    #[error("composition error: {0}")]
    Composition(String),

    #[error("generator {0} is not an element of the group")]
    Membership(String),

    #[error("generators do not generate the group: closure has order {closure}, group has order {group}")]
    Generation { closure: usize, group: usize },

    #[error("bad word: {0}")]
    Word(String),

    #[error("label error: {0}")]
    Label(String),

    #[error("composition does not close; residual lead head {residual}")]
    Closure { residual: Perm },

    #[error("chain error: {0}")]
    Chain(String),

    #[error("unknown scheme: {0}")]
    Scheme(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
