use thiserror::Error;

use crate::quiver::StringViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("not a string: {0}")]
    NotAString(StringViolation),
    #[error("division is not exact")]
    NotDivisible,
    #[error("cannot substitute a non-unit for `{0}` under a negative exponent")]
    NotInvertible(String),
    #[error("operation is undefined on the zero polynomial")]
    ZeroInput,
    #[error("expression is not subtraction-free")]
    NotSubtractionFree,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("frieze word needs at least 3 letters and one placement per inner pair: {0}")]
    WordTooShort(String),
    #[error("quiver must be acyclic and relation-free: {0}")]
    NotHereditary(String),
    #[error("path algebra looks infinite dimensional: a nonzero path exceeded length {0}")]
    InfiniteDimensional(usize),
    #[error("quiver has a loop or a 2-cycle at `{0}`")]
    LoopOrTwoCycle(String),
    #[error("anti-symmetrised form <S_{vertex}, -> does not factor through dimension vectors")]
    K0IllDefined { vertex: String },
    #[error("string touches frozen vertex `{0}`")]
    UnfrozenViolation(String),
    #[error("cannot mutate at frozen or unknown vertex `{0}`")]
    FrozenMutation(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable variant name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "Parse",
            Error::InvalidQuiver(_) => "InvalidQuiver",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownArrow(_) => "UnknownArrow",
            Error::InvalidWalk(_) => "InvalidWalk",
            Error::NotAString(_) => "NotAString",
            Error::NotDivisible => "NotDivisible",
            Error::NotInvertible(_) => "NotInvertible",
            Error::ZeroInput => "ZeroInput",
            Error::NotSubtractionFree => "NotSubtractionFree",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::WordTooShort(_) => "WordTooShort",
            Error::NotHereditary(_) => "NotHereditary",
            Error::InfiniteDimensional(_) => "InfiniteDimensional",
            Error::LoopOrTwoCycle(_) => "LoopOrTwoCycle",
            Error::K0IllDefined { .. } => "K0IllDefined",
            Error::UnfrozenViolation(_) => "UnfrozenViolation",
            Error::FrozenMutation(_) => "FrozenMutation",
            Error::Malformed(_) => "Malformed",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
