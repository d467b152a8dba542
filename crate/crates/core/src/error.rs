use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: n = {left} vs n = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}: index must be between 1 and n = {n}")]
    UnknownVariable { name: String, pos: usize, n: usize },

    #[error("mixed degrees in one expression: {first} and {second}")]
    MixedDegrees { first: usize, second: usize },

    #[error("degree mismatch: expected a {expected}-form, found a {found}-form")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} out of range for n = {n}")]
    DegreeOutOfRange { degree: usize, n: usize },

    #[error("P_{{{a},{i}}} is not defined for n = {n}")]
    Inadmissible { a: usize, i: usize, n: usize },

    #[error("form contains a dz factor and is not horizontal")]
    NotHorizontal,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("operator `{0}` has no entry in the symbol table")]
    NotInSymbolTable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
