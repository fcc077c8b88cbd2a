//! Error type shared by all modules.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming ribbon graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("label `{label}` appears {count} time(s); every label must appear exactly twice")]
    LabelCount { label: String, count: usize },
    #[error("invalid edge label `{0}`: labels are nonempty strings of ASCII letters, digits and underscores")]
    InvalidLabel(String),
    #[error("unknown edge label `{0}`")]
    UnknownLabel(String),
    #[error("bound exceeded: {what} is {value}, the configured limit is {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("graph is not 4-regular: {0}")]
    NotFourRegular(String),
    #[error("this route requires a plane graph (orientable, Euler genus 0)")]
    NotPlane,
    #[error("this polynomial requires an orientable graph")]
    NotOrientable,
    #[error("missing sign for edge `{0}`")]
    MissingSign(String),
    #[error("incomplete assignment: no value for edge `{0}`")]
    IncompleteAssignment(String),
    #[error("invalid group element `{0}`")]
    InvalidGroupElement(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
    #[error("unknown verification `{0}`")]
    UnknownVerification(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}
