//! `regionsig` computes a symmetric polynomial matrix indexed by the regions
//! of an oriented link diagram, reduces it by exact congruence at rational
//! evaluation points to a candidate link invariant, checks the congruence
//! identities behind its move invariance, and compares the resulting
//! signature profile against the Tristram–Levine signature function.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `regionsig` binary for the batch CLI.

pub mod amplitude;
pub mod cli;
pub mod corpus;
pub mod diagram;
pub mod exact;
pub mod reduce;
pub mod tlsig;
pub mod verify;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid diagram: {0}")]
    Diagram(String),
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("unknown corpus link '{0}'")]
    UnknownLink(String),
    #[error("no stored Seifert matrix for '{0}'")]
    MissingSeifert(String),
    #[error("element is not invertible in the localised ring")]
    NotInvertible,
    #[error("evaluation angle {0} is too close to a multiple of 2*pi")]
    DegenerateTheta(f64),
    #[error("corpus data corrupt: {0}")]
    Corpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
