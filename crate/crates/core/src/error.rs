use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced to callers. Internal invariant violations (a wrong
/// formula, a nonzero Burnside remainder) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    /// A computation would exceed a configured size limit.
    #[error("resource limit: {what} = {requested} exceeds limit {limit}")]
    Resource {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    /// An argument lies outside the operation's domain.
    #[error("argument out of range: {0}")]
    Argument(String),

    /// A period profile failed validation.
    #[error("invalid period profile: {0}")]
    Profile(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn resource(what: &'static str, requested: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Resource {
            what,
            requested: requested.into(),
            limit: limit.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
