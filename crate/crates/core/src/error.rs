use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong while building root data, walking the Weyl
/// group, or assembling factor multisets.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),

    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different root systems ({0} vs {1})")]
    MixedRootSystems(String, String),

    #[error("Weyl group of {cartan} has {order} elements, above the size guard {guard}")]
    SizeGuardExceeded { cartan: String, order: u128, guard: u64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("Kazhdan-Lusztig coefficient overflow while computing P_{{{x},{y}}}")]
    CoefficientOverflow { x: String, y: String },

    #[error("{w} is not a minimal coset representative for {subset}")]
    NotMinimalRepresentative { w: String, subset: String },

    #[error("J = {j} is not contained in I(w) = {i} for w = {w}")]
    InvalidJ { w: String, i: String, j: String },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed cache file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CoefficientOverflow { .. } => 3,
            Error::InternalInconsistency(_) => 4,
            _ => 2,
        }
    }
}
