use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid {field} = {value}: {reason}")]
    InvalidParameter {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("eta = 1 makes the exponent b = beta (1 - eta) vanish")]
    DegenerateEta,

    #[error("r = {r} Å is within {tolerance} Å of the pole at {pole} Å")]
    Singularity { r: f64, pole: f64, tolerance: f64 },

    #[error("pole at {pole} Å lies inside the grid [{r_min}, {r_max}] Å")]
    PoleInGrid { pole: f64, r_min: f64, r_max: f64 },

    #[error("{0} has no finite P-form (q = 0)")]
    Unrepresentable(&'static str),

    #[error("q = 0: the closed form is singular in the Morse limit; use morse_vibrational_energy")]
    MorseLimit,

    #[error("no real solution: discriminant {discriminant} < 0")]
    NoRealSolution { discriminant: f64 },

    #[error("Lambert W0 argument {argument} is below -1/e")]
    LambertDomain { argument: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    Convergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("grid resolution: {0}")]
    Resolution(String),

    #[error("empty {0}")]
    EmptyInput(&'static str),

    #[error("nu = {nu} is at or above the Morse bound-state cap {cap}")]
    AboveDissociation { nu: u32, cap: f64 },

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: line {line}: {source}")]
    Record {
        path: String,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            field,
            value,
            reason,
        }
    }
}
