use thiserror::Error;

use crate::parse::ParseError;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("degree bound {bound} exceeded during standard-basis completion")]
    BoundExceeded { bound: u32 },

    #[error("not contained: generator {index} has nonzero normal form modulo the enclosing ideal")]
    NotContained { index: usize },

    #[error("no stabilization within k-cap {cap}: the quotient appears to have infinite length")]
    NoStabilization { cap: u32 },

    #[error("not A-finite: the ideal has infinite colength")]
    NotAFinite,

    #[error("odd colength {0} of the double point ideal; this indicates a construction bug")]
    OddColength(u64),

    #[error("germ has corank {0}, but corank <= 1 is required")]
    NotCorank1(usize),

    #[error("germ is not in corank-1 normal form and is not normalizable by variable permutation")]
    NotNormalizable,

    #[error("Q has infinite colength, so it is not m-primary")]
    NotPrimary,

    #[error("not an ICIS at stage {stage}: the Le-Greuel colength is infinite")]
    NotIcis { stage: usize },

    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
