use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the library. Every variant names the offending input
/// closely enough for a batch driver to report it without extra context.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by exact zero")]
    DivisionByZero,

    #[error("exact mode requires exact scalars (entry {index} is a float)")]
    NotExact { index: usize },

    #[error("gamma factor is {kind} at {which}; functional-equation defect is indeterminate")]
    IndeterminateDefect {
        which: &'static str,
        kind: &'static str,
    },

    #[error(
        "ambiguous tolerance match: indices {cluster:?} lie within tolerance of several partners"
    )]
    Ambiguous { cluster: Vec<usize> },

    #[error("structural error: {0}")]
    Structure(String),

    #[error("not an involution: {0:?}")]
    NotInvolution(Vec<usize>),

    #[error("strip condition -1/2 < Re(s) < 1/2 violated at index {index}")]
    Strip { index: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numerical rank is ambiguous for minor rows {row}.., cols ..{col} (singular value {value:e})")]
    NumericalRank { row: usize, col: usize, value: f64 },

    #[error("matrix is ill-conditioned (estimated condition number {0:e})")]
    IllConditioned(f64),

    #[error("numerical degeneracy: block parameter |lambda| = {0} reached 1")]
    Degenerate(f64),

    #[error("not a point of X_n: {0}")]
    NotXPoint(String),

    #[error("matrix is not in the unipotent fundamental domain: {0}")]
    NotInDomain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
