use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("quadrature did not converge after {nodes} nodes (last change {change:e})")]
    Convergence { nodes: usize, change: f64 },

    #[error("F coefficient index {index} outside table range ±{n_max}")]
    Index { index: i64, n_max: usize },

    #[error("unphysical state: minimum eigenvalue {min_eigenvalue:e}")]
    Physicality { min_eigenvalue: f64 },

    #[error("lambda grid is not uniform (step {expected}, found {found})")]
    Spacing { expected: f64, found: f64 },

    #[error("records do not share a single (gamma, temperature, n) group")]
    MixedGroup,

    #[error("empty input")]
    EmptyInput,
}
