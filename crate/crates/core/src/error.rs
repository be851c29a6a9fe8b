use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series has nonzero constant term: {0}")]
    NonzeroConstant(&'static str),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstant,

    #[error("series has zero linear coefficient and cannot be reverted")]
    ZeroLinearTerm,

    #[error("derivative order {n} exceeds series order {order}")]
    DerivativeTooDeep { n: usize, order: usize },

    #[error("restriction size {n} must satisfy 1 <= n < {m}")]
    BadRestriction { n: usize, m: usize },

    #[error("sample point x = -1 is a pole")]
    PoleSample,

    #[error("z = {0} lies on the branch cut (-inf, -1/e]")]
    BranchCut(String),

    #[error("Lambert W iteration did not converge at z = {z} (residual {residual:e})")]
    NoConvergence { z: String, residual: f64 },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("enumeration of {vertices} vertices exceeds the cap of {cap}")]
    OverBudget { vertices: usize, cap: usize },

    #[error("could not start worker pool: {0}")]
    ThreadPool(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
