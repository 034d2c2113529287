use crate::algebra::Var;

/// Error type shared by the whole exact pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two polynomials in different variables were mixed.
    #[error("variable tag mismatch: {left} vs {right}")]
    VarMismatch { left: Var, right: Var },
    /// A Gamma-ratio offset that is not a nonnegative integer; signals a
    /// parameter triple outside the integrality assumptions.
    #[error("unsupported Gamma-ratio offset {0}: must be a nonnegative integer")]
    UnsupportedOffset(i64),
    /// A point with `t <= 0`, i.e. outside the Cartan–Hartogs domain.
    #[error("point outside the domain: t = {0} is not positive")]
    OutsideDomain(String),
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
