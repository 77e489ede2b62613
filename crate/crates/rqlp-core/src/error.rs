//! Error type shared by every fallible operation in the crate.

/// Library-wide error enum.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    #[error("{op}: incompatible shapes {lhs_rows}x{lhs_cols} and {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// An argument violated a documented precondition.
    #[error("invalid argument: {what}")]
    InvalidArgument { what: &'static str },

    /// A matrix required to have full column rank is numerically rank
    /// deficient; `ratio` is the offending smallest-to-largest R-diagonal
    /// magnitude ratio.
    #[error("numerically rank deficient (diagonal ratio {ratio:e})")]
    RankDeficient { ratio: f64 },

    /// The Jacobi SVD did not converge within the sweep limit.
    #[error("SVD failed to converge after {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    /// A non-finite entry was found where the contract requires finite data.
    #[error("{op}: non-finite entry")]
    NonFinite { op: &'static str },
}

pub type Result<T> = core::result::Result<T, Error>;
