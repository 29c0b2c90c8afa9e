use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// No index with a ratio bound below one was found, or the term budget
    /// ran out before the requested tolerance was reached.
    #[error("series does not contract: {0}")]
    NonContracting(String),

    #[error("series is not alternating with decreasing magnitudes at index {index}")]
    NotAlternating { index: u64 },

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// An endpoint enclosure of Q still contains zero at the smallest
    /// tolerance. `r` is the straddling point and `half_width` the bracket
    /// half-width at the time of failure.
    #[error("sign of Q is ambiguous at r = {r} (half-width {half_width})")]
    SignAmbiguous { r: f64, half_width: f64 },

    #[error("no sign change on the search interval: Q(left) = [{left_lo}, {left_hi}], Q(right) = [{right_lo}, {right_hi}]")]
    NoBracket {
        left_lo: f64,
        left_hi: f64,
        right_lo: f64,
        right_hi: f64,
    },

    #[error("theorem {theorem} does not apply to class {class}")]
    MismatchedVariant { theorem: String, class: String },
}

impl Error {
    /// True for failures of the radius solver.
    pub fn is_solver_error(&self) -> bool {
        matches!(
            self,
            Error::SignAmbiguous { .. } | Error::NoBracket { .. } | Error::NonContracting(_)
        )
    }
}
