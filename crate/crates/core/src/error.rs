use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An operation that requires a nonzero polynomial received the zero
    /// polynomial.
    ZeroPolynomial,
    /// The simultaneous-iteration root finder did not reach the requested
    /// residual; carries the best residual achieved.
    RootsDidNotConverge { residual: f64 },
    /// A degree (or node-count) cap was exceeded.
    DegreeCapExceeded { required: usize, cap: usize },
    /// No repelling fixed or 2-periodic start point was found for the
    /// backward-iteration sampler.
    NoRepellingStartPoint,
    /// The point handed to the cycle classifier does not close up into a
    /// cycle within tolerance.
    NotACycle { residual: f64 },
    /// More than 1% of Monte Carlo samples fell below the underflow floor.
    ExcessiveRejections { rejected: u64, total: u64 },
    /// A numeric operation produced a non-finite coefficient or value.
    NonFinite,
    /// Precondition violation described by the message.
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::RootsDidNotConverge { residual } => {
                write!(f, "root finder did not converge (best residual {residual:e})")
            }
            Error::DegreeCapExceeded { required, cap } => {
                write!(f, "degree cap exceeded: required {required}, cap {cap}")
            }
            Error::NoRepellingStartPoint => {
                write!(f, "no repelling fixed or 2-periodic point found for sampler start")
            }
            Error::NotACycle { residual } => {
                write!(f, "point is not on a cycle of the requested period (residual {residual:e})")
            }
            Error::ExcessiveRejections { rejected, total } => {
                write!(f, "underflow rejections exceeded 1% of samples ({rejected}/{total})")
            }
            Error::NonFinite => write!(f, "non-finite value in numeric computation"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}
