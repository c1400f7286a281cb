//! Crate-wide error type.
//!
//! One enum covers every fallible layer so that errors compose across
//! modules without conversion boilerplate. Variants carry enough context
//! to produce a useful one-line diagnostic; callers that need exit codes
//! map variants through [`Error::exit_code`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Family parameters outside the admissible set (a<=0 for the
    /// spacelike-circle family, (a,b)=(0,0) for hyperbolas, ...).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A requested evaluation point left the domain component of the
    /// family's base point.
    #[error("point out of domain: {0}")]
    OutOfDomain(String),

    /// Adaptive quadrature could not reach the requested tolerance
    /// within its subdivision budget.
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    /// Circle/hyperbola radius hit zero where a positive radius is required.
    #[error("zero radius: {0}")]
    ZeroRadius(String),

    /// A direction that must be lightlike is not.
    #[error("not lightlike: {0}")]
    NotLightlike(String),

    /// A direction is too close to zero to normalize.
    #[error("degenerate direction: {0}")]
    DegenerateDirection(String),

    /// Mean curvature is undefined where the induced metric degenerates.
    #[error("lightlike point: {0}")]
    LightlikePoint(String),

    /// The configured surface has no lightlike locus to analyze.
    #[error("no lightlike part: {0}")]
    NoLightlikePart(String),

    /// Not enough samples for the requested finite-difference stencil.
    #[error("too few samples: {0}")]
    TooFewSamples(String),

    /// A locus expected to be a straight line is not one.
    #[error("not a line: {0}")]
    NotALine(String),

    /// The transverse coordinate degenerates along the locus (x_2 = 0),
    /// so the graph slope alpha is undefined.
    #[error("degenerate transverse direction: {0}")]
    DegenerateTransverse(String),

    /// The y-samples along the normalized line are not strictly monotone.
    #[error("non-monotone y along line: {0}")]
    NonMonotoneY(String),

    /// Measured alpha data is inconsistent with every solution family of
    /// the characteristic equation.
    #[error("inconsistent alpha data: {0}")]
    Inconsistent(String),

    /// Root bracketing failed (height solver, locus refinement).
    #[error("bracketing failed: {0}")]
    BracketFailure(String),

    /// No closed-form template applies to the requested alpha type.
    #[error("no closed form: {0}")]
    NoClosedForm(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Process exit codes used by the command-line entry points.
///
/// 0 success, 1 verification/agreement failure, 2 bad input,
/// 3 i/o failure, 4 precondition not met (e.g. no lightlike line).
impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_) | Error::OutOfDomain(_) | Error::ZeroRadius(_) => 2,
            Error::Io(_) | Error::Json(_) => 3,
            Error::NoLightlikePart(_)
            | Error::NotLightlike(_)
            | Error::DegenerateDirection(_)
            | Error::LightlikePoint(_)
            | Error::NotALine(_)
            | Error::DegenerateTransverse(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
