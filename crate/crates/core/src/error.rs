use thiserror::Error;

/// Errors raised by solvers, validators and the instance file layer.
///
/// Every variant maps to a stable machine-readable code (see [`Error::code`])
/// which the command-line front end prints on stderr.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed instance: {0}")]
    Schema(String),
    #[error("invalid rational literal {0:?}")]
    Rational(String),
    #[error("point count must be even and positive, got {0}")]
    OddCount(usize),
    #[error("colors are not balanced: {blue} blue vs {red} red")]
    Unbalanced { blue: usize, red: usize },
    #[error("duplicate point at index {0}")]
    Duplicate(usize),
    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("points are not listed in counterclockwise convex position (at index {0})")]
    NotConvex(usize),
    #[error("angles must be strictly increasing within [0, 1) turns (at index {0})")]
    BadAngles(usize),
    #[error("a point coincides with the intersection of the two lines")]
    XInP,
    #[error("the supporting lines are parallel")]
    ParallelLines,
    #[error("direction vectors must have unit length")]
    DirectionNotUnit,
    #[error("color annotations are inconsistent with the instance mode")]
    ColorMode,
    #[error("pair ({0}, {1}) reuses a point of another pair")]
    SharedEndpoint(usize, usize),
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("edge ({0}, {1}) is not feasible")]
    InfeasibleEdge(usize, usize),
    #[error("matching is not a valid perfect non-crossing matching")]
    InvalidMatching,
    #[error("instance has {size} points, enumeration cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("no perfect non-crossing matching exists")]
    NoMatching,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("generator gave up after {0} attempts")]
    RejectionBudget(usize),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Schema(_) => "E_SCHEMA",
            Error::Rational(_) => "E_RATIONAL",
            Error::OddCount(_) => "E_ODD_COUNT",
            Error::Unbalanced { .. } => "E_UNBALANCED",
            Error::Duplicate(_) => "E_DUPLICATE",
            Error::Collinear(..) => "E_COLLINEAR",
            Error::NotConvex(_) => "E_NOT_CONVEX",
            Error::BadAngles(_) => "E_BAD_ANGLES",
            Error::XInP => "E_X_IN_P",
            Error::ParallelLines => "E_PARALLEL_LINES",
            Error::DirectionNotUnit => "E_DIRECTION_NOT_UNIT",
            Error::ColorMode => "E_COLOR_MODE",
            Error::SharedEndpoint(..) => "E_SHARED_ENDPOINT",
            Error::IndexOutOfRange(_) => "E_INDEX",
            Error::InfeasibleEdge(..) => "E_INFEASIBLE_EDGE",
            Error::InvalidMatching => "E_INVALID_MATCHING",
            Error::CapExceeded { .. } => "E_CAP_EXCEEDED",
            Error::NoMatching => "E_NO_MATCHING",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::Unsupported(_) => "E_UNSUPPORTED",
            Error::RejectionBudget(_) => "E_REJECTION_BUDGET",
        }
    }

    /// True for errors caused by the input document rather than by a request.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Unsupported(_) | Error::CapExceeded { .. } | Error::Precondition(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
