use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("degenerate triangle: |signed area| {area:e} below threshold {threshold:e}")]
    DegenerateTriangle { area: f64, threshold: f64 },
    #[error("line is defined by two identical points")]
    IdenticalLinePoints,
    #[error("angle ray has zero length")]
    CoincidentPoints,
    #[error("degenerate subtriangle: points are collinear")]
    DegenerateSubtriangle,
    #[error("point is within {eps:e} of the triangle boundary")]
    TooCloseToBoundary { eps: f64 },
    #[error("iterate left the triangle and damping could not recover")]
    LeftDomain,
    #[error("mesh has no interior vertices")]
    NoInteriorVertices,
    #[error("{solver} did not converge: {reason}")]
    NoConvergence {
        solver: &'static str,
        reason: String,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn no_convergence(solver: &'static str, reason: impl Into<String>) -> Self {
        Error::NoConvergence {
            solver,
            reason: reason.into(),
        }
    }
}
