//! Numerical building blocks shared by the three center computations.

pub mod diff;
pub mod monte_carlo;
pub mod nelder_mead;
pub mod newton;
pub mod quadrature;
pub mod sparse;

pub use diff::{central_gradient, central_jacobian};
pub use monte_carlo::{mc_area, McEstimate};
pub use nelder_mead::{nelder_mead, NelderMead, OptResult};
pub use newton::{newton2, Newton2, RootResult, StopReason};
pub use quadrature::integrate;
pub use sparse::{pcg, sparse_solve, CgOutcome, SparseSym};

/// Default iteration budget for the optimizers.
pub const DEFAULT_BUDGET: usize = 10_000;
