//! Three non-classical triangle centers and the numerical machinery behind them.
//!
//! * [`fraenkel`]: the equiareal disk center, i.e. the center of the equal-area
//!   disk minimizing the symmetric difference with the triangle.
//! * [`illuminating`]: the point where the three vertex-pair subtriangles have
//!   equal angle-to-area ratios, which maximizes the regularized inverse-square
//!   brightness integral.
//! * [`hotspot`]: the maximum of the first Dirichlet eigenfunction of the
//!   Laplacian, in closed form for two reference triangles and by linear finite
//!   elements in general.
//!
//! [`geom`] holds the planar primitives (including an exact disk/triangle
//! intersection area) and [`numerics`] the optimizers, root finder, quadrature,
//! sparse solver and Monte Carlo oracle shared by the three.

pub mod error;
pub mod fraenkel;
pub mod geom;
pub mod hotspot;
pub mod illuminating;
pub mod numerics;
pub mod reference;
pub mod verification;

pub use error::{Error, Result};
pub use geom::{CenterKind, Disk, Point2, Side, Similarity, Triangle};
