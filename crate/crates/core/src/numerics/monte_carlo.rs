//! Hit-or-miss Monte Carlo area estimates, used as an independent oracle for
//! the exact intersection-area kernel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::Point2;

/// Mean and standard error of a Monte Carlo area estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

impl McEstimate {
    /// Number of standard errors separating the estimate from `value`.
    /// Zero-variance estimates must match exactly.
    pub fn z_score(&self, value: f64) -> f64 {
        let diff = (self.mean - value).abs();
        if self.stderr == 0.0 {
            if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff / self.stderr
        }
    }
}

/// Estimates the area of `{p in bbox : inside(p)}` from `samples` uniform
/// draws of a ChaCha8 stream seeded with `seed`.
///
/// The standard error is the sample standard deviation of the scaled hit
/// indicator over `sqrt(samples)`.
pub fn mc_area(
    mut inside: impl FnMut(Point2) -> bool,
    bbox: (Point2, Point2),
    samples: usize,
    seed: u64,
) -> McEstimate {
    assert!(samples >= 2, "need at least two samples");
    let (lo, hi) = bbox;
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let box_area = w * h;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..samples {
        let p = Point2::new(
            lo.x + w * rng.random::<f64>(),
            lo.y + h * rng.random::<f64>(),
        );
        if inside(p) {
            hits += 1;
        }
    }
    let n = samples as f64;
    let frac = hits as f64 / n;
    let var = frac * (1.0 - frac) * n / (n - 1.0);
    McEstimate {
        mean: frac * box_area,
        stderr: box_area * (var / n).sqrt(),
        samples,
        seed,
    }
}
