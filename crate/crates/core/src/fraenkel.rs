//! Fraenkel asymmetry and the equiareal disk center.
//!
//! For a triangle `T` the asymmetry of a center `c` is `|T △ D| / |T|` where
//! `D` is the disk of area `|T|` centered at `c`. The equiareal disk center is
//! the minimizer over `c`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{disk_triangle_intersection_area, Disk, Point2, Triangle};
use crate::numerics::{NelderMead, OptResult, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EquiarealResult {
    pub center: Point2,
    pub asymmetry: f64,
    pub radius: f64,
    pub iterations: usize,
    pub converged: bool,
    pub final_simplex_size: f64,
}

/// Radius of the disk with the same area as `tri`.
pub fn equiareal_radius(tri: &Triangle) -> f64 {
    (tri.area() / PI).sqrt()
}

pub fn equiareal_disk(tri: &Triangle, center: Point2) -> Disk {
    Disk::new(center, equiareal_radius(tri)).expect("positive radius")
}

/// `|T △ D| / |T| = 2 (|T| − |T ∩ D|) / |T|` for the equal-area disk at `center`.
pub fn asymmetry_at(tri: &Triangle, center: Point2) -> f64 {
    let area = tri.area();
    let overlap = disk_triangle_intersection_area(&equiareal_disk(tri, center), tri);
    (2.0 * (area - overlap) / area).clamp(0.0, 2.0)
}

/// Default coordinate tolerance: `1e-10` times the triangle diameter.
pub fn default_tolerance(tri: &Triangle) -> f64 {
    1e-10 * tri.diameter()
}

const VALUE_SPREAD: f64 = 1e-14;
const RESTARTS: usize = 3;

/// Locates the equiareal disk center to coordinate accuracy `tol`.
///
/// Nelder–Mead from the centroid plus three restarts from perturbed
/// centroids, each polished by quadratic fits on a 3×3 stencil. All polished
/// minimizers must agree within `10 tol`.
pub fn equiareal_center(tri: &Triangle, tol: f64) -> Result<EquiarealResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let inradius = tri.inradius();
    let centroid = tri.centroid();
    let objective = |p: Point2| asymmetry_at(tri, p);
    let nm = NelderMead::new(0.1 * inradius, tol)
        .with_value_tol(VALUE_SPREAD)
        .with_budget(DEFAULT_BUDGET);

    let mut runs: Vec<(OptResult, Point2)> = Vec::with_capacity(RESTARTS + 1);
    for k in 0..=RESTARTS {
        let start = if k == 0 {
            centroid
        } else {
            let angle = PI / 2.0 + 2.0 * PI * (k - 1) as f64 / RESTARTS as f64;
            centroid + Point2::new(angle.cos(), angle.sin()) * (0.2 * inradius)
        };
        let run = nm.minimize(objective, start);
        if !run.converged {
            return Err(Error::no_convergence(
                "Nelder-Mead",
                format!(
                    "simplex diameter {:e} after {} iterations (start {:?})",
                    run.simplex_diameter, run.iterations, start
                ),
            ));
        }
        let polished = polish(objective, run.argmin, tri.diameter());
        runs.push((run, polished));
    }

    let (primary, center) = runs[0];
    for (_, other) in &runs[1..] {
        let gap = other.distance(center);
        if gap > 10.0 * tol {
            return Err(Error::no_convergence(
                "Nelder-Mead",
                format!("restarts disagree by {gap:e} (> 10 tol = {:e})", 10.0 * tol),
            ));
        }
    }
    if !tri.contains_strict(center) {
        return Err(Error::no_convergence(
            "Nelder-Mead",
            format!("minimizer {center:?} is not interior"),
        ));
    }

    Ok(EquiarealResult {
        center,
        asymmetry: asymmetry_at(tri, center),
        radius: equiareal_radius(tri),
        iterations: runs.iter().map(|(r, _)| r.iterations).sum(),
        converged: true,
        final_simplex_size: primary.simplex_diameter,
    })
}

/// Newton steps on least-squares quadratic fits to a 3×3 stencil at
/// decreasing spacing. A step is kept only if the fitted Hessian is positive
/// definite and the step stays within the stencil.
fn polish(f: impl Fn(Point2) -> f64, start: Point2, diameter: f64) -> Point2 {
    let mut x = start;
    for rel in [1e-4, 1e-5] {
        let h = rel * diameter;
        let mut v = [[0.0; 3]; 3];
        for (i, row) in v.iter_mut().enumerate() {
            for (j, val) in row.iter_mut().enumerate() {
                *val = f(x + Point2::new((i as f64 - 1.0) * h, (j as f64 - 1.0) * h));
            }
        }
        let gx = (0..3).map(|j| v[2][j] - v[0][j]).sum::<f64>() / (6.0 * h);
        let gy = (0..3).map(|i| v[i][2] - v[i][0]).sum::<f64>() / (6.0 * h);
        let hxx = (0..3)
            .map(|j| v[2][j] - 2.0 * v[1][j] + v[0][j])
            .sum::<f64>()
            / (3.0 * h * h);
        let hyy = (0..3)
            .map(|i| v[i][2] - 2.0 * v[i][1] + v[i][0])
            .sum::<f64>()
            / (3.0 * h * h);
        let hxy = (v[2][2] - v[2][0] - v[0][2] + v[0][0]) / (4.0 * h * h);
        let det = hxx * hyy - hxy * hxy;
        if !(hxx > 0.0 && det > 0.0) {
            continue;
        }
        let step = Point2::new(-(hyy * gx - hxy * gy) / det, -(hxx * gy - hxy * gx) / det);
        if step.norm() <= 2.0 * h {
            x = x + step;
        }
    }
    x
}
