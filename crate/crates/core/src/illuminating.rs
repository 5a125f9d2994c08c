//! The illuminating center: the interior point `P` where the angle-to-area
//! ratios `ρ(APB)`, `ρ(BPC)`, `ρ(CPA)` coincide, and the regularized
//! inverse-square brightness it maximizes.

use crate::error::{Error, Result};
use crate::geom::{orient, Point2, Triangle, DEGENERACY_FACTOR};
use crate::numerics::{integrate, Newton2, StopReason, DEFAULT_BUDGET};

/// An angle-to-area ratio, in radians per unit area.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct RhoValue(pub f64);

impl RhoValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IlluminatingResult {
    pub center: Point2,
    /// Mean of the three ratios at `center`.
    pub rho: RhoValue,
    /// `|F| / ρ_mean` at `center`.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// `∠UPV / |UPV|`, the angle from the normalized dot product and the area
/// from Heron's formula on the three side lengths.
pub fn rho(u: Point2, p: Point2, v: Point2) -> Result<RhoValue> {
    let du = (u - p).dot(u - p).sqrt();
    let dv = (v - p).dot(v - p).sqrt();
    let duv = (u - v).dot(u - v).sqrt();
    let longest = du.max(dv).max(duv);
    if !(0.5 * orient(u, p, v).abs() >= DEGENERACY_FACTOR * longest * longest) || longest == 0.0 {
        return Err(Error::DegenerateSubtriangle);
    }
    let cos = ((u - p).dot(v - p) / (du * dv)).clamp(-1.0, 1.0);
    let sigma = (du + dv + duv) / 2.0;
    let heron = ((sigma - du) * (sigma - dv) * (sigma - duv) * sigma).sqrt();
    if !(heron > 0.0) {
        return Err(Error::DegenerateSubtriangle);
    }
    Ok(RhoValue(cos.acos() / heron))
}

/// `[ρ(APB), ρ(BPC), ρ(CPA)]`.
pub fn rho_triple(tri: &Triangle, p: Point2) -> Result<[f64; 3]> {
    let [a, b, c] = tri.vertices();
    Ok([rho(a, p, b)?.0, rho(b, p, c)?.0, rho(c, p, a)?.0])
}

/// The equal-ratio system `(ρ(APB)−ρ(BPC), ρ(BPC)−ρ(CPA)) / ρ_mean`.
pub fn equal_rho_residual(tri: &Triangle, p: Point2) -> Result<[f64; 2]> {
    let [r0, r1, r2] = rho_triple(tri, p)?;
    let mean = (r0 + r1 + r2) / 3.0;
    Ok([(r0 - r1) / mean, (r1 - r2) / mean])
}

pub const DEFAULT_TOL: f64 = 1e-12;

/// Solves the equal-ratio system by damped Newton from the centroid, with
/// restarts from the incenter and the midpoint of the two.
pub fn illuminating_center(tri: &Triangle, tol: f64) -> Result<IlluminatingResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let system = |p: Point2| equal_rho_residual(tri, p).unwrap_or([f64::NAN; 2]);
    let inside = |p: Point2| tri.contains_strict(p);
    let newton = Newton2::new(tol, 1e-7 * tri.diameter()).with_budget(DEFAULT_BUDGET);

    let centroid = tri.centroid();
    let incenter = crate::geom::classical_center(tri, crate::geom::CenterKind::Incenter);
    let starts = [centroid, incenter, centroid.midpoint(incenter)];
    let mut iterations = 0;
    let mut left_domain = true;
    let mut last = None;
    for start in starts {
        let r = newton.solve(system, start, inside);
        iterations += r.iterations;
        if r.converged {
            let rhos = rho_triple(tri, r.root)?;
            return Ok(IlluminatingResult {
                center: r.root,
                rho: RhoValue(rhos.iter().sum::<f64>() / 3.0),
                residual: r.residual_norm,
                iterations,
                converged: true,
            });
        }
        left_domain &= r.stop == StopReason::DampingUnderflow;
        last = Some(r);
    }
    if left_domain {
        return Err(Error::LeftDomain);
    }
    let r = last.expect("at least one start");
    Err(Error::no_convergence(
        "damped Newton",
        format!(
            "residual {:e} ({:?}) after restarts",
            r.residual_norm, r.stop
        ),
    ))
}

/// `∬_{T∖D_ε(p)} |x − p|⁻² dA`.
///
/// Each corner subtriangle `(p, U, V)` is integrated in polar coordinates
/// about `p`: the radial integral is `ln(r_max(θ)/ε)` and the angular one is
/// done by adaptive Gauss–Kronrod.
pub fn regularized_brightness(tri: &Triangle, p: Point2, eps: f64) -> Result<f64> {
    if !(eps > 0.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "need finite p and eps > 0, got eps = {eps}"
        )));
    }
    if !(tri.signed_boundary_distance(p) > eps) {
        return Err(Error::TooCloseToBoundary { eps });
    }
    let [a, b, c] = tri.vertices();
    let mut total = 0.0;
    for (u, v) in [(a, b), (b, c), (c, a)] {
        let edge = v - u;
        let outward = Point2::new(edge.y, -edge.x) * (1.0 / edge.norm());
        let dist = outward.dot(u - p);
        let rel_angle = |w: Point2| outward.cross(w - p).atan2(outward.dot(w - p));
        let (lo, hi) = (rel_angle(u), rel_angle(v));
        let log_d = (dist / eps).ln();
        // r_max = d / cos(α) on the ray at angle α from the foot of the perpendicular.
        let (value, _) = integrate(|alpha| log_d - alpha.cos().ln(), lo, hi, 1e-14, 1e-15);
        total += value;
    }
    Ok(total)
}
