//! The thermodynamic center (hot spot): the maximum of the first Dirichlet
//! eigenfunction of the Laplacian on the triangle.
//!
//! Closed forms exist for the two reference triangles ([`analytic`]). In
//! general the eigenproblem is discretized with linear elements on uniformly
//! refined meshes ([`mesh`], [`fem`]); the discrete maximum is refined by a
//! local quadratic fit and Richardson-extrapolated across the last two levels.

pub mod analytic;
pub mod fem;
pub mod mesh;

pub use crate::numerics::SparseSym;
pub use analytic::{analytic_eigenfunction, analytic_gradient, analytic_hotspot, AnalyticKind};
pub use fem::{assemble, local_mass, local_stiffness, smallest_eigenpair, Assembly, EigenPair};
pub use mesh::{base_mesh, subdivide, uniform_mesh, vertex_count, MeshP1};

use crate::error::{Error, Result};
use crate::geom::{Point2, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HotspotMethod {
    Analytic,
    Fem,
}

impl HotspotMethod {
    pub fn name(self) -> &'static str {
        match self {
            HotspotMethod::Analytic => "analytic",
            HotspotMethod::Fem => "fem",
        }
    }
}

/// What one refinement level produced.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelEstimate {
    pub level: u32,
    pub eigenvalue: f64,
    /// Position of the largest nodal value.
    pub argmax_vertex: Point2,
    /// Maximum of the quadratic fitted around `argmax_vertex`.
    pub fitted: Point2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HotspotResult {
    pub center: Point2,
    pub eigenvalue: f64,
    pub mesh_level: u32,
    pub method: HotspotMethod,
    pub converged: bool,
    /// Per-level estimates, coarsest first. Empty for analytic results.
    pub history: Vec<LevelEstimate>,
}

pub const FIRST_LEVEL: u32 = 4;
pub const DEFAULT_LEVEL: u32 = 7;
pub const EIGEN_TOL: f64 = 1e-10;

/// FEM hot spot with Richardson extrapolation over the two finest levels.
///
/// Levels `4..=max_level` are solved in turn, each eigensolve warm-started
/// from the prolongated coarser eigenvector. `converged` reports whether the
/// Richardson correction is at most `tol`.
pub fn thermodynamic_center(tri: &Triangle, max_level: u32, tol: f64) -> Result<HotspotResult> {
    if max_level < FIRST_LEVEL {
        return Err(Error::InvalidArgument(format!(
            "max_level must be at least {FIRST_LEVEL}, got {max_level}"
        )));
    }
    let mut mesh = uniform_mesh(tri, FIRST_LEVEL);
    let mut history = Vec::new();
    let mut previous: Option<Vec<f64>> = None;
    loop {
        let asm = assemble(&mesh)?;
        let initial = previous
            .as_ref()
            .map(|coarse| asm.from_vertex_values(&mesh.prolongate(coarse)));
        let pair =
            fem::smallest_eigenpair_from(&asm.stiffness, &asm.mass, EIGEN_TOL, initial.as_deref())?;
        let values = asm.to_vertex_values(&pair.coefficients);
        let (argmax, fitted) = locate_maximum(&mesh, &values);
        history.push(LevelEstimate {
            level: mesh.level,
            eigenvalue: pair.eigenvalue,
            argmax_vertex: mesh.vertices[argmax],
            fitted,
        });
        if mesh.level == max_level {
            break;
        }
        previous = Some(values);
        mesh = subdivide(&mesh);
    }

    let fine = history[history.len() - 1];
    let (center, correction) = match history.len() {
        1 => (fine.fitted, f64::INFINITY),
        n => {
            let coarse = history[n - 2];
            // O(h²) error, h halves per level.
            let delta = (fine.fitted - coarse.fitted) * (1.0 / 3.0);
            (fine.fitted + delta, delta.norm())
        }
    };
    Ok(HotspotResult {
        center,
        eigenvalue: fine.eigenvalue,
        mesh_level: max_level,
        method: HotspotMethod::Fem,
        converged: correction <= tol,
        history,
    })
}

/// Largest nodal value and the maximizer of a least-squares quadratic over
/// its vertex star. Falls back to the vertex itself when the fit is not
/// concave or its maximum leaves the star.
pub(crate) fn locate_maximum(mesh: &MeshP1, values: &[f64]) -> (usize, Point2) {
    let argmax = (0..values.len())
        .filter(|&v| !mesh.is_boundary(v))
        .max_by(|&a, &b| values[a].total_cmp(&values[b]))
        .expect("mesh has interior vertices");
    let x0 = mesh.vertices[argmax];
    let star = &mesh.adjacency()[argmax];
    let h = star
        .iter()
        .map(|&v| mesh.vertices[v].distance(x0))
        .sum::<f64>()
        / star.len() as f64;

    // Basis (1, dx, dy, dx², dx dy, dy²) in units of h.
    let mut ata = [[0.0; 6]; 6];
    let mut atb = [0.0; 6];
    for &v in std::iter::once(&argmax).chain(star) {
        let d = (mesh.vertices[v] - x0) * (1.0 / h);
        let basis = [1.0, d.x, d.y, d.x * d.x, d.x * d.y, d.y * d.y];
        for i in 0..6 {
            atb[i] += basis[i] * values[v];
            for j in 0..6 {
                ata[i][j] += basis[i] * basis[j];
            }
        }
    }
    let Some(c) = solve6(ata, atb) else {
        return (argmax, x0);
    };
    let (hxx, hxy, hyy) = (2.0 * c[3], c[4], 2.0 * c[5]);
    let det = hxx * hyy - hxy * hxy;
    if !(hxx < 0.0 && det > 0.0) {
        return (argmax, x0);
    }
    let step = Point2::new(
        -(hyy * c[1] - hxy * c[2]) / det,
        -(hxx * c[2] - hxy * c[1]) / det,
    );
    if step.norm() > 1.5 {
        return (argmax, x0);
    }
    (argmax, x0 + step * h)
}

/// Gaussian elimination with partial pivoting.
fn solve6(mut a: [[f64; 6]; 6], mut b: [f64; 6]) -> Option<[f64; 6]> {
    for col in 0..6 {
        let pivot = (col..6).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..6 {
            let f = a[row][col] / a[col][col];
            for k in col..6 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 6];
    for row in (0..6).rev() {
        let s: f64 = (row + 1..6).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}
