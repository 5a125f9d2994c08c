//! Linear-element assembly and the smallest generalized eigenpair.

use crate::error::{Error, Result};
use crate::geom::{orient, Point2};
use crate::numerics::sparse::{dot, norm};
use crate::numerics::{pcg, SparseSym};

use super::mesh::MeshP1;

/// Gradient inner products of the three hat functions on one element.
pub fn local_stiffness(p: [Point2; 3]) -> [[f64; 3]; 3] {
    let area = 0.5 * orient(p[0], p[1], p[2]);
    // ∇φ_i = (y_j − y_k, x_k − x_j) / (2A) for (i, j, k) cyclic.
    let grads: [Point2; 3] = std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        Point2::new(p[j].y - p[k].y, p[k].x - p[j].x)
    });
    let mut k = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            k[i][j] = grads[i].dot(grads[j]) / (4.0 * area);
        }
    }
    k
}

/// Consistent mass matrix `A/12 · [[2,1,1],[1,2,1],[1,1,2]]`.
pub fn local_mass(p: [Point2; 3]) -> [[f64; 3]; 3] {
    let area = 0.5 * orient(p[0], p[1], p[2]);
    let mut m = [[area / 12.0; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = area / 6.0;
    }
    m
}

/// Stiffness and mass restricted to the interior (free) vertices.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub stiffness: SparseSym,
    pub mass: SparseSym,
    /// Mesh vertex of each free degree of freedom.
    pub free_vertices: Vec<usize>,
    /// Degree of freedom of each mesh vertex, `None` on the boundary.
    pub dof_of_vertex: Vec<Option<usize>>,
}

impl Assembly {
    /// Expands free-vertex coefficients to all mesh vertices (zero on ∂T).
    pub fn to_vertex_values(&self, coeffs: &[f64]) -> Vec<f64> {
        self.dof_of_vertex
            .iter()
            .map(|d| d.map_or(0.0, |d| coeffs[d]))
            .collect()
    }

    pub fn from_vertex_values(&self, values: &[f64]) -> Vec<f64> {
        self.free_vertices.iter().map(|&v| values[v]).collect()
    }
}

/// Assembles `K` and `M` with Dirichlet rows and columns eliminated.
pub fn assemble(mesh: &MeshP1) -> Result<Assembly> {
    let mut dof_of_vertex = vec![None; mesh.vertices.len()];
    let mut free_vertices = Vec::new();
    for v in 0..mesh.vertices.len() {
        if !mesh.is_boundary(v) {
            dof_of_vertex[v] = Some(free_vertices.len());
            free_vertices.push(v);
        }
    }
    if free_vertices.is_empty() {
        return Err(Error::NoInteriorVertices);
    }
    let mut kt = Vec::with_capacity(9 * mesh.elements.len());
    let mut mt = Vec::with_capacity(9 * mesh.elements.len());
    for el in &mesh.elements {
        let pts = el.map(|v| mesh.vertices[v]);
        let kl = local_stiffness(pts);
        let ml = local_mass(pts);
        for a in 0..3 {
            let Some(i) = dof_of_vertex[el[a]] else {
                continue;
            };
            for b in 0..3 {
                let Some(j) = dof_of_vertex[el[b]] else {
                    continue;
                };
                kt.push((i, j, kl[a][b]));
                mt.push((i, j, ml[a][b]));
            }
        }
    }
    let n = free_vertices.len();
    Ok(Assembly {
        stiffness: SparseSym::from_triplets(n, kt)?,
        mass: SparseSym::from_triplets(n, mt)?,
        free_vertices,
        dof_of_vertex,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub eigenvalue: f64,
    /// Per free vertex, positive, scaled to unit maximum.
    pub coefficients: Vec<f64>,
    pub iterations: usize,
    /// `‖K v − λ M v‖ / ‖λ M v‖`.
    pub residual: f64,
}

const MAX_OUTER: usize = 1000;
const STALL_CHECK: usize = 60;

/// Smallest eigenpair of `K v = λ M v` by inverse iteration with
/// Jacobi-preconditioned CG solves.
pub fn smallest_eigenpair(stiffness: &SparseSym, mass: &SparseSym, tol: f64) -> Result<EigenPair> {
    smallest_eigenpair_from(stiffness, mass, tol, None)
}

/// As [`smallest_eigenpair`], starting from `initial` when given (e.g. a
/// prolongated coarse-mesh eigenvector).
///
/// The iteration runs unshifted; if it has not converged after a while it
/// switches to a shift just below the current Rayleigh quotient, which
/// keeps `K − σM` positive definite.
pub fn smallest_eigenpair_from(
    stiffness: &SparseSym,
    mass: &SparseSym,
    tol: f64,
    initial: Option<&[f64]>,
) -> Result<EigenPair> {
    let n = stiffness.dim();
    if mass.dim() != n || n == 0 {
        return Err(Error::InvalidArgument("matrix dimensions disagree".into()));
    }
    let mut v: Vec<f64> = match initial {
        Some(x) if x.len() == n && x.iter().any(|&c| c != 0.0) => x.to_vec(),
        _ => vec![1.0; n],
    };
    normalize_m(mass, &mut v);
    let mut lambda = stiffness.bilinear(&v, &v);
    let mut shift = 0.0;
    let mut shifted: Option<SparseSym> = None;
    let cg_tol = (tol * 1e-3).max(1e-14);
    let cg_budget = 20 * n.max(100);

    let mut mv = mass.mul_vec(&v);
    for it in 1..=MAX_OUTER {
        let op = shifted.as_ref().unwrap_or(stiffness);
        // Near convergence K⁻¹ M v ≈ v / (λ − σ).
        let guess: Vec<f64> = v.iter().map(|c| c / (lambda - shift)).collect();
        let out = pcg(op, &mv, guess, cg_tol, cg_budget);
        if !out.converged {
            return Err(Error::no_convergence(
                "inverse iteration",
                format!(
                    "inner CG stalled at relative residual {:e}",
                    out.relative_residual
                ),
            ));
        }
        v = out.x;
        normalize_m(mass, &mut v);
        mv = mass.mul_vec(&v);
        let kv = stiffness.mul_vec(&v);
        lambda = dot(&v, &kv);
        let res: Vec<f64> = kv.iter().zip(&mv).map(|(k, m)| k - lambda * m).collect();
        let residual = norm(&res) / (lambda * norm(&mv));
        if residual <= tol {
            let max_abs = v
                .iter()
                .fold(0.0f64, |m, c| if c.abs() > m.abs() { *c } else { m });
            let coefficients = v.iter().map(|c| c / max_abs).collect();
            return Ok(EigenPair {
                eigenvalue: lambda,
                coefficients,
                iterations: it,
                residual,
            });
        }
        if it == STALL_CHECK && shifted.is_none() {
            shift = 0.9 * lambda;
            shifted = Some(shift_matrix(stiffness, mass, shift)?);
        }
    }
    Err(Error::no_convergence(
        "inverse iteration",
        format!("no convergence in {MAX_OUTER} iterations"),
    ))
}

fn normalize_m(mass: &SparseSym, v: &mut [f64]) {
    let s = mass.bilinear(v, v).sqrt();
    v.iter_mut().for_each(|c| *c /= s);
}

fn shift_matrix(k: &SparseSym, m: &SparseSym, sigma: f64) -> Result<SparseSym> {
    let mut trip = Vec::with_capacity(k.nnz());
    for r in 0..k.dim() {
        trip.extend(k.row(r).map(|(c, v)| (r, c, v)));
        trip.extend(m.row(r).map(|(c, v)| (r, c, -sigma * v)));
    }
    SparseSym::from_triplets(k.dim(), trip)
}
