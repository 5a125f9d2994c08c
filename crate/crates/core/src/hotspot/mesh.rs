use std::collections::HashMap;

use crate::geom::{orient, Point2, Triangle};

/// A conforming P1 triangulation of a single triangle obtained by uniform
/// midpoint refinement.
#[derive(Clone, Debug, PartialEq)]
pub struct MeshP1 {
    pub vertices: Vec<Point2>,
    /// CCW vertex-index triples.
    pub elements: Vec<[usize; 3]>,
    /// Bit `k` set when the vertex lies on side `k` (AB, BC, CA) of the
    /// original triangle; corners carry two bits.
    pub side_mask: Vec<u8>,
    /// For each vertex the pair of coarse-level vertices it was created from;
    /// vertices inherited from the coarser mesh point to themselves.
    pub parents: Vec<(usize, usize)>,
    pub level: u32,
}

impl MeshP1 {
    pub fn is_boundary(&self, v: usize) -> bool {
        self.side_mask[v] != 0
    }

    pub fn boundary_mask(&self) -> Vec<bool> {
        self.side_mask.iter().map(|&m| m != 0).collect()
    }

    pub fn element_area(&self, e: usize) -> f64 {
        let [i, j, k] = self.elements[e];
        0.5 * orient(self.vertices[i], self.vertices[j], self.vertices[k])
    }

    pub fn total_area(&self) -> f64 {
        (0..self.elements.len()).map(|e| self.element_area(e)).sum()
    }

    /// Sorted neighbour lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &[i, j, k] in &self.elements {
            for (p, q) in [(i, j), (j, k), (k, i)] {
                adj[p].push(q);
                adj[q].push(p);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Interpolates nodal values from the parent mesh: inherited vertices
    /// keep their value, midpoints take the mean of their two parents.
    pub fn prolongate(&self, coarse: &[f64]) -> Vec<f64> {
        self.parents
            .iter()
            .map(|&(a, b)| 0.5 * (coarse[a] + coarse[b]))
            .collect()
    }

    /// Writes the plain-text dump: `v x y boundary_flag` per vertex, then
    /// `e i j k` per element.
    pub fn write_text(&self, out: &mut impl std::io::Write) -> std::io::Result<()> {
        for (v, p) in self.vertices.iter().enumerate() {
            writeln!(
                out,
                "v {:?} {:?} {}",
                p.x,
                p.y,
                u8::from(self.is_boundary(v))
            )?;
        }
        for [i, j, k] in &self.elements {
            writeln!(out, "e {i} {j} {k}")?;
        }
        Ok(())
    }
}

/// Expected vertex count after `level` uniform refinements of one triangle.
pub fn vertex_count(level: u32) -> usize {
    let n = (1usize << level) + 1;
    n * (n + 1) / 2
}

/// The triangle itself as a level-0 mesh.
pub fn base_mesh(tri: &Triangle) -> MeshP1 {
    MeshP1 {
        vertices: tri.vertices().to_vec(),
        elements: vec![[0, 1, 2]],
        // A on AB and CA, B on AB and BC, C on BC and CA.
        side_mask: vec![0b101, 0b011, 0b110],
        parents: vec![(0, 0), (1, 1), (2, 2)],
        level: 0,
    }
}

/// Uniform 4-way refinement. Each CCW element `(a, b, c)` with edge
/// midpoints `ab, bc, ca` becomes `(a, ab, ca)`, `(ab, b, bc)`, `(ca, bc, c)`
/// and `(ab, bc, ca)`.
pub fn subdivide(mesh: &MeshP1) -> MeshP1 {
    let mut vertices = mesh.vertices.clone();
    let mut side_mask = mesh.side_mask.clone();
    let mut parents: Vec<(usize, usize)> = (0..mesh.vertices.len()).map(|i| (i, i)).collect();
    let mut midpoints: HashMap<(usize, usize), usize> = HashMap::new();
    let mut midpoint = |i: usize, j: usize| -> usize {
        let key = (i.min(j), i.max(j));
        *midpoints.entry(key).or_insert_with(|| {
            vertices.push(mesh.vertices[i].midpoint(mesh.vertices[j]));
            // On a side of T only if both ends are on that same side.
            side_mask.push(mesh.side_mask[i] & mesh.side_mask[j]);
            parents.push(key);
            vertices.len() - 1
        })
    };
    let mut elements = Vec::with_capacity(4 * mesh.elements.len());
    for &[a, b, c] in &mesh.elements {
        let ab = midpoint(a, b);
        let bc = midpoint(b, c);
        let ca = midpoint(c, a);
        elements.push([a, ab, ca]);
        elements.push([ab, b, bc]);
        elements.push([ca, bc, c]);
        elements.push([ab, bc, ca]);
    }
    MeshP1 {
        vertices,
        elements,
        side_mask,
        parents,
        level: mesh.level + 1,
    }
}

/// `base_mesh` refined `level` times.
pub fn uniform_mesh(tri: &Triangle, level: u32) -> MeshP1 {
    (0..level).fold(base_mesh(tri), |m, _| subdivide(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::Benchmark;

    fn is_conforming(mesh: &MeshP1) -> bool {
        // Every interior edge is shared by exactly two elements with opposite
        // orientation, every boundary edge by one.
        let mut edges: HashMap<(usize, usize), i32> = HashMap::new();
        for &[i, j, k] in &mesh.elements {
            for (p, q) in [(i, j), (j, k), (k, i)] {
                *edges.entry((p, q)).or_default() += 1;
            }
        }
        edges.iter().all(|(&(p, q), &n)| {
            let twin = edges.get(&(q, p)).copied().unwrap_or(0);
            n == 1 && (twin == 1 || (mesh.is_boundary(p) && mesh.is_boundary(q)))
        })
    }

    #[test]
    fn base_mesh_of_t1() {
        let m = base_mesh(&Benchmark::T1.triangle());
        assert_eq!(m.vertices.len(), 3);
        assert_eq!(m.elements.len(), 1);
        assert!(m.boundary_mask().iter().all(|&b| b));
        assert!(is_conforming(&m));
    }

    #[test]
    fn base_mesh_of_t3_area() {
        let m = base_mesh(&Benchmark::T3.triangle());
        assert!((m.element_area(0) - 4.0 * 35f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn one_refinement() {
        let m = subdivide(&base_mesh(&Benchmark::T1.triangle()));
        assert_eq!(m.vertices.len(), 6);
        assert_eq!(m.elements.len(), 4);
        assert_eq!(m.boundary_mask().iter().filter(|&&b| b).count(), 6);
        assert_eq!(m.level, 1);
    }

    #[test]
    fn counts_areas_and_conformity() {
        let tri = Benchmark::T3.triangle();
        let mut m = base_mesh(&tri);
        for level in 1..=5 {
            m = subdivide(&m);
            assert_eq!(m.vertices.len(), vertex_count(level));
            assert_eq!(m.elements.len(), 1 << (2 * level));
            assert!((0..m.elements.len()).all(|e| m.element_area(e) > 0.0));
            assert!((m.total_area() - tri.area()).abs() < 1e-12 * tri.area());
            assert!(is_conforming(&m));
            let n = (1usize << level) as usize;
            assert_eq!(m.boundary_mask().iter().filter(|&&b| b).count(), 3 * n);
        }
    }

    #[test]
    fn boundary_vertices_lie_on_sides() {
        let tri = Benchmark::T2.triangle();
        let m = uniform_mesh(&tri, 4);
        for (v, p) in m.vertices.iter().enumerate() {
            let on_side = tri.side_distances(*p).iter().any(|d| d.abs() < 1e-14);
            assert_eq!(on_side, m.is_boundary(v), "vertex {v} {p:?}");
        }
    }

    #[test]
    fn text_dump_format() {
        let m = base_mesh(&Benchmark::T1.triangle());
        let mut buf = Vec::new();
        m.write_text(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "v 0.0 0.0 1\nv 1.0 0.0 1\nv 0.0 1.0 1\ne 0 1 2\n");
    }
}
