//! Closed-form first Dirichlet eigenfunctions of the two reference triangles.

use std::f64::consts::PI;

use crate::geom::Point2;
use crate::numerics::Newton2;
use crate::reference::Benchmark;

use super::{HotspotMethod, HotspotResult};

/// Which closed-form eigenfunction to use. The coordinates are those of the
/// benchmark triangles, `T1 = (0,0),(1,0),(0,1)` and `T2 = (0,0),(1,0),(0,√3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticKind {
    T1,
    T2,
}

impl AnalyticKind {
    pub fn benchmark(self) -> Benchmark {
        match self {
            AnalyticKind::T1 => Benchmark::T1,
            AnalyticKind::T2 => Benchmark::T2,
        }
    }

    /// Frequencies `(a, b)` of the `sin(a x) sin(b y)` terms.
    fn modes(self) -> &'static [(f64, f64)] {
        const S3: f64 = 1.732_050_807_568_877_2;
        const T1: [(f64, f64); 2] = [(PI, 2.0 * PI), (2.0 * PI, PI)];
        const T2: [(f64, f64); 3] = [
            (PI / 3.0, S3 * PI),
            (4.0 * PI / 3.0, 2.0 * PI / S3),
            (5.0 * PI / 3.0, PI / S3),
        ];
        match self {
            AnalyticKind::T1 => &T1,
            AnalyticKind::T2 => &T2,
        }
    }

    /// `a² + b²`, shared by every mode.
    pub fn eigenvalue(self) -> f64 {
        let (a, b) = self.modes()[0];
        a * a + b * b
    }
}

pub fn analytic_eigenfunction(kind: AnalyticKind, p: Point2) -> f64 {
    kind.modes()
        .iter()
        .map(|&(a, b)| (a * p.x).sin() * (b * p.y).sin())
        .sum()
}

pub fn analytic_gradient(kind: AnalyticKind, p: Point2) -> [f64; 2] {
    kind.modes().iter().fold([0.0, 0.0], |g, &(a, b)| {
        let (sx, cx) = (a * p.x).sin_cos();
        let (sy, cy) = (b * p.y).sin_cos();
        [g[0] + a * cx * sy, g[1] + b * sx * cy]
    })
}

pub fn analytic_hotspot(kind: AnalyticKind) -> HotspotResult {
    let (center, converged) = match kind {
        AnalyticKind::T1 => {
            // cos(π x) = 1/√3 on the diagonal.
            let x = (1.0 / 3f64.sqrt()).acos() / PI;
            (Point2::new(x, x), true)
        }
        AnalyticKind::T2 => {
            let tri = kind.benchmark().triangle();
            let r = Newton2::new(1e-13, 1e-6).solve(
                |p| analytic_gradient(kind, p),
                tri.centroid(),
                |p| tri.contains_strict(p),
            );
            (r.root, r.converged)
        }
    };
    HotspotResult {
        center,
        eigenvalue: kind.eigenvalue(),
        mesh_level: 0,
        method: HotspotMethod::Analytic,
        converged,
        history: Vec::new(),
    }
}
