//! Nelder–Mead simplex minimization in the plane.

use crate::geom::Point2;

use super::DEFAULT_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptResult {
    pub argmin: Point2,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Largest vertex-to-vertex distance of the final simplex.
    pub simplex_diameter: f64,
}

/// Simplex settings. `value_tol` adds an objective-spread requirement on top
/// of the diameter test; it is off (`INFINITY`) by default.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NelderMead {
    pub scale: f64,
    pub tol: f64,
    pub value_tol: f64,
    pub budget: usize,
}

impl NelderMead {
    pub fn new(scale: f64, tol: f64) -> Self {
        NelderMead {
            scale,
            tol,
            value_tol: f64::INFINITY,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_value_tol(mut self, value_tol: f64) -> Self {
        self.value_tol = value_tol;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn minimize(&self, mut f: impl FnMut(Point2) -> f64, start: Point2) -> OptResult {
        const REFLECT: f64 = 1.0;
        const EXPAND: f64 = 2.0;
        const CONTRACT: f64 = 0.5;
        const SHRINK: f64 = 0.5;

        // Right-angle initial simplex.
        let mut simplex = [
            start,
            start + Point2::new(self.scale, 0.0),
            start + Point2::new(0.0, self.scale),
        ];
        let mut values = simplex.map(&mut f);
        let mut iterations = 0;

        loop {
            sort_simplex(&mut simplex, &mut values);
            let diameter = simplex_diameter(&simplex);
            let spread = values[2] - values[0];
            if diameter < self.tol && spread <= self.value_tol {
                return OptResult {
                    argmin: simplex[0],
                    value: values[0],
                    iterations,
                    converged: true,
                    simplex_diameter: diameter,
                };
            }
            if iterations >= self.budget {
                return OptResult {
                    argmin: simplex[0],
                    value: values[0],
                    iterations,
                    converged: false,
                    simplex_diameter: diameter,
                };
            }
            iterations += 1;

            let centroid = simplex[0].midpoint(simplex[1]);
            let worst = simplex[2];
            let reflected = centroid + (centroid - worst) * REFLECT;
            let fr = f(reflected);

            if fr < values[0] {
                let expanded = centroid + (centroid - worst) * EXPAND;
                let fe = f(expanded);
                if fe < fr {
                    simplex[2] = expanded;
                    values[2] = fe;
                } else {
                    simplex[2] = reflected;
                    values[2] = fr;
                }
                continue;
            }
            if fr < values[1] {
                simplex[2] = reflected;
                values[2] = fr;
                continue;
            }

            // Contraction, outside if the reflection beat the worst point.
            let (contracted, threshold) = if fr < values[2] {
                (centroid + (reflected - centroid) * CONTRACT, fr)
            } else {
                (centroid + (worst - centroid) * CONTRACT, values[2])
            };
            let fc = f(contracted);
            if fc < threshold {
                simplex[2] = contracted;
                values[2] = fc;
                continue;
            }

            for i in 1..3 {
                simplex[i] = simplex[0] + (simplex[i] - simplex[0]) * SHRINK;
                values[i] = f(simplex[i]);
            }
        }
    }
}

/// Minimizes `f` from `start` with the default configuration.
///
/// Never returns a value above `f(start)`: the start is a simplex vertex and
/// the best vertex only ever improves.
pub fn nelder_mead(
    f: impl FnMut(Point2) -> f64,
    start: Point2,
    scale: f64,
    tol: f64,
    budget: usize,
) -> OptResult {
    NelderMead::new(scale, tol)
        .with_budget(budget)
        .minimize(f, start)
}

fn sort_simplex(simplex: &mut [Point2; 3], values: &mut [f64; 3]) {
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let s = *simplex;
    let v = *values;
    for (k, &i) in idx.iter().enumerate() {
        simplex[k] = s[i];
        values[k] = v[i];
    }
}

fn simplex_diameter(simplex: &[Point2; 3]) -> f64 {
    simplex[0]
        .distance(simplex[1])
        .max(simplex[1].distance(simplex[2]))
        .max(simplex[2].distance(simplex[0]))
}
