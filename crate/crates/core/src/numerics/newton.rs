//! Damped Newton iteration for planar 2×2 systems.

use crate::geom::Point2;

use super::diff::central_jacobian;
use super::DEFAULT_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    Converged,
    BudgetExhausted,
    /// Halving could not bring the step back inside the domain.
    DampingUnderflow,
    /// No damped step reduced the residual.
    Stagnation,
    SingularJacobian,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootResult {
    pub root: Point2,
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
    pub stop: StopReason,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Newton2 {
    pub tol: f64,
    pub budget: usize,
    /// Central-difference step for the Jacobian.
    pub fd_step: f64,
    pub max_halvings: u32,
}

impl Newton2 {
    pub fn new(tol: f64, fd_step: f64) -> Self {
        Newton2 {
            tol,
            budget: DEFAULT_BUDGET,
            fd_step,
            max_halvings: 40,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Finds a root of `system` starting at `start`. Every accepted iterate
    /// satisfies `inside`; non-finite residuals count as outside.
    pub fn solve(
        &self,
        mut system: impl FnMut(Point2) -> [f64; 2],
        start: Point2,
        mut inside: impl FnMut(Point2) -> bool,
    ) -> RootResult {
        let norm = |f: [f64; 2]| f[0].hypot(f[1]);
        let mut x = start;
        let mut fx = system(x);
        let mut res = norm(fx);
        let mut iterations = 0;
        let finish = |root, residual_norm: f64, iterations, stop| RootResult {
            root,
            residual_norm,
            iterations,
            converged: stop == StopReason::Converged,
            stop,
        };

        loop {
            if res <= self.tol {
                return finish(x, res, iterations, StopReason::Converged);
            }
            if !res.is_finite() {
                return finish(x, res, iterations, StopReason::DampingUnderflow);
            }
            if iterations >= self.budget {
                return finish(x, res, iterations, StopReason::BudgetExhausted);
            }
            iterations += 1;

            let j = central_jacobian(&mut system, x, self.fd_step);
            let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
            if det == 0.0 || !det.is_finite() {
                return finish(x, res, iterations, StopReason::SingularJacobian);
            }
            let step = Point2::new(
                -(j[1][1] * fx[0] - j[0][1] * fx[1]) / det,
                -(-j[1][0] * fx[0] + j[0][0] * fx[1]) / det,
            );

            let mut lambda = 1.0;
            let mut found_inside = false;
            let mut accepted = None;
            for _ in 0..=self.max_halvings {
                let trial = x + step * lambda;
                if inside(trial) {
                    let ft = system(trial);
                    let rt = norm(ft);
                    if rt.is_finite() {
                        found_inside = true;
                        if rt < res {
                            accepted = Some((trial, ft, rt));
                            break;
                        }
                    }
                }
                lambda *= 0.5;
            }
            match accepted {
                Some((trial, ft, rt)) => {
                    x = trial;
                    fx = ft;
                    res = rt;
                }
                None if !found_inside => {
                    return finish(x, res, iterations, StopReason::DampingUnderflow)
                }
                None => return finish(x, res, iterations, StopReason::Stagnation),
            }
        }
    }
}

/// Damped Newton with the default budget and a Jacobian step of `1e-7`
/// times the larger of 1 and `|start|`.
pub fn newton2(
    system: impl FnMut(Point2) -> [f64; 2],
    start: Point2,
    tol: f64,
    inside: impl FnMut(Point2) -> bool,
    budget: usize,
) -> RootResult {
    let h = 1e-7 * start.norm().max(1.0);
    Newton2::new(tol, h)
        .with_budget(budget)
        .solve(system, start, inside)
}
