use crate::geom::Point2;

/// Central-difference gradient of a scalar field with step `h`.
pub fn central_gradient(mut f: impl FnMut(Point2) -> f64, p: Point2, h: f64) -> [f64; 2] {
    let dx = Point2::new(h, 0.0);
    let dy = Point2::new(0.0, h);
    [
        (f(p + dx) - f(p - dx)) / (2.0 * h),
        (f(p + dy) - f(p - dy)) / (2.0 * h),
    ]
}

/// Central-difference Jacobian of a planar vector field, `[[dF0/dx, dF0/dy], [dF1/dx, dF1/dy]]`.
pub fn central_jacobian(mut f: impl FnMut(Point2) -> [f64; 2], p: Point2, h: f64) -> [[f64; 2]; 2] {
    let dx = Point2::new(h, 0.0);
    let dy = Point2::new(0.0, h);
    let (xp, xm) = (f(p + dx), f(p - dx));
    let (yp, ym) = (f(p + dy), f(p - dy));
    let s = 1.0 / (2.0 * h);
    [
        [(xp[0] - xm[0]) * s, (yp[0] - ym[0]) * s],
        [(xp[1] - xm[1]) * s, (yp[1] - ym[1]) * s],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_gradient_is_exact_up_to_rounding() {
        let f = |p: Point2| 3.0 * p.x * p.x + p.x * p.y - 2.0 * p.y;
        let g = central_gradient(f, Point2::new(0.5, -1.0), 1e-4);
        assert!((g[0] - 2.0).abs() < 1e-9);
        assert!((g[1] - (0.5 - 2.0)).abs() < 1e-9);
    }

    #[test]
    fn jacobian_of_linear_map() {
        let f = |p: Point2| [p.x + 2.0 * p.y, -p.x + 0.5 * p.y];
        let j = central_jacobian(f, Point2::new(3.0, 4.0), 1e-3);
        let want = [[1.0, 2.0], [-1.0, 0.5]];
        for r in 0..2 {
            for c in 0..2 {
                assert!((j[r][c] - want[r][c]).abs() < 1e-10);
            }
        }
    }
}
