//! Planar primitives: points, triangles, disks, and the exact disk/triangle
//! intersection area everything else is built on.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance for tangency and containment classification.
pub const GEOM_TOL: f64 = 1e-12;

/// Triangles with `|signed area| < DEGENERACY_FACTOR * longest_side^2` are rejected.
pub const DEGENERACY_FACTOR: f64 = 1e-12;

#[derive(Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// Twice the signed area of `(a, b, c)`; positive when counterclockwise.
pub fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

/// Names a triangle side by its endpoints, in vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    AB,
    BC,
    CA,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::AB, Side::BC, Side::CA];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CenterKind {
    Incenter,
    Centroid,
    Circumcenter,
    Orthocenter,
}

impl CenterKind {
    pub const ALL: [CenterKind; 4] = [
        CenterKind::Incenter,
        CenterKind::Centroid,
        CenterKind::Circumcenter,
        CenterKind::Orthocenter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CenterKind::Incenter => "incenter",
            CenterKind::Centroid => "centroid",
            CenterKind::Circumcenter => "circumcenter",
            CenterKind::Orthocenter => "orthocenter",
        }
    }
}

/// A nondegenerate triangle with counterclockwise vertices.
///
/// The only way to build one is [`Triangle::new`], which normalizes the
/// orientation, so every method may assume CCW order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    a: Point2,
    b: Point2,
    c: Point2,
}

impl Triangle {
    /// Validates and orients the vertices counterclockwise.
    ///
    /// If the input is clockwise, `b` and `c` are swapped.
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let longest = a.distance(b).max(b.distance(c)).max(c.distance(a));
        let signed = 0.5 * orient(a, b, c);
        let threshold = DEGENERACY_FACTOR * longest * longest;
        if !(signed.abs() >= threshold) || longest == 0.0 {
            return Err(Error::DegenerateTriangle {
                area: signed.abs(),
                threshold,
            });
        }
        Ok(if signed > 0.0 {
            Triangle { a, b, c }
        } else {
            Triangle { a, b: c, c: b }
        })
    }

    pub fn from_coords(coords: [(f64, f64); 3]) -> Result<Self> {
        Triangle::new(coords[0].into(), coords[1].into(), coords[2].into())
    }

    pub fn a(&self) -> Point2 {
        self.a
    }

    pub fn b(&self) -> Point2 {
        self.b
    }

    pub fn c(&self) -> Point2 {
        self.c
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.c]
    }

    /// Endpoints of `side`, oriented counterclockwise around the triangle.
    pub fn side(&self, side: Side) -> (Point2, Point2) {
        match side {
            Side::AB => (self.a, self.b),
            Side::BC => (self.b, self.c),
            Side::CA => (self.c, self.a),
        }
    }

    pub fn side_length(&self, side: Side) -> f64 {
        let (p, q) = self.side(side);
        p.distance(q)
    }

    pub fn shortest_side(&self) -> Side {
        let mut best = Side::AB;
        for s in [Side::BC, Side::CA] {
            if self.side_length(s) < self.side_length(best) {
                best = s;
            }
        }
        best
    }

    pub fn area(&self) -> f64 {
        0.5 * orient(self.a, self.b, self.c)
    }

    pub fn perimeter(&self) -> f64 {
        Side::ALL.iter().map(|&s| self.side_length(s)).sum()
    }

    /// Length of the longest side.
    pub fn diameter(&self) -> f64 {
        Side::ALL
            .iter()
            .map(|&s| self.side_length(s))
            .fold(0.0, f64::max)
    }

    pub fn inradius(&self) -> f64 {
        2.0 * self.area() / self.perimeter()
    }

    pub fn centroid(&self) -> Point2 {
        Point2::new(
            (self.a.x + self.b.x + self.c.x) / 3.0,
            (self.a.y + self.b.y + self.c.y) / 3.0,
        )
    }

    /// Signed distance from `p` to each side line, positive on the interior side.
    pub fn side_distances(&self, p: Point2) -> [f64; 3] {
        Side::ALL.map(|s| {
            let (u, v) = self.side(s);
            orient(u, v, p) / u.distance(v)
        })
    }

    /// Distance to the boundary for interior points, negated distance to the
    /// nearest violated side line otherwise.
    pub fn signed_boundary_distance(&self, p: Point2) -> f64 {
        self.side_distances(p)
            .into_iter()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains_strict(&self, p: Point2) -> bool {
        self.signed_boundary_distance(p) > GEOM_TOL * self.diameter()
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        let xs = [self.a.x, self.b.x, self.c.x];
        let ys = [self.a.y, self.b.y, self.c.y];
        (
            Point2::new(
                xs.into_iter().fold(f64::INFINITY, f64::min),
                ys.into_iter().fold(f64::INFINITY, f64::min),
            ),
            Point2::new(
                xs.into_iter().fold(f64::NEG_INFINITY, f64::max),
                ys.into_iter().fold(f64::NEG_INFINITY, f64::max),
            ),
        )
    }

    pub fn map(&self, s: &Similarity) -> Result<Triangle> {
        Triangle::new(s.apply(self.a), s.apply(self.b), s.apply(self.c))
    }
}

/// The `normalize` operation: orient counterclockwise, reject degenerate input.
pub fn normalize(a: Point2, b: Point2, c: Point2) -> Result<Triangle> {
    Triangle::new(a, b, c)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    center: Point2,
    radius: f64,
}

impl Disk {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "disk radius must be positive, got {radius}"
            )));
        }
        Ok(Disk { center, radius })
    }

    pub fn center(&self) -> Point2 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    pub fn contains(&self, p: Point2) -> bool {
        (p - self.center).norm_sq() < self.radius * self.radius
    }
}

/// Intersections of a circle with a line, ordered along the line direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordPoints {
    count: usize,
    points: [Point2; 2],
}

impl ChordPoints {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn points(&self) -> &[Point2] {
        &self.points[..self.count]
    }
}

/// Where the circle bounding `disk` meets the infinite line through `p` and `q`.
///
/// Points are ordered by their position along `p -> q`. A discriminant within
/// [`GEOM_TOL`] (relative to `r^2`) of zero is reported as a single tangent point.
pub fn circle_line_intersections(disk: &Disk, p: Point2, q: Point2) -> Result<ChordPoints> {
    if p == q {
        return Err(Error::IdenticalLinePoints);
    }
    let dir = q - p;
    let len = dir.norm();
    let unit = dir * (1.0 / len);
    let along = (disk.center - p).dot(unit);
    let foot = p + unit * along;
    let r2 = disk.radius * disk.radius;
    let half_sq = r2 - (disk.center - foot).norm_sq();
    let mut out = ChordPoints {
        count: 0,
        points: [Point2::ORIGIN; 2],
    };
    if half_sq.abs() <= GEOM_TOL * r2 {
        out.count = 1;
        out.points[0] = foot;
    } else if half_sq > 0.0 {
        let half = half_sq.sqrt();
        out.count = 2;
        out.points = [foot - unit * half, foot + unit * half];
    }
    Ok(out)
}

/// Signed area of `disk ∩ triangle(O, a, b)`, with the disk centered at the
/// origin `O`. Summed over the edges of a CCW polygon this gives `|D ∩ P|`.
fn origin_wedge_area(a: Point2, b: Point2, r: f64) -> f64 {
    let d = b - a;
    let qa = d.norm_sq();
    let qb = 2.0 * a.dot(d);
    let qc = a.norm_sq() - r * r;
    let disc = qb * qb - 4.0 * qa * qc;

    let mut ts = [0.0, 1.0, 1.0, 1.0];
    let mut n = 1;
    if disc > 0.0 {
        let sq = disc.sqrt();
        let q = -0.5 * (qb + sq.copysign(qb));
        let (mut t1, mut t2) = (q / qa, if q != 0.0 { qc / q } else { -q / qa });
        if t1 > t2 {
            std::mem::swap(&mut t1, &mut t2);
        }
        for t in [t1, t2] {
            if t > 0.0 && t < 1.0 {
                ts[n] = t;
                n += 1;
            }
        }
    }
    ts[n] = 1.0;

    let mut total = 0.0;
    for w in ts[..=n].windows(2) {
        let (t0, t1) = (w[0], w[1]);
        if t1 <= t0 {
            continue;
        }
        let u = a + d * t0;
        let v = a + d * t1;
        let mid = a + d * (0.5 * (t0 + t1));
        if mid.norm_sq() <= r * r {
            total += 0.5 * u.cross(v);
        } else {
            total += 0.5 * r * r * u.cross(v).atan2(u.dot(v));
        }
    }
    total
}

/// Exact area of `disk ∩ tri`.
///
/// Green's theorem over the boundary of the intersection: pieces of the
/// triangle edges inside the disk contribute chord triangles, pieces outside
/// contribute circular sectors.
pub fn disk_triangle_intersection_area(disk: &Disk, tri: &Triangle) -> f64 {
    let o = disk.center;
    let r = disk.radius;
    let [a, b, c] = tri.vertices().map(|v| v - o);
    let total =
        origin_wedge_area(a, b, r) + origin_wedge_area(b, c, r) + origin_wedge_area(c, a, r);
    total.clamp(0.0, tri.area().min(disk.area()))
}

/// The angle `∠upv` in `[0, π]`.
pub fn angle_at(p: Point2, u: Point2, v: Point2) -> Result<f64> {
    let du = u - p;
    let dv = v - p;
    let (nu, nv) = (du.norm(), dv.norm());
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok((du.dot(dv) / (nu * nv)).clamp(-1.0, 1.0).acos())
}

pub fn classical_center(tri: &Triangle, kind: CenterKind) -> Point2 {
    let [a, b, c] = tri.vertices();
    match kind {
        CenterKind::Centroid => tri.centroid(),
        CenterKind::Incenter => {
            let la = tri.side_length(Side::BC);
            let lb = tri.side_length(Side::CA);
            let lc = tri.side_length(Side::AB);
            let s = la + lb + lc;
            Point2::new(
                (la * a.x + lb * b.x + lc * c.x) / s,
                (la * a.y + lb * b.y + lc * c.y) / s,
            )
        }
        CenterKind::Circumcenter => circumcenter(a, b, c),
        // Euler line: H = A + B + C - 2 O.
        CenterKind::Orthocenter => {
            let o = circumcenter(a, b, c);
            a + b + c - o * 2.0
        }
    }
}

fn circumcenter(a: Point2, b: Point2, c: Point2) -> Point2 {
    // Relative to `a` to keep the products small.
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    let (b2, c2) = (ab.norm_sq(), ac.norm_sq());
    a + Point2::new(ac.y * b2 - ab.y * c2, ab.x * c2 - ac.x * b2) * (1.0 / d)
}

/// Perpendicular distance from `p` to the line supporting `side`.
pub fn distance_to_side(tri: &Triangle, p: Point2, side: Side) -> f64 {
    let (u, v) = tri.side(side);
    orient(u, v, p).abs() / u.distance(v)
}

/// Rotation about the origin, then uniform scaling, then translation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Similarity {
    pub rotation: f64,
    pub scale: f64,
    pub translation: Point2,
}

impl Similarity {
    pub const IDENTITY: Similarity = Similarity {
        rotation: 0.0,
        scale: 1.0,
        translation: Point2::ORIGIN,
    };

    pub fn new(rotation: f64, scale: f64, translation: Point2) -> Self {
        Similarity {
            rotation,
            scale,
            translation,
        }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        let (s, c) = self.rotation.sin_cos();
        Point2::new(c * p.x - s * p.y, s * p.x + c * p.y) * self.scale + self.translation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1() -> Triangle {
        Triangle::from_coords([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap()
    }

    fn t3() -> Triangle {
        let h = 4.0 * 35f64.sqrt() / 3.0;
        Triangle::from_coords([(0.0, 0.0), (6.0, 0.0), (-13.0 / 3.0, h)]).unwrap()
    }

    #[test]
    fn normalize_keeps_ccw_and_flips_cw() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(1.0, 0.0);
        let c = Point2::new(0.0, 1.0);
        let t = normalize(a, b, c).unwrap();
        assert_eq!(t.vertices(), [a, b, c]);
        let t = normalize(a, c, b).unwrap();
        assert_eq!(t.vertices(), [a, b, c]);
    }

    #[test]
    fn collinear_is_degenerate() {
        let err = Triangle::from_coords([(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateTriangle { .. }));
        let err = Triangle::from_coords([(0.0, 0.0), (1.0, 0.0), (0.5, 1e-13)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateTriangle { .. }));
        let err = Triangle::from_coords([(0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateTriangle { .. }));
    }

    #[test]
    fn non_finite_rejected() {
        let err = Triangle::from_coords([(0.0, f64::NAN), (1.0, 0.0), (0.0, 1.0)]).unwrap_err();
        assert_eq!(err, Error::NonFinite);
    }

    #[test]
    fn benchmark_areas() {
        assert_eq!(t1().area(), 0.5);
        let t2 = Triangle::from_coords([(0.0, 0.0), (1.0, 0.0), (0.0, 3f64.sqrt())]).unwrap();
        assert!((t2.area() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((t3().area() - 4.0 * 35f64.sqrt()).abs() < 1e-13);
        let [a, b, c] = t3().vertices();
        assert!((Triangle::new(b, c, a).unwrap().area() - t3().area()).abs() < 1e-13);
    }

    #[test]
    fn t3_side_lengths_are_6_9_13() {
        let t = t3();
        assert!((t.side_length(Side::AB) - 6.0).abs() < 1e-14);
        assert!((t.side_length(Side::CA) - 9.0).abs() < 1e-14);
        assert!((t.side_length(Side::BC) - 13.0).abs() < 1e-13);
        assert_eq!(t.shortest_side(), Side::AB);
    }

    #[test]
    fn axis_chord() {
        let d = Disk::new(Point2::ORIGIN, 1.0).unwrap();
        let c =
            circle_line_intersections(&d, Point2::new(-3.0, 0.0), Point2::new(2.0, 0.0)).unwrap();
        assert_eq!(c.count(), 2);
        assert!((c.points()[0] - Point2::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((c.points()[1] - Point2::new(1.0, 0.0)).norm() < 1e-15);
        // Reversed direction reverses order.
        let c =
            circle_line_intersections(&d, Point2::new(2.0, 0.0), Point2::new(-3.0, 0.0)).unwrap();
        assert!(c.points()[0].x > 0.0);
    }

    #[test]
    fn tangent_and_miss() {
        let d = Disk::new(Point2::ORIGIN, 1.0).unwrap();
        let c =
            circle_line_intersections(&d, Point2::new(0.0, 1.0), Point2::new(1.0, 1.0)).unwrap();
        assert_eq!(c.count(), 1);
        assert!((c.points()[0] - Point2::new(0.0, 1.0)).norm() < 1e-15);
        let c =
            circle_line_intersections(&d, Point2::new(0.0, 1.5), Point2::new(1.0, 1.5)).unwrap();
        assert_eq!(c.count(), 0);
        let p = Point2::new(0.3, 0.3);
        assert_eq!(
            circle_line_intersections(&d, p, p).unwrap_err(),
            Error::IdenticalLinePoints
        );
    }

    #[test]
    fn t1_optimal_disk_chords() {
        use std::f64::consts::PI;
        let t = 0.25 * (1.0 + 1.0 / PI);
        let r = (1.0 / (2.0 * PI)).sqrt();
        let d = Disk::new(Point2::new(t, t), r).unwrap();
        let south =
            circle_line_intersections(&d, Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)).unwrap();
        let p5 = t - (1.0 / (2.0 * PI) - t * t).sqrt();
        assert_eq!(south.count(), 2);
        assert!((south.points()[0].x - p5).abs() < 1e-14);
        let diag =
            circle_line_intersections(&d, Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)).unwrap();
        let p7 = 1.0 / (2.0 * PI.sqrt()) + t;
        assert!((diag.points()[1].x - p7).abs() < 1e-14);
        // Northeast chord on x + y = 1.
        let ne =
            circle_line_intersections(&d, Point2::new(0.0, 1.0), Point2::new(1.0, 0.0)).unwrap();
        let p1 = 0.5 * (1.0 - (1.0 / PI - (1.0 - 2.0 * t).powi(2)).sqrt());
        assert!((ne.points()[0].x - p1).abs() < 1e-14);
    }

    #[test]
    fn containment_cases() {
        let tri = t1();
        let inner = Disk::new(Point2::new(0.25, 0.25), 0.1).unwrap();
        let got = disk_triangle_intersection_area(&inner, &tri);
        assert!((got - inner.area()).abs() < 1e-15);
        let outer = Disk::new(Point2::new(0.3, 0.3), 5.0).unwrap();
        assert_eq!(disk_triangle_intersection_area(&outer, &tri), 0.5);
        let far = Disk::new(Point2::new(10.0, 10.0), 1.0).unwrap();
        assert_eq!(disk_triangle_intersection_area(&far, &tri), 0.0);
    }

    #[test]
    fn half_disk_on_edge() {
        // Disk centered on the long bottom edge of a big triangle.
        let tri = Triangle::from_coords([(-10.0, 0.0), (10.0, 0.0), (0.0, 10.0)]).unwrap();
        let d = Disk::new(Point2::new(0.0, 0.0), 1.0).unwrap();
        let got = disk_triangle_intersection_area(&d, &tri);
        assert!((got - 0.5 * PI).abs() < 1e-14);
        // Disk centered at a right-angle vertex sees a quarter.
        let d = Disk::new(Point2::new(0.0, 0.0), 0.2).unwrap();
        let got = disk_triangle_intersection_area(&d, &t1());
        assert!((got - 0.25 * d.area()).abs() < 1e-15);
    }

    #[test]
    fn angles() {
        let o = Point2::ORIGIN;
        let ex = Point2::new(1.0, 0.0);
        let ey = Point2::new(0.0, 1.0);
        assert!((angle_at(o, ex, ey).unwrap() - PI / 2.0).abs() < 1e-15);
        assert_eq!(angle_at(o, ex, ex).unwrap(), 0.0);
        assert_eq!(angle_at(o, o, ey).unwrap_err(), Error::CoincidentPoints);
        let eq = Triangle::from_coords([(0.0, 0.0), (1.0, 0.0), (0.5, 0.75f64.sqrt())]).unwrap();
        let g = eq.centroid();
        assert!((angle_at(g, eq.a(), eq.b()).unwrap() - 2.0 * PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn classical_centers() {
        let g = classical_center(&t1(), CenterKind::Centroid);
        assert!((g - Point2::new(1.0 / 3.0, 1.0 / 3.0)).norm() < 1e-16);

        let eq = Triangle::from_coords([(0.0, 0.0), (1.0, 0.0), (0.5, 0.75f64.sqrt())]).unwrap();
        let g = eq.centroid();
        for k in CenterKind::ALL {
            assert!((classical_center(&eq, k) - g).norm() < 1e-15, "{k:?}");
        }

        // Incenter equidistant from the sides, at r = |T| / semiperimeter.
        let i = classical_center(&t1(), CenterKind::Incenter);
        let r = 1.0 / (2.0 + 2f64.sqrt());
        for s in Side::ALL {
            assert!((distance_to_side(&t1(), i, s) - r).abs() < 1e-15);
        }
        assert!((i - Point2::new(r, r)).norm() < 1e-15);

        // Right triangle: orthocenter at the right angle, circumcenter at the hypotenuse midpoint.
        let h = classical_center(&t1(), CenterKind::Orthocenter);
        assert!(h.norm() < 1e-15);
        let o = classical_center(&t1(), CenterKind::Circumcenter);
        assert!((o - Point2::new(0.5, 0.5)).norm() < 1e-15);
    }

    #[test]
    fn side_distances() {
        let g = t1().centroid();
        let d = distance_to_side(&t1(), g, Side::BC);
        let brute = (g.x + g.y - 1.0).abs() / 2f64.sqrt();
        assert!((d - brute).abs() < 1e-16);
        assert!((d - 1.0 / (3.0 * 2f64.sqrt())).abs() < 1e-15);
        let on_side = Point2::new(0.4, 0.6);
        assert!(distance_to_side(&t1(), on_side, Side::BC) < 1e-16);
        let p = Point2::new(1.0, 2.4097948974186280);
        assert!((distance_to_side(&t3(), p, Side::AB) - p.y).abs() < 1e-15);
    }
}
