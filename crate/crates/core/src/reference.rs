//! The three benchmark triangles and their reference center coordinates.

use crate::geom::{Point2, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Benchmark {
    /// Isosceles right triangle `(0,0), (1,0), (0,1)`.
    T1,
    /// 30-60-90 triangle `(0,0), (1,0), (0,√3)`.
    T2,
    /// 6-9-13 triangle `(0,0), (6,0), (-13/3, 4√35/3)`.
    T3,
}

impl Benchmark {
    pub const ALL: [Benchmark; 3] = [Benchmark::T1, Benchmark::T2, Benchmark::T3];

    pub fn name(self) -> &'static str {
        match self {
            Benchmark::T1 => "T1",
            Benchmark::T2 => "T2",
            Benchmark::T3 => "T3",
        }
    }

    pub fn from_name(name: &str) -> Option<Benchmark> {
        match name.trim() {
            "T1" | "t1" => Some(Benchmark::T1),
            "T2" | "t2" => Some(Benchmark::T2),
            "T3" | "t3" => Some(Benchmark::T3),
            _ => None,
        }
    }

    pub fn vertices(self) -> [Point2; 3] {
        match self {
            Benchmark::T1 => [
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 1.0),
            ],
            Benchmark::T2 => [
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 3f64.sqrt()),
            ],
            Benchmark::T3 => [
                Point2::new(0.0, 0.0),
                Point2::new(6.0, 0.0),
                Point2::new(-13.0 / 3.0, 4.0 * 35f64.sqrt() / 3.0),
            ],
        }
    }

    pub fn triangle(self) -> Triangle {
        let [a, b, c] = self.vertices();
        Triangle::new(a, b, c).expect("benchmark triangles are valid")
    }

    pub fn equiareal_center(self) -> Point2 {
        match self {
            Benchmark::T1 => Point2::new(T1_EQUIAREAL, T1_EQUIAREAL),
            Benchmark::T2 => Point2::new(0.371_916_427_977_018_886_2, 0.479_461_755_451_178_513_1),
            Benchmark::T3 => Point2::new(0.999_963_405_182_936_340_9, 2.409_794_897_418_628_060_9),
        }
    }

    /// Published asymmetries, three digits only.
    pub fn asymmetry(self) -> f64 {
        match self {
            Benchmark::T1 => 0.450,
            Benchmark::T2 => 0.517,
            Benchmark::T3 => 0.694,
        }
    }

    pub fn illuminating_center(self) -> Point2 {
        match self {
            Benchmark::T1 => Point2::new(0.308_275_698_614_655_042_3, 0.308_275_698_614_655_042_3),
            Benchmark::T2 => Point2::new(0.351_687_688_767_663_205_5, 0.449_128_616_566_955_223_6),
            Benchmark::T3 => Point2::new(0.834_501_165_059_475_419_1, 2.003_148_772_816_105_625_8),
        }
    }

    /// Hot spot; for T3 only five decimals are known.
    pub fn thermodynamic_center(self) -> Point2 {
        match self {
            Benchmark::T1 => Point2::new(T1_HOTSPOT, T1_HOTSPOT),
            Benchmark::T2 => Point2::new(0.355_847_360_626_381_120_9, 0.425_535_961_037_057_663_1),
            Benchmark::T3 => Point2::new(0.88047, 1.91599),
        }
    }

    /// First Dirichlet eigenvalue where a closed form exists.
    pub fn first_eigenvalue(self) -> Option<f64> {
        use std::f64::consts::PI;
        match self {
            Benchmark::T1 => Some(5.0 * PI * PI),
            Benchmark::T2 => Some(28.0 * PI * PI / 9.0),
            Benchmark::T3 => None,
        }
    }
}

/// `(1 + 1/π) / 4`.
pub const T1_EQUIAREAL: f64 = 0.329_577_471_545_947_667_884_441_8;

/// `arcsec(√3) / π`.
pub const T1_HOTSPOT: f64 = 0.304_086_723_984_696_364_914_572_2;

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn closed_forms_match_constants() {
        assert!((0.25 * (1.0 + 1.0 / PI) - T1_EQUIAREAL).abs() < 1e-16);
        assert!(((1.0 / 3f64.sqrt()).acos() / PI - T1_HOTSPOT).abs() < 1e-16);
    }

    #[test]
    fn names_round_trip() {
        for b in Benchmark::ALL {
            assert_eq!(Benchmark::from_name(b.name()), Some(b));
        }
        assert_eq!(Benchmark::from_name("T4"), None);
    }
}
