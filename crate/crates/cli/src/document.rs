//! The result document and the computation that fills it.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use tricenter::fraenkel::{self, equiareal_center};
use tricenter::geom::classical_center;
use tricenter::hotspot::{self, analytic_hotspot, AnalyticKind, HotspotResult};
use tricenter::illuminating::{self, illuminating_center};
use tricenter::reference::Benchmark;
use tricenter::{CenterKind, Point2};

use crate::input::{InputError, ResolvedTriangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CenterName {
    Equiareal,
    Illuminating,
    Thermodynamic,
    Classical,
}

impl CenterName {
    pub const ALL: [CenterName; 4] = [
        CenterName::Equiareal,
        CenterName::Illuminating,
        CenterName::Thermodynamic,
        CenterName::Classical,
    ];

    pub fn key(self) -> &'static str {
        match self {
            CenterName::Equiareal => "equiareal",
            CenterName::Illuminating => "illuminating",
            CenterName::Thermodynamic => "thermodynamic",
            CenterName::Classical => "classical",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub centers: Vec<CenterName>,
    /// Dimensionless override for the equiareal (times the diameter) and
    /// illuminating tolerances.
    pub tol: Option<f64>,
    pub fem_level: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            centers: CenterName::ALL.to_vec(),
            tol: None,
            fem_level: hotspot::DEFAULT_LEVEL,
        }
    }
}

pub const EQUIAREAL_REL_TOL: f64 = 1e-10;
pub const THERMODYNAMIC_REL_TOL: f64 = 1e-4;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub triangle: TriangleEcho,
    pub centers: BTreeMap<String, CenterRecord>,
    pub classical: BTreeMap<String, ClassicalRecord>,
    pub meta: Meta,
    /// Present only when the triangle itself could not be processed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleEcho {
    pub label: String,
    pub vertices: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterRecord {
    pub point: Option<[f64; 2]>,
    pub aux: BTreeMap<String, Value>,
    pub converged: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalRecord {
    pub point: [f64; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub tolerances: BTreeMap<String, Value>,
    pub runtime_ms: BTreeMap<String, f64>,
}

impl ResultDocument {
    /// True when some requested center failed or did not converge.
    pub fn has_failures(&self) -> bool {
        self.error.is_some()
            || self
                .centers
                .values()
                .any(|c| c.error.is_some() || !c.converged)
    }

    pub fn point(&self, name: &str) -> Option<Point2> {
        let p = self.centers.get(name)?.point?;
        Some(Point2::new(p[0], p[1]))
    }
}

fn xy(p: Point2) -> [f64; 2] {
    [p.x, p.y]
}

fn aux<const N: usize>(entries: [(&str, Value); N]) -> BTreeMap<String, Value> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn solved(point: Point2, converged: bool, aux: BTreeMap<String, Value>) -> CenterRecord {
    CenterRecord {
        point: Some(xy(point)),
        aux,
        converged,
        error: None,
    }
}

fn failed(e: tricenter::Error) -> CenterRecord {
    CenterRecord {
        point: None,
        aux: BTreeMap::new(),
        converged: false,
        error: Some(e.to_string()),
    }
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

fn thermodynamic(tri: &ResolvedTriangle, level: u32, tol: f64) -> tricenter::Result<HotspotResult> {
    match tri.builtin {
        Some(Benchmark::T1) => Ok(analytic_hotspot(AnalyticKind::T1)),
        Some(Benchmark::T2) => Ok(analytic_hotspot(AnalyticKind::T2)),
        _ => hotspot::thermodynamic_center(&tri.triangle, level, tol),
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Computes every requested center. Solver failures become error records.
pub fn compute(tri: &ResolvedTriangle, settings: &Settings) -> ResultDocument {
    let started = Instant::now();
    let t = &tri.triangle;
    let diam = t.diameter();
    let eq_tol = settings.tol.unwrap_or(EQUIAREAL_REL_TOL) * diam;
    let il_tol = settings.tol.unwrap_or(illuminating::DEFAULT_TOL);
    let th_tol = THERMODYNAMIC_REL_TOL * diam;

    let mut centers = BTreeMap::new();
    let mut classical = BTreeMap::new();
    let mut runtime_ms = BTreeMap::new();
    let mut tolerances = BTreeMap::new();
    let mut requested = settings.centers.clone();
    requested.sort();
    requested.dedup();
    for name in requested {
        let start = Instant::now();
        let record = match name {
            CenterName::Equiareal => {
                tolerances.insert("equiareal".to_string(), Value::from(eq_tol));
                match equiareal_center(t, eq_tol) {
                    Ok(r) => solved(
                        r.center,
                        r.converged,
                        aux([
                            ("asymmetry", r.asymmetry.into()),
                            ("radius", r.radius.into()),
                            ("iterations", r.iterations.into()),
                            ("final_simplex_size", r.final_simplex_size.into()),
                        ]),
                    ),
                    Err(e) => failed(e),
                }
            }
            CenterName::Illuminating => {
                tolerances.insert("illuminating".to_string(), Value::from(il_tol));
                match illuminating_center(t, il_tol) {
                    Ok(r) => solved(
                        r.center,
                        r.converged,
                        aux([
                            ("rho", r.rho.value().into()),
                            ("residual", r.residual.into()),
                            ("iterations", r.iterations.into()),
                        ]),
                    ),
                    Err(e) => failed(e),
                }
            }
            CenterName::Thermodynamic => {
                tolerances.insert("thermodynamic".to_string(), Value::from(th_tol));
                tolerances.insert("fem_level".to_string(), Value::from(settings.fem_level));
                match thermodynamic(tri, settings.fem_level, th_tol) {
                    Ok(r) => {
                        let mut a = aux([
                            ("eigenvalue", r.eigenvalue.into()),
                            ("method", r.method.name().into()),
                        ]);
                        if r.method == hotspot::HotspotMethod::Fem {
                            a.insert("mesh_level".to_string(), r.mesh_level.into());
                        }
                        solved(r.center, r.converged, a)
                    }
                    Err(e) => failed(e),
                }
            }
            CenterName::Classical => {
                for kind in CenterKind::ALL {
                    let point = xy(classical_center(t, kind));
                    classical.insert(kind.name().to_string(), ClassicalRecord { point });
                }
                runtime_ms.insert(name.key().to_string(), elapsed_ms(start));
                continue;
            }
        };
        runtime_ms.insert(name.key().to_string(), elapsed_ms(start));
        centers.insert(name.key().to_string(), record);
    }
    runtime_ms.insert("total".to_string(), elapsed_ms(started));

    ResultDocument {
        triangle: TriangleEcho {
            label: tri.label.clone(),
            vertices: tri.vertices.iter().map(|&p| xy(p)).collect(),
        },
        centers,
        classical,
        meta: Meta {
            version: version(),
            tolerances,
            runtime_ms,
        },
        error: None,
    }
}

/// Document for a specification that did not resolve to a triangle.
pub fn input_failure(e: &InputError) -> ResultDocument {
    ResultDocument {
        triangle: TriangleEcho {
            label: e.label.clone().unwrap_or_default(),
            vertices: e.vertices.clone(),
        },
        centers: BTreeMap::new(),
        classical: BTreeMap::new(),
        meta: Meta {
            version: version(),
            tolerances: BTreeMap::new(),
            runtime_ms: BTreeMap::new(),
        },
        error: Some(e.message.clone()),
    }
}

/// Equal-area disk radius, for plotting.
pub fn disk_radius(tri: &ResolvedTriangle) -> f64 {
    fraenkel::equiareal_radius(&tri.triangle)
}
