//! Triangle specifications: built-in names or literal coordinate triples,
//! on the command line or as JSON records.

use serde::Deserialize;
use tricenter::reference::Benchmark;
use tricenter::{Point2, Triangle};

/// A specification that resolved to a valid triangle.
#[derive(Clone, Debug)]
pub struct ResolvedTriangle {
    pub label: String,
    /// As given, before orientation normalization.
    pub vertices: [Point2; 3],
    pub builtin: Option<Benchmark>,
    pub triangle: Triangle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InputError {
    pub message: String,
    /// Whatever could be recovered from the input, for error records.
    pub label: Option<String>,
    pub vertices: Vec<[f64; 2]>,
}

impl InputError {
    fn new(message: impl Into<String>) -> Self {
        InputError {
            message: message.into(),
            label: None,
            vertices: Vec::new(),
        }
    }
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn parse_coordinate(token: &str) -> Result<f64, InputError> {
    let v: f64 = token
        .trim()
        .parse()
        .map_err(|_| InputError::new(format!("invalid coordinate {token:?}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(InputError::new(format!("non-finite coordinate {token:?}")))
    }
}

/// Parses `x,y x,y x,y`. Points may also be separated by `;`.
fn parse_literal(text: &str) -> Result<Vec<[f64; 2]>, InputError> {
    let points: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ';')
        .filter(|s| !s.is_empty())
        .collect();
    if points.len() != 3 {
        return Err(InputError::new(format!(
            "expected three points \"x,y x,y x,y\" or one of T1, T2, T3, got {text:?}"
        )));
    }
    points
        .iter()
        .map(|p| match p.split_once(',') {
            Some((x, y)) => Ok([parse_coordinate(x)?, parse_coordinate(y)?]),
            None => Err(InputError::new(format!(
                "point {p:?} is not of the form x,y"
            ))),
        })
        .collect()
}

fn resolve_coords(label: String, coords: Vec<[f64; 2]>) -> Result<ResolvedTriangle, InputError> {
    let fail = |message: String, coords: Vec<[f64; 2]>| InputError {
        message,
        label: Some(label.clone()),
        vertices: coords,
    };
    let [a, b, c]: [[f64; 2]; 3] = match coords.clone().try_into() {
        Ok(v) => v,
        Err(_) => {
            return Err(fail(
                format!("expected three vertices, got {}", coords.len()),
                coords,
            ))
        }
    };
    let vertices = [a, b, c].map(|[x, y]| Point2::new(x, y));
    let triangle = Triangle::new(vertices[0], vertices[1], vertices[2])
        .map_err(|e| fail(e.to_string(), coords))?;
    Ok(ResolvedTriangle {
        label,
        vertices,
        builtin: None,
        triangle,
    })
}

fn resolve_text(text: &str, label: Option<String>) -> Result<ResolvedTriangle, InputError> {
    let text = text.trim();
    if let Some(b) = Benchmark::from_name(text) {
        return Ok(ResolvedTriangle {
            label: label.unwrap_or_else(|| b.name().to_string()),
            vertices: b.vertices(),
            builtin: Some(b),
            triangle: b.triangle(),
        });
    }
    let label = label.unwrap_or_else(|| text.to_string());
    let coords = parse_literal(text).map_err(|e| InputError {
        label: Some(label.clone()),
        ..e
    })?;
    resolve_coords(label, coords)
}

/// Resolves a `--triangle` argument.
pub fn parse_spec(text: &str) -> Result<ResolvedTriangle, InputError> {
    resolve_text(text, None)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VerticesField {
    Text(String),
    Coords(Vec<[f64; 2]>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    label: Option<String>,
    vertices: VerticesField,
}

/// Resolves one batch line: `{"label": .., "vertices": [[x,y],..] | "T1" | "x,y x,y x,y"}`.
pub fn parse_record(line: &str) -> Result<ResolvedTriangle, InputError> {
    let record: Record = serde_json::from_str(line)
        .map_err(|e| InputError::new(format!("invalid triangle record: {e}")))?;
    match record.vertices {
        VerticesField::Text(text) => resolve_text(&text, record.label),
        VerticesField::Coords(coords) => {
            let label = record.label.unwrap_or_else(|| "triangle".to_string());
            resolve_coords(label, coords)
        }
    }
}
