//! Serialization with every float printed to 17 significant digits.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

use crate::document::ResultDocument;

/// 17 significant digits, positional for moderate magnitudes and exponent
/// notation otherwise. The output is valid JSON and reads back bit-exactly.
pub fn sig17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0.0".into()
        } else {
            "0.0".into()
        };
    }
    let sci = format!("{v:.16e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s
        } else {
            s + ".0"
        }
    } else {
        sci
    }
}

struct Sig17;

impl Formatter for Sig17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(sig17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Compact single-line JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17);
    value.serialize(&mut ser).expect("serializing to memory");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

fn point(p: [f64; 2]) -> String {
    format!("({}, {})", sig17(p[0]), sig17(p[1]))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => sig17(n.as_f64().unwrap_or(f64::NAN)),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn to_text(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let vertices: Vec<String> = doc.triangle.vertices.iter().map(|&v| point(v)).collect();
    out += &format!("triangle {}: {}\n", doc.triangle.label, vertices.join(" "));
    if let Some(e) = &doc.error {
        out += &format!("error: {e}\n");
        return out;
    }
    for (name, c) in &doc.centers {
        match (&c.error, c.point) {
            (Some(e), _) => out += &format!("{name:<14} error: {e}\n"),
            (None, Some(p)) => {
                let status = if c.converged {
                    "converged"
                } else {
                    "not converged"
                };
                let extra: Vec<String> = c
                    .aux
                    .iter()
                    .map(|(k, v)| format!("{k}={}", scalar(v)))
                    .collect();
                out += &format!("{name:<14} {}  {status}  {}\n", point(p), extra.join(" "));
            }
            (None, None) => out += &format!("{name:<14} no result\n"),
        }
    }
    for (name, c) in &doc.classical {
        out += &format!("{name:<14} {}\n", point(c.point));
    }
    let total = doc.meta.runtime_ms.get("total").copied().unwrap_or(0.0);
    out += &format!("tricenter {} in {total:.3} ms\n", doc.meta.version);
    out
}
