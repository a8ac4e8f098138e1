//! Result document assembly and rendering.
//!
//! Every run produces either a plain-text table or a JSON document with the
//! fixed top-level shape `{schema_version, version, job, result}` (`error`
//! replaces `result` when a mathematical precondition fails). Serialization
//! is deterministic: keys are emitted in sorted order and spectrum entries
//! in ascending eigenvalue order, while arbitrary-precision integers and
//! rationals are rendered as strings so no precision is lost to native
//! number types.

use flagspec::{ImaginaryRat, Int, KahlerClass, PiScalar, Rat};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Echo of the parsed invocation, embedded in every JSON document.
pub struct JobContext {
    pub command: &'static str,
    pub family: char,
    pub rank: usize,
    pub painted: Vec<usize>,
    pub line_bundle: Option<Vec<Int>>,
    pub theta: Option<Vec<Rat>>,
    pub kahler: Option<Vec<Rat>>,
    pub kahler_units: Option<&'static str>,
    pub scalar_target: Option<String>,
    pub q_range: Option<(i64, i64)>,
    pub max_distinct: Option<usize>,
    pub json: bool,
}

impl JobContext {
    pub fn new(command: &'static str, family: char, rank: usize, painted: Vec<usize>) -> Self {
        JobContext {
            command,
            family,
            rank,
            painted,
            line_bundle: None,
            theta: None,
            kahler: None,
            kahler_units: None,
            scalar_target: None,
            q_range: None,
            max_distinct: None,
            json: false,
        }
    }

    fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "lie_family": self.family.to_string(),
            "rank": self.rank,
            "painted": self.painted,
            "line_bundle": self.line_bundle.as_ref().map(|v| int_strings(v)),
            "theta": self.theta.as_ref().map(|v| rat_strings(v)),
            "kahler": self.kahler.as_ref().map(|v| rat_strings(v)),
            "kahler_units": self.kahler_units,
            "options": {
                "json": self.json,
                "max_distinct": self.max_distinct,
                "q_range": self.q_range.map(|(lo, hi)| json!([lo, hi])),
                "scalar_target": self.scalar_target,
            },
        })
    }
}

/// Full document for a successful run.
pub fn document(job: &JobContext, result: Value) -> String {
    render(json!({
        "schema_version": SCHEMA_VERSION,
        "version": env!("CARGO_PKG_VERSION"),
        "job": job.to_value(),
        "result": result,
    }))
}

/// Full document for a mathematical precondition failure.
pub fn error_document(job: &JobContext, kind: &str, message: &str) -> String {
    render(json!({
        "schema_version": SCHEMA_VERSION,
        "version": env!("CARGO_PKG_VERSION"),
        "job": job.to_value(),
        "error": { "kind": kind, "message": message },
    }))
}

fn render(doc: Value) -> String {
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn int_strings(values: &[Int]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

pub fn rat_strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// Eigenvalue object: exact rational coefficient plus a power of pi.
pub fn pi_value(v: &PiScalar) -> Value {
    json!({ "rational": v.value().to_string(), "pi_power": v.pi_power() })
}

/// Purely imaginary eigenvalue object; the coefficient multiplies `i`.
pub fn imaginary_value(v: &ImaginaryRat) -> Value {
    json!({ "imaginary": true, "rational": v.coefficient().to_string(), "pi_power": 0 })
}

pub fn kahler_value(omega: &KahlerClass) -> Value {
    json!({
        "coefficients": rat_strings(omega.coeffs()),
        "units": if omega.pi_units() { "pi" } else { "plain" },
    })
}

/// Left-aligned plain-text table with two-space column separation.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit_row = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i].saturating_sub(cell.len());
            if i + 1 < cells.len() {
                line.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    emit_row(&mut out, &header_cells);
    for row in rows {
        emit_row(&mut out, row);
    }
    out
}

/// Parenthesized coordinate vector, matching the display form of weights.
pub fn paren_list<T: std::fmt::Display>(values: &[T]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", inner.join(", "))
}
