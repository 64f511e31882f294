//! File formats: graph JSON, matrix JSON, state JSON and time-series CSV.

use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::Value;
use spinorgraph_core::evolution::TimeSample;
use spinorgraph_core::{Complex64, DenseMatrix, GraphError, IntMatrix, OrientedGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("matrix row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, found: usize, expected: usize },
    #[error("entry {position} is not a number or [re, im] pair")]
    BadEntry { position: String },
    #[error("expected a JSON array of {0}")]
    NotAnArray(&'static str),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

/// `{"vertices": n, "edges": [[tail, head], ...]}`, 0-based.
pub fn parse_graph(text: &str) -> Result<OrientedGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    Ok(OrientedGraph::new(doc.vertices, doc.edges.into_iter().map(|[t, h]| (t, h)).collect())?)
}

pub fn format_graph(g: &OrientedGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(t, h)| format!("[{t},{h}]")).collect();
    format!("{{\"vertices\":{},\"edges\":[{}]}}", g.vertex_count(), edges.join(","))
}

/// 17 significant digits; parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn format_complex(z: Complex64) -> String {
    format!("[{},{}]", format_float(z.re), format_float(z.im))
}

/// A matrix as read from or written to JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Int(IntMatrix),
    Dense(DenseMatrix),
}

impl Matrix {
    pub fn to_dense(&self) -> DenseMatrix {
        match self {
            Matrix::Int(m) => m.to_dense(),
            Matrix::Dense(m) => m.clone(),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            Matrix::Int(m) => m.rows(),
            Matrix::Dense(m) => m.rows(),
        }
    }
}

/// JSON rows. Integer matrices print exactly, real matrices as floats and
/// complex matrices as `[re, im]` pairs.
pub fn format_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = match m {
        Matrix::Int(m) => (0..m.rows())
            .map(|i| m.row(i).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect(),
        Matrix::Dense(m) => {
            let real = m.is_real();
            (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .map(|&z| if real { format_float(z.re) } else { format_complex(z) })
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect()
        }
    };
    format!("[{}]", rows.iter().map(|r| format!("[{r}]")).collect::<Vec<_>>().join(","))
}

fn complex_entry(v: &Value) -> Option<Complex64> {
    match v {
        Value::Number(n) => n.as_f64().map(|x| Complex64::new(x, 0.0)),
        Value::Array(pair) if pair.len() == 2 => Some(Complex64::new(pair[0].as_f64()?, pair[1].as_f64()?)),
        _ => None,
    }
}

/// Inverse of [`format_matrix`]; all-integer input gives [`Matrix::Int`].
pub fn parse_matrix(text: &str) -> Result<Matrix, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    let rows = value.as_array().ok_or(FormatError::NotAnArray("rows"))?;
    let mut cells: Vec<&Vec<Value>> = Vec::with_capacity(rows.len());
    for row in rows {
        let r = row.as_array().ok_or(FormatError::NotAnArray("rows"))?;
        if let Some(first) = cells.first() {
            if r.len() != first.len() {
                return Err(FormatError::RaggedRow { row: cells.len(), found: r.len(), expected: first.len() });
            }
        }
        cells.push(r);
    }
    let all_int = cells.iter().all(|r| r.iter().all(|v| v.is_i64()));
    if all_int {
        let ints: Vec<Vec<i64>> =
            cells.iter().map(|r| r.iter().map(|v| v.as_i64().expect("checked integer")).collect()).collect();
        return Ok(Matrix::Int(if ints.is_empty() { IntMatrix::zeros(0, 0) } else { IntMatrix::from_rows(&ints) }));
    }
    let mut dense = Vec::with_capacity(cells.len());
    for (i, r) in cells.iter().enumerate() {
        let row: Result<Vec<Complex64>, FormatError> = r
            .iter()
            .enumerate()
            .map(|(j, v)| complex_entry(v).ok_or(FormatError::BadEntry { position: format!("({i}, {j})") }))
            .collect();
        dense.push(row?);
    }
    Ok(Matrix::Dense(DenseMatrix::from_rows(&dense)))
}

/// A JSON array of numbers or `[re, im]` pairs.
pub fn parse_state(text: &str) -> Result<Vec<Complex64>, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    let items = value.as_array().ok_or(FormatError::NotAnArray("amplitudes"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| complex_entry(v).ok_or(FormatError::BadEntry { position: i.to_string() }))
        .collect()
}

pub fn format_state(values: &[Complex64]) -> String {
    format!("[{}]", values.iter().map(|&z| format_complex(z)).collect::<Vec<_>>().join(","))
}

pub const CSV_HEADER: &str = "t,avg_re,avg_im,avg_angle,norm";

pub fn format_time_series(rows: &[TimeSample]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            format_float(r.t),
            format_float(r.average.re),
            format_float(r.average.im),
            format_float(r.angle),
            format_float(r.norm)
        );
    }
    out
}
