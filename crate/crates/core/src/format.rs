//! JSON file formats for matrices.
//!
//! * complex matrix: `{"dim": n, "entries": [[re, im], ...]}`, `n²` pairs in row-major order;
//! * real matrix: nested arrays of numbers, one inner array per row;
//! * real vector: a flat array of numbers.
//!
//! Writers produce byte-stable output: fixed layout, shortest round-trip
//! float formatting, and `-0.0` folded to `0.0`.

use num_complex::Complex64;
use serde_json::Value;

use crate::complex::ComplexMatrix;
use crate::error::{Error, Result};
use crate::realmap::RealOperator;

/// A matrix read from disk in either format.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixFile {
    Complex(ComplexMatrix),
    Real(RealOperator),
}

fn number(v: &Value, path: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| Error::Format(format!("{path}: expected a number, found {v}")))
}

fn parse_complex(obj: &serde_json::Map<String, Value>) -> Result<ComplexMatrix> {
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::Format("dim: expected a positive integer".into()))? as usize;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("entries: expected an array".into()))?;
    if entries.len() != dim * dim {
        return Err(Error::Format(format!("entries: expected {} pairs, found {}", dim * dim, entries.len())));
    }
    let values = entries
        .iter()
        .enumerate()
        .map(|(k, e)| match e.as_array().map(Vec::as_slice) {
            Some([re, im]) => {
                let path = format!("entries[{k}]");
                Ok(Complex64::new(number(re, &path)?, number(im, &path)?))
            }
            _ => Err(Error::Format(format!("entries[{k}]: expected a [re, im] pair, found {e}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexMatrix::from_row_major(dim, &values)
}

fn parse_real(rows: &[Value]) -> Result<RealOperator> {
    let n = rows.len();
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let row = row.as_array().ok_or_else(|| Error::Format(format!("row {r}: expected an array")))?;
            if row.len() != n {
                return Err(Error::Format(format!("row {r}: expected {n} entries, found {}", row.len())));
            }
            row.iter().enumerate().map(|(c, x)| number(x, &format!("row {r}, column {c}"))).collect()
        })
        .collect::<Result<Vec<Vec<f64>>>>()?;
    RealOperator::from_rows(&parsed)
}

/// Parses either matrix format. Syntax errors report line and column.
pub fn parse_matrix(text: &str) -> Result<MatrixFile> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Format(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    match &value {
        Value::Object(obj) => parse_complex(obj).map(MatrixFile::Complex),
        Value::Array(rows) => parse_real(rows).map(MatrixFile::Real),
        other => Err(Error::Format(format!("expected an object or an array, found {other}"))),
    }
}

fn fmt_num(x: f64) -> String {
    serde_json::to_string(&(x + 0.0)).expect("finite float")
}

pub fn write_real_matrix(o: &RealOperator) -> String {
    let rows: Vec<String> = o
        .rows()
        .iter()
        .map(|r| format!("  [{}]", r.iter().map(|&x| fmt_num(x)).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}

pub fn write_complex_matrix(m: &ComplexMatrix) -> String {
    let entries: Vec<String> =
        m.row_major().iter().map(|z| format!("    [{}, {}]", fmt_num(z.re), fmt_num(z.im))).collect();
    format!("{{\n  \"dim\": {},\n  \"entries\": [\n{}\n  ]\n}}\n", m.dim(), entries.join(",\n"))
}

pub fn write_real_vector(v: &[f64]) -> String {
    format!("[{}]\n", v.iter().map(|&x| fmt_num(x)).collect::<Vec<_>>().join(", "))
}
