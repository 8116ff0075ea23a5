//! Deterministic text output: every CSV float is rendered in scientific
//! notation with 12 significant digits so identical runs diff clean.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use singosc::transitions::TransitionMatrix;

use crate::CliError;

/// Fixed scientific rendering, 12 significant digits.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.11e}")
}

/// Write text to a file, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}"))),
    }
}

/// Long-form CSV from labeled float columns.
pub fn long_csv<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<f64>>,
{
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            out.push_str(&fmt_float(v));
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Matrix CSV: header `n,m0,m1,...`, one row per starting level n.
pub fn matrix_csv(matrix: &TransitionMatrix) -> String {
    let mut out = String::from("n");
    for m in 0..matrix.cols {
        out.push_str(&format!(",m{m}"));
    }
    out.push('\n');
    for (n, row) in matrix.entries.iter().enumerate() {
        out.push_str(&n.to_string());
        for w in row {
            out.push(',');
            out.push_str(&fmt_float(*w));
        }
        out.push('\n');
    }
    out
}
