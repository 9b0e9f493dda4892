//! Table serialization: CSV (comma separated, header row, LF endings,
//! `.` decimal point) and JSON (array of row objects). Floats are written
//! with shortest round-trip formatting so identical runs produce identical
//! bytes and re-parsing recovers the exact values.

use serde::Serialize;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// A row type that knows its CSV representation.
pub trait Tabular {
    fn headers() -> &'static [&'static str];
    fn row(&self) -> Vec<String>;
}

pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-4..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => fmt_f64(v),
        None => "n/a".to_string(),
    }
}

/// Render rows in the requested format and write them to `out` or stdout.
pub fn emit<T: Tabular + Serialize>(
    rows: &[T],
    format: OutputFormat,
    out: Option<&PathBuf>,
) -> io::Result<()> {
    let rendered = match format {
        OutputFormat::Csv => {
            let mut text = String::new();
            text.push_str(&T::headers().join(","));
            text.push('\n');
            for row in rows {
                text.push_str(&row.row().join(","));
                text.push('\n');
            }
            text
        }
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(rows)?;
            text.push('\n');
            text
        }
    };
    match out {
        Some(path) => fs::write(path, rendered),
        None => io::stdout().write_all(rendered.as_bytes()),
    }
}
