//! Writing CSV and JSON to standard output or a file.

use std::fs;
use std::io::{self, Write};

use serde_json::Value;

use crate::{Failure, Format, Output};

/// CSV text from a header and rows.
pub fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Failed(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(row).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Failed(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Failed(e.to_string()))
}

pub fn json_text(value: &Value) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Failed(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Writes either form, as selected by `--format`.
pub fn emit(
    output: &Output,
    header: &[String],
    rows: &[Vec<String>],
    json: &Value,
) -> Result<(), Failure> {
    let text = match output.format {
        Format::Csv => csv_text(header, rows)?,
        Format::Json => json_text(json)?,
    };
    write_text(output, &text)
}

pub fn write_text(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Failed(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Failed(e.to_string()))
        }
    }
}

pub fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}
