//! Deterministic CSV and JSON emission: fixed 12-significant-digit number
//! formatting, stdout or file sinks, and the parameter sidecar written next
//! to file outputs.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{Map, Number, Value};

use crate::CliError;

pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

pub fn json_num(x: f64) -> Value {
    fmt12(x)
        .parse::<f64>()
        .ok()
        .and_then(Number::from_f64)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn write_record(
    record: Map<String, Value>,
    out: Option<&Path>,
    meta: Value,
) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(&Value::Object(record))
        .expect("JSON records have no non-serializable values");
    text.push('\n');
    emit(text.as_bytes(), out, meta)
}

pub fn write_csv(
    headers: &[String],
    rows: &[Vec<String>],
    out: Option<&Path>,
    meta: Value,
) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(headers).map_err(csv_io)?;
    for row in rows {
        writer.write_record(row).map_err(csv_io)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|err| CliError::Io(std::io::Error::other(err.to_string())))?;
    emit(&bytes, out, meta)
}

fn csv_io(err: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(err.to_string()))
}

fn emit(bytes: &[u8], out: Option<&Path>, meta: Value) -> Result<(), CliError> {
    match out {
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
        Some(path) => {
            write_file(path, bytes)?;
            let mut meta_text =
                serde_json::to_string_pretty(&meta).expect("meta has no non-serializable values");
            meta_text.push('\n');
            write_file(&sidecar_path(path), meta_text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|err| {
        CliError::Io(std::io::Error::new(
            err.kind(),
            format!("{}: {err}", path.display()),
        ))
    })
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".meta.json");
    path.with_file_name(name)
}
