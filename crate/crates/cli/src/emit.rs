use serde::Serialize;

use crate::error::CliError;
use crate::rows::{Document, Row, SCHEMA_VERSION};

/// RFC 4180 CSV with a header row; an empty table is header-only.
pub fn emit_csv<R: Row>(rows: &[R], dim: usize) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record(R::header(dim))?;
    for row in rows {
        w.write_record(row.record())?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn emit_json<R: Serialize + Clone>(rows: &[R]) -> Result<String, CliError> {
    let doc = Document { schema_version: SCHEMA_VERSION, rows: rows.to_vec() };
    let mut s = serde_json::to_string(&doc)?;
    s.push('\n');
    Ok(s)
}
