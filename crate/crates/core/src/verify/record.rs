//! Tab-separated records, one line per check after a header line:
//! `name grid max_residual worst_point passed tolerance indeterminate`.
//! Non-finite numbers are written as `inf`, `-inf` and `NaN`.

use std::fmt::Write as _;

use thiserror::Error;

use super::CheckReport;

pub const HEADER: &str = "name\tgrid\tmax_residual\tworst_point\tpassed\ttolerance\tindeterminate";

#[derive(Debug, Error, PartialEq)]
pub enum RecordError {
    #[error("line {line}: expected 7 tab-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: cannot parse {field} from {text:?}")]
    Field { line: usize, field: &'static str, text: String },
}

fn clean(text: &str) -> String {
    text.replace(['\t', '\n', '\r'], " ")
}

/// Serializes reports with a leading header line.
pub fn write_records(reports: &[CheckReport]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in reports {
        let _ = writeln!(
            out,
            "{}\t{}\t{:e}\t{:e}\t{}\t{:e}\t{}",
            clean(&r.name),
            clean(&r.grid_spec),
            r.max_residual,
            r.worst_point,
            r.passed,
            r.tolerance,
            r.indeterminate
        );
    }
    out
}

fn field<T: std::str::FromStr>(line: usize, field: &'static str, text: &str) -> Result<T, RecordError> {
    text.parse().map_err(|_| RecordError::Field { line, field, text: text.to_string() })
}

/// Parses the output of [`write_records`]. Blank lines and the header are
/// skipped.
pub fn parse_records(text: &str) -> Result<Vec<CheckReport>, RecordError> {
    let mut reports = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        if raw.trim().is_empty() || raw == HEADER {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 7 {
            return Err(RecordError::FieldCount { line, found: fields.len() });
        }
        reports.push(CheckReport {
            name: fields[0].to_string(),
            grid_spec: fields[1].to_string(),
            max_residual: field(line, "max_residual", fields[2])?,
            worst_point: field(line, "worst_point", fields[3])?,
            passed: field(line, "passed", fields[4])?,
            tolerance: field(line, "tolerance", fields[5])?,
            indeterminate: field(line, "indeterminate", fields[6])?,
        });
    }
    Ok(reports)
}
