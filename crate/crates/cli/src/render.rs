use std::io::Write;

use serde::Serialize;

use crate::cases::ClosedReport;
use crate::record::{Status, VerificationRecord};
use crate::suite::Report;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn out_err(e: impl std::fmt::Display) -> CliError {
    CliError::Output(e.to_string())
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |x| format!("{x:.2}"))
}

pub fn report<W: Write>(w: &mut W, report: &Report, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, &report.records).map_err(out_err)?;
            writeln!(w).map_err(out_err)
        }
        Format::Csv => csv_records(w, &report.records),
        Format::Text => text_report(w, report),
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    case: &'a str,
    theorem: &'a str,
    closed: f64,
    numeric: f64,
    stderr: Option<f64>,
    z: Option<f64>,
    status: Status,
    ms: f64,
}

fn csv_records<W: Write>(w: &mut W, records: &[VerificationRecord]) -> Result<(), CliError> {
    let mut out = csv::Writer::from_writer(w);
    for r in records {
        out.serialize(CsvRow {
            case: &r.case,
            theorem: &r.theorem,
            closed: r.closed,
            numeric: r.numeric,
            stderr: r.stderr,
            z: r.z,
            status: r.status,
            ms: r.ms,
        })
        .map_err(out_err)?;
    }
    out.flush().map_err(out_err)
}

fn text_report<W: Write>(w: &mut W, report: &Report) -> Result<(), CliError> {
    let line = |w: &mut W, s: String| writeln!(w, "{s}").map_err(out_err);
    line(
        w,
        format!(
            "{:<22} {:<20} {:>20} {:>20} {:>10} {:>8} {:>6} {:>9}",
            "case", "theorem", "closed", "numeric", "stderr", "z", "status", "ms"
        ),
    )?;
    for r in &report.records {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        line(
            w,
            format!(
                "{:<22} {:<20} {:>20.15} {:>20.15} {:>10} {:>8} {:>6} {:>9.1}",
                r.case,
                r.theorem,
                r.closed,
                r.numeric,
                r.stderr.map_or_else(|| "-".into(), |x| format!("{x:.2e}")),
                opt(r.z),
                status,
                r.ms
            ),
        )?;
    }
    let failed = report.records.iter().filter(|r| !r.passed()).count();
    line(w, format!("\n{} records, {} failed", report.records.len(), failed))?;
    for note in &report.notes {
        line(w, format!("note: {note}"))?;
    }
    Ok(())
}

pub fn closed<W: Write>(w: &mut W, r: &ClosedReport, json: bool) -> Result<(), CliError> {
    if json {
        serde_json::to_writer_pretty(&mut *w, r).map_err(out_err)?;
        return writeln!(w).map_err(out_err);
    }
    let thm = if r.theorem.is_empty() { String::new() } else { format!(" ({})", r.theorem) };
    writeln!(w, "{}{thm}", r.case).map_err(out_err)?;
    match &r.exact {
        Some(q) => writeln!(w, "  value  {q} = {:.17}", r.value),
        None => writeln!(w, "  value  {:.17}", r.value),
    }
    .map_err(out_err)?;
    for t in &r.terms {
        if t.im == 0.0 {
            writeln!(w, "  {:<26} {:.17}", t.label, t.re)
        } else {
            writeln!(w, "  {:<26} {:.17} {:+.3e}i", t.label, t.re, t.im)
        }
        .map_err(out_err)?;
    }
    Ok(())
}

/// Writes any serializable estimate as JSON or as `key  value` lines.
pub fn fields<W: Write, T: Serialize>(w: &mut W, value: &T, json: bool) -> Result<(), CliError> {
    let v = serde_json::to_value(value).map_err(out_err)?;
    if json {
        serde_json::to_writer_pretty(&mut *w, &v).map_err(out_err)?;
        return writeln!(w).map_err(out_err);
    }
    if let serde_json::Value::Object(map) = v {
        for (k, v) in map {
            let shown = match v {
                serde_json::Value::String(s) => s,
                other => other.to_string(),
            };
            writeln!(w, "{k:<10} {shown}").map_err(out_err)?;
        }
    }
    Ok(())
}
