//! Report rendering: aligned text for humans, compact JSON for machines,
//! CSV with fixed columns where a report is tabular.

use std::fmt::Write as _;

use crate::commands::{BenchRow, LinearReport, PosetReport, SchmidtReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Commands that have no tabular shape reject `--format csv`.
#[derive(Debug, thiserror::Error)]
#[error("csv output is not available for this command (use text or json)")]
pub struct CsvUnsupported;

pub fn render_schmidt(
    report: &SchmidtReport,
    format: OutputFormat,
) -> Result<String, CsvUnsupported> {
    match format {
        OutputFormat::Json => Ok(to_json(report)),
        OutputFormat::Csv => Err(CsvUnsupported),
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "id:              {}", report.id).unwrap();
            writeln!(out, "kind:            {}", report.kind).unwrap();
            writeln!(out, "rank:            {}", report.rank).unwrap();
            let coeffs: Vec<String> = report
                .coefficients
                .iter()
                .map(|c| format!("{c:.12}"))
                .collect();
            writeln!(out, "coefficients:    {}", coeffs.join(", ")).unwrap();
            writeln!(out, "coefficient sum: {:.12}", report.coefficient_sum).unwrap();
            if let Some(entropy) = report.entropy {
                writeln!(out, "entropy (bits):  {entropy:.12}").unwrap();
            }
            if let Some(verdict) = report.cross_norm {
                writeln!(out, "cross-norm:      {verdict}").unwrap();
            }
            Ok(out)
        }
    }
}

pub fn render_linear(report: &LinearReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => {
            let mut out = String::from("id,entropy\n");
            for row in &report.rows {
                writeln!(out, "{},{}", row.id, row.entropy).unwrap();
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let width = report
                .rows
                .iter()
                .map(|r| r.id.len())
                .max()
                .unwrap_or(2)
                .max("id".len());
            writeln!(out, "{:<width$}  entropy (bits)", "id").unwrap();
            for row in &report.rows {
                writeln!(out, "{:<width$}  {:.12}", row.id, row.entropy).unwrap();
            }
            out
        }
    }
}

pub fn render_poset(report: &PosetReport, format: OutputFormat) -> Result<String, CsvUnsupported> {
    match format {
        OutputFormat::Json => Ok(to_json(report)),
        OutputFormat::Csv => Err(CsvUnsupported),
        OutputFormat::Text => {
            let mut out = String::new();
            for bucket in &report.buckets {
                let members: usize = bucket.chains.iter().map(Vec::len).sum();
                writeln!(
                    out,
                    "rank {}: {} state(s) in {} chain(s)",
                    bucket.rank,
                    members,
                    bucket.chains.len()
                )
                .unwrap();
                for (c, chain) in bucket.chains.iter().enumerate() {
                    writeln!(out, "  chain {c}: {}", chain.join(" -> ")).unwrap();
                }
            }
            writeln!(out, "oracle queries: {}", report.query_count).unwrap();
            Ok(out)
        }
    }
}

pub fn render_bench(rows: &[BenchRow], format: OutputFormat) -> String {
    let with_queries = rows.iter().any(|r| r.query_count.is_some());
    match format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => {
            let mut out = String::from(if with_queries {
                "n_registers,wall_time_seconds,query_count\n"
            } else {
                "n_registers,wall_time_seconds\n"
            });
            for row in rows {
                match row.query_count {
                    Some(q) => {
                        writeln!(out, "{},{:.9},{q}", row.n_registers, row.wall_time_seconds)
                            .unwrap()
                    }
                    None => {
                        writeln!(out, "{},{:.9}", row.n_registers, row.wall_time_seconds).unwrap()
                    }
                }
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            if with_queries {
                writeln!(
                    out,
                    "{:>12}  {:>18}  {:>12}",
                    "n_registers", "seconds", "queries"
                )
                .unwrap();
            } else {
                writeln!(out, "{:>12}  {:>18}", "n_registers", "seconds").unwrap();
            }
            for row in rows {
                match row.query_count {
                    Some(q) => writeln!(
                        out,
                        "{:>12}  {:>18.9}  {:>12}",
                        row.n_registers, row.wall_time_seconds, q
                    )
                    .unwrap(),
                    None => writeln!(
                        out,
                        "{:>12}  {:>18.9}",
                        row.n_registers, row.wall_time_seconds
                    )
                    .unwrap(),
                }
            }
            out
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}
