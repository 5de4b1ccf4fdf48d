//! CSV and JSON emission.

use crate::config::OutputFormat;
use crate::sweep::Row;
use serde::Serialize;
use std::io::{self, Write};

pub const CSV_HEADER: &str =
    "scenario,method,n,omega,gamma,xi,p,tau,rounds,t,qfi,qfi_over_tau2,qfi_normalized";

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(out: &mut W, rows: &[Row]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let p = &r.params;
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.scenario,
            r.method,
            p.n,
            fmt_f64(p.omega),
            fmt_f64(p.gamma),
            fmt_f64(p.xi),
            fmt_f64(p.p),
            fmt_f64(p.tau),
            p.rounds,
            fmt_f64(r.t()),
            fmt_f64(r.qfi),
            fmt_f64(r.qfi_over_tau2()),
            fmt_f64(r.qfi_normalized()),
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonRow<'a> {
    scenario: &'a str,
    method: &'a str,
    n: u32,
    omega: f64,
    gamma: f64,
    xi: f64,
    p: f64,
    tau: f64,
    rounds: u64,
    t: f64,
    qfi: Option<f64>,
    qfi_over_tau2: Option<f64>,
    qfi_normalized: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

pub fn write_json<W: Write>(out: &mut W, rows: &[Row]) -> io::Result<()> {
    let finite = |x: f64| x.is_finite().then_some(x);
    let items: Vec<JsonRow> = rows
        .iter()
        .map(|r| JsonRow {
            scenario: r.scenario.as_str(),
            method: r.method.as_str(),
            n: r.params.n,
            omega: r.params.omega,
            gamma: r.params.gamma,
            xi: r.params.xi,
            p: r.params.p,
            tau: r.params.tau,
            rounds: r.params.rounds,
            t: r.t(),
            qfi: finite(r.qfi),
            qfi_over_tau2: finite(r.qfi_over_tau2()),
            qfi_normalized: finite(r.qfi_normalized()),
            error: r.error.as_deref(),
        })
        .collect();
    serde_json::to_writer_pretty(&mut *out, &items)?;
    writeln!(out)
}

pub fn write_rows<W: Write>(out: &mut W, rows: &[Row], format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(out, rows),
        OutputFormat::Json => write_json(out, rows),
    }
}
