//! Command-line front end: `run` evaluates registered checks and optionally writes a JSON
//! report; `curves` tabulates quantities over a grid as CSV.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{run_checks, select_checks, CheckContext, CheckResult, Resource};
use crate::specfun::riemann_r_exp;
use crate::zeros::{alternating_zeta_series, load_zeros, waldvogel_rhs, zero_sum_f, ZeroTable, ZEROS_PATH_ENV};

pub const REPORT_SCHEMA: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN_CHECK: i32 = 2;
pub const EXIT_ZEROS_UNREADABLE: i32 = 3;
pub const EXIT_OTHER: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "fox-verify", version, about = "Numerical verification of Fox-equation and zeta identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run checks by name (comma-separated) or `all`.
    Run {
        #[arg(long, default_value = "all")]
        check: String,
        /// Zeros file; falls back to $FOX_ZEROS_PATH, then the bundled table.
        #[arg(long)]
        zeros: Option<PathBuf>,
        #[arg(long = "tol-scale", default_value_t = 1.0)]
        tol_scale: f64,
        #[arg(long = "max-zeros", default_value_t = 30)]
        max_zeros: usize,
        #[arg(long = "contour-height")]
        contour_height: Option<f64>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
    },
    /// Write a CSV table of a curve: mobius_solution, waldvogel, zero_sum or delta.
    Curves {
        #[arg(long)]
        name: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        zeros: Option<PathBuf>,
    },
}

/// Echo of the options a run was made with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub check: String,
    pub zeros_path: String,
    pub tolerance_scale: f64,
    pub max_zeros: usize,
    pub contour_height_override: Option<f64>,
    pub report_path: Option<String>,
    pub csv_path: Option<String>,
    pub parallel: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance_scale > 0.0) || !self.tolerance_scale.is_finite() {
            return Err(Error::Domain(format!("tolerance scale must be positive, got {}", self.tolerance_scale)));
        }
        if self.max_zeros == 0 {
            return Err(Error::Domain("max-zeros must be at least 1".into()));
        }
        if let Some(t) = self.contour_height_override {
            if !(t > 0.0) {
                return Err(Error::Domain(format!("contour height must be positive, got {t}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let passed = results.iter().filter(|r| r.pass).count();
        Self { passed, failed: results.len() - passed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub tool_version: String,
    pub timestamp: String,
    pub config: RunConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: RunConfig, results: Vec<CheckResult>) -> Self {
        Self {
            schema: REPORT_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            summary: Summary::of(&results),
            config,
            results,
        }
    }
}

/// 0 iff every result passed.
pub fn exit_status(results: &[CheckResult]) -> i32 {
    if results.iter().all(|r| r.pass) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn resolve_zeros(flag: Option<&Path>) -> Result<(ZeroTable, String)> {
    let env = std::env::var_os(ZEROS_PATH_ENV).filter(|p| !p.is_empty()).map(PathBuf::from);
    match flag.map(Path::to_path_buf).or(env) {
        Some(path) => Ok((load_zeros(&path)?, path.display().to_string())),
        None => {
            let table = ZeroTable::bundled()?;
            let source = table.source_path.clone();
            Ok((table, source))
        }
    }
}

fn format_params(r: &CheckResult) -> String {
    let mut out = String::new();
    for (k, v) in &r.params {
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "{k}={v}");
    }
    out
}

/// Human-readable result table.
pub fn render_table(results: &[CheckResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<28} {:>3}  {:<34} {:>22} {:>22} {:>10} {:>8}  result",
        "check", "#", "params", "lhs", "rhs", "abs_err", "tol"
    );
    for r in results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<28} {:>3}  {:<34} {:>22.15e} {:>22.15e} {:>10.2e} {:>8.0e}  {status}",
            r.name,
            r.grid_index,
            format_params(r),
            r.lhs,
            r.rhs,
            r.abs_err,
            r.tolerance
        );
        if let Some(e) = &r.error {
            let _ = writeln!(out, "    error: {e}");
        }
    }
    let s = Summary::of(results);
    let _ = writeln!(out, "{} passed, {} failed", s.passed, s.failed);
    out
}

/// Runs the selected checks and returns the report. Errors carry the CLI exit semantics.
pub fn execute_run(config: &RunConfig, zeros_flag: Option<&Path>) -> Result<Report> {
    config.validate()?;
    let specs = select_checks(&config.check)?;
    let needs_zeros = specs.iter().any(|s| s.requires == Resource::Zeros);
    let (zeros, source) = if needs_zeros || zeros_flag.is_some() {
        let (t, s) = resolve_zeros(zeros_flag)?;
        (Some(t), s)
    } else {
        (None, String::new())
    };
    let mut ctx = CheckContext::new(zeros)?;
    ctx.tolerance_scale = config.tolerance_scale;
    ctx.zero_sum.max_zeros = config.max_zeros;
    ctx.contour_height = config.contour_height_override;
    let results = run_checks(&specs, &ctx, config.parallel)?;
    let mut echo = config.clone();
    echo.zeros_path = source;
    Ok(Report::new(echo, results))
}

pub fn write_report(report: &Report, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Domain(format!("report serialization failed: {e}")))?;
    std::fs::write(path, json + "\n").map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// Abscissae from..=to in steps of `step` (inclusive of `to` up to rounding).
pub fn curve_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !from.is_finite() || !to.is_finite() || to < from {
        return Err(Error::Domain(format!("empty grid: from {from} to {to} step {step}")));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| from + k as f64 * step).collect())
}

pub const CURVES: [&str; 4] = ["mobius_solution", "waldvogel", "zero_sum", "delta"];

/// Header and rows for a named curve.
pub fn curve_table(name: &str, grid: &[f64], zeros: Option<&ZeroTable>) -> Result<(Vec<&'static str>, Vec<Vec<f64>>)> {
    let ctx = CheckContext::new(None)?;
    let need = || zeros.ok_or_else(|| Error::Resource(format!("curve `{name}` needs a zero table")));
    let mut rows = Vec::with_capacity(grid.len());
    let header = match name {
        "mobius_solution" => {
            let z = need()?;
            for &x in grid {
                let f = zero_sum_f(x, z, &ctx.zero_sum)?.value;
                let series = alternating_zeta_series(x, &ctx.zero_sum)?.value;
                rows.push(vec![x, PI * ctx.delta(2.0 * PI * x), -f + series]);
            }
            vec!["x", "pi_delta_2pix", "minus_f_plus_series"]
        }
        "waldvogel" => {
            let z = need()?;
            for &t in grid {
                let gram = riemann_r_exp(-2.0 * PI * t, &ctx.gram)?;
                rows.push(vec![t, gram, waldvogel_rhs(t, z, &ctx.zero_sum)?.value]);
            }
            vec!["t", "gram_R", "waldvogel_rhs"]
        }
        "zero_sum" => {
            let z = need()?;
            for &x in grid {
                rows.push(vec![x, zero_sum_f(x, z, &ctx.zero_sum)?.value]);
            }
            vec!["x", "zero_sum_f"]
        }
        "delta" => {
            for &y in grid {
                if y < 0.0 {
                    return Err(Error::Domain(format!("delta needs y >= 0, got {y}")));
                }
                rows.push(vec![y, ctx.delta(y)]);
            }
            vec!["y", "delta"]
        }
        other => {
            return Err(Error::Domain(format!("unknown curve `{other}`; valid: {}", CURVES.join(", "))));
        }
    };
    Ok((header, rows))
}

/// CSV with a header row and 17 significant digits per value.
pub fn render_csv(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn emit_curves(name: &str, from: f64, to: f64, step: f64, out: &Path, zeros: Option<&ZeroTable>) -> Result<usize> {
    let grid = curve_grid(from, to, step)?;
    let (header, rows) = curve_table(name, &grid, zeros)?;
    std::fs::write(out, render_csv(&header, &rows)).map_err(|source| Error::Io { path: out.to_path_buf(), source })?;
    Ok(rows.len())
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::UnknownCheck { .. } => EXIT_UNKNOWN_CHECK,
        Error::Io { .. } | Error::Format { .. } | Error::Validation { .. } => EXIT_ZEROS_UNREADABLE,
        _ => EXIT_OTHER,
    }
}

/// Parses `args` (program name first) and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_OTHER } else { EXIT_PASS };
        }
    };
    match cli.command {
        Command::Run { check, zeros, tol_scale, max_zeros, contour_height, report, parallel } => {
            let config = RunConfig {
                check,
                zeros_path: zeros.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
                tolerance_scale: tol_scale,
                max_zeros,
                contour_height_override: contour_height,
                report_path: report.as_ref().map(|p| p.display().to_string()),
                csv_path: None,
                parallel,
            };
            let report_data = match execute_run(&config, zeros.as_deref()) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return exit_code_for(&e);
                }
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(render_table(&report_data.results).as_bytes());
            if let Some(path) = report {
                if let Err(e) = write_report(&report_data, &path) {
                    eprintln!("error: {e}");
                    return EXIT_OTHER;
                }
            }
            exit_status(&report_data.results)
        }
        Command::Curves { name, from, to, step, out, zeros } => {
            let table = if name == "delta" {
                None
            } else {
                match resolve_zeros(zeros.as_deref()) {
                    Ok((t, _)) => Some(t),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_ZEROS_UNREADABLE;
                    }
                }
            };
            match emit_curves(&name, from, to, step, &out, table.as_ref()) {
                Ok(n) => {
                    println!("wrote {n} rows to {}", out.display());
                    EXIT_PASS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_OTHER
                }
            }
        }
    }
}
