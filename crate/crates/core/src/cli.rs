//! Command-line driver. [`run`] does all the work and returns the text for
//! stdout/stderr plus the exit code, so it can be tested without a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::database::MoleculeDatabase;
use crate::error::Error;
use crate::lambert::{alpha_dmrm, DmrmVariant};
use crate::oracle::{deviation_report, RadialGrid};
use crate::params::{derive, SpectroscopicParams};
use crate::potential::{verify_varshni, PotentialModel};
use crate::rotational::{badawi_coefficients, centrifugal_approx_error, default_error_grid, greene_aldrich_approx};
use crate::spectrum::{level_table, morse_vibrational_energy};
use crate::units;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

/// Environment variable naming a molecule table; `--db` takes precedence.
pub const DB_ENV: &str = "ROVIB_DB";

#[derive(Debug, Parser)]
#[command(name = "rovib", version, about = "Ro-vibrational levels of Tietz-Hua diatomics")]
struct Cli {
    /// Molecule table (default: $ROVIB_DB, then the bundled table)
    #[arg(long, global = true)]
    db: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Unit {
    #[value(name = "cm1")]
    Wavenumber,
    #[value(name = "roy_eV")]
    RoyEv,
}

#[derive(Debug, Args)]
struct Selection {
    molecule: String,
    /// Vibrational quantum numbers: comma list and/or inclusive ranges a..b
    #[arg(long, default_value = "0", value_parser = parse_list)]
    nu: NumberList,
    /// Rotational quantum numbers, same syntax as --nu
    #[arg(long = "J", alias = "j", default_value = "0", value_parser = parse_list)]
    j: NumberList,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form energy levels
    Levels {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, value_enum, default_value_t = Unit::Wavenumber)]
        unit: Unit,
    },
    /// Closed form against the finite-difference eigensolver
    Compare {
        #[command(flatten)]
        sel: Selection,
        /// Points on the base grid before refinement
        #[arg(long, default_value_t = 8000)]
        grid_points: usize,
    },
    /// Varshni-condition check and the two Lambert-W alpha estimates
    Varshni { molecule: String },
    /// Morse vibrational levels (J = 0)
    Morse {
        molecule: String,
        #[arg(long, default_value = "0", value_parser = parse_list)]
        nu: NumberList,
    },
    /// Relative error of the factorised and Greene-Aldrich centrifugal terms
    ApproxError { molecule: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberList(pub Vec<u32>);

/// Parses `0,3,5`, `0..9` and mixtures such as `0..2,10`.
pub fn parse_list(s: &str) -> Result<NumberList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(format!("empty entry in `{s}`"));
        }
        let number = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (number(a)?, number(b)?);
                if a > b {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(a..=b);
            }
            None => out.push(number(part)?),
        }
    }
    Ok(NumberList(out))
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn computation(message: impl std::fmt::Display, partial: String) -> Self {
        Outcome {
            code: EXIT_COMPUTATION,
            stdout: String::new(),
            stderr: format!("{partial}error: {message}\n"),
        }
    }

    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs one invocation. `env_db` stands in for `$ROVIB_DB`.
pub fn run<I, T>(args: I, env_db: Option<PathBuf>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };

    let db = match cli.db.or(env_db) {
        Some(path) => match MoleculeDatabase::load(&path) {
            Ok(db) => db,
            Err(e) => return Outcome::usage(e),
        },
        None => MoleculeDatabase::bundled(),
    };

    let molecule = match &cli.command {
        Command::Levels { sel, .. } | Command::Compare { sel, .. } => &sel.molecule,
        Command::Varshni { molecule } | Command::Morse { molecule, .. } | Command::ApproxError { molecule } => {
            molecule
        }
    };
    let params = match db.get(molecule) {
        Ok(p) => p.clone(),
        Err(e) => return Outcome::usage(e),
    };

    match &cli.command {
        Command::Levels { sel, unit } => cmd_levels(&params, &sel.nu.0, &sel.j.0, *unit, cli.format),
        Command::Compare { sel, grid_points } => cmd_compare(&params, &sel.nu.0, &sel.j.0, *grid_points, cli.format),
        Command::Varshni { .. } => cmd_varshni(&params, cli.format),
        Command::Morse { nu, .. } => cmd_morse(&params, &nu.0, cli.format),
        Command::ApproxError { .. } => cmd_approx_error(&params, cli.format),
    }
}

#[derive(Serialize)]
struct LevelOut<'a> {
    molecule: &'a str,
    nu: u32,
    #[serde(rename = "J")]
    j: u32,
    #[serde(skip_serializing_if = "Option::is_none", rename = "E_cm1")]
    e_cm1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "E_roy_eV")]
    e_roy_ev: Option<f64>,
    bound: bool,
}

fn render_levels(rows: &[LevelOut], unit: Unit, format: Format) -> String {
    let column = match unit {
        Unit::Wavenumber => "E_cm1",
        Unit::RoyEv => "E_roy_eV",
    };
    let value = |r: &LevelOut| match unit {
        Unit::Wavenumber => format!("{:.4}", r.e_cm1.unwrap_or(f64::NAN)),
        Unit::RoyEv => format!("{:.7}", r.e_roy_ev.unwrap_or(f64::NAN)),
    };
    let mut out = String::new();
    match format {
        Format::Csv => {
            let _ = writeln!(out, "molecule,nu,J,{column},bound");
            for r in rows {
                let _ = writeln!(out, "{},{},{},{},{}", r.molecule, r.nu, r.j, value(r), r.bound);
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(rows).expect("serialisable") + "\n";
        }
        Format::Text => {
            let _ = writeln!(out, "{:<8} {:>4} {:>4} {:>16}", "molecule", "nu", "J", column);
            for r in rows {
                let mark = if r.bound { "" } else { " *" };
                let _ = writeln!(out, "{:<8} {:>4} {:>4} {:>16}{mark}", r.molecule, r.nu, r.j, value(r));
            }
            if rows.iter().any(|r| !r.bound) {
                out.push_str("* above the effective dissociation threshold (unbound)\n");
            }
        }
    }
    out
}

fn cmd_levels(params: &SpectroscopicParams, nu: &[u32], j: &[u32], unit: Unit, format: Format) -> Outcome {
    let table = match level_table(params, nu, j) {
        Ok(t) => t,
        Err(e @ Error::EmptyInput(_)) => return Outcome::usage(e),
        Err(e) => return Outcome::computation(e, String::new()),
    };
    let mut rows = Vec::with_capacity(table.len());
    let mut failures = Vec::new();
    for row in &table {
        match &row.result {
            Ok(level) => rows.push(LevelOut {
                molecule: &params.name,
                nu: level.nu,
                j: level.j,
                e_cm1: (unit == Unit::Wavenumber).then_some(level.energy),
                e_roy_ev: (unit == Unit::RoyEv).then(|| units::wavenumber_to_roy_ev(level.energy, params.de)),
                bound: level.bound,
            }),
            Err(e) => failures.push(format!("nu = {}, J = {}: {e}", row.nu, row.j)),
        }
    }
    let rendered = render_levels(&rows, unit, format);
    if failures.is_empty() {
        Outcome::ok(rendered)
    } else {
        Outcome::computation(failures.join("; "), rendered)
    }
}

#[derive(Serialize)]
struct CompareOut<'a> {
    molecule: &'a str,
    nu: u32,
    #[serde(rename = "J")]
    j: u32,
    #[serde(rename = "E_cm1")]
    closed: f64,
    #[serde(rename = "E_oracle_cm1")]
    oracle: f64,
    #[serde(rename = "delta_cm1")]
    delta: f64,
}

#[derive(Serialize)]
struct CompareSummary<'a> {
    rows: Vec<CompareOut<'a>>,
    max_abs_delta_cm1: f64,
    mean_delta_cm1: f64,
}

fn cmd_compare(params: &SpectroscopicParams, nu: &[u32], j: &[u32], grid_points: usize, format: Format) -> Outcome {
    let grid = match RadialGrid::default_for(params.re).with_points(grid_points) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e),
    };
    let report = match deviation_report(params, nu, j, &grid) {
        Ok(r) => r,
        Err(e @ Error::EmptyInput(_)) => return Outcome::usage(e),
        Err(e) => return Outcome::computation(e, String::new()),
    };
    let rows: Vec<CompareOut> = report
        .rows
        .iter()
        .map(|r| CompareOut {
            molecule: &params.name,
            nu: r.nu,
            j: r.j,
            closed: r.closed,
            oracle: r.oracle,
            delta: r.delta,
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("molecule,nu,J,E_cm1,E_oracle_cm1,delta_cm1\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{:.4},{:.4},{:.4}",
                    r.molecule, r.nu, r.j, r.closed, r.oracle, r.delta
                );
            }
        }
        Format::Json => {
            let summary = CompareSummary {
                rows,
                max_abs_delta_cm1: report.max_abs_delta,
                mean_delta_cm1: report.mean_delta,
            };
            out = serde_json::to_string_pretty(&summary).expect("serialisable") + "\n";
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{:<8} {:>4} {:>4} {:>14} {:>14} {:>10}",
                "molecule", "nu", "J", "E_cm1", "E_oracle_cm1", "delta_cm1"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:<8} {:>4} {:>4} {:>14.4} {:>14.4} {:>10.4}",
                    r.molecule, r.nu, r.j, r.closed, r.oracle, r.delta
                );
            }
            let _ = writeln!(out, "mean delta   = {:.4} cm-1", report.mean_delta);
            let _ = writeln!(out, "max |delta|  = {:.4} cm-1", report.max_abs_delta);
        }
    }
    Outcome::ok(out)
}

#[derive(Serialize)]
struct VarshniOut<'a> {
    molecule: &'a str,
    q: f64,
    b_inv_a: f64,
    pole_radius_a: Option<f64>,
    beta_model_inv_a: f64,
    beta_table_inv_a: Option<f64>,
    beta_from_we_inv_a: f64,
    du_at_re: f64,
    slope_ok: bool,
    depth_cm1: f64,
    depth_ok: bool,
    d2u_at_re: f64,
    ke: f64,
    curvature_ok: bool,
    /// `None` when the argument falls below −1/e and W₀ has no real value.
    alpha_dmrm_as_published: Option<f64>,
    alpha_dmrm_corrected: f64,
    alpha_dmrm_difference: Option<f64>,
}

fn cmd_varshni(params: &SpectroscopicParams, format: Format) -> Outcome {
    let result = (|| -> crate::Result<VarshniOut> {
        let derived = derive(params)?;
        let report = verify_varshni(&PotentialModel::tietz_hua(params), &derived)?;
        let published = match alpha_dmrm(params, &derived, DmrmVariant::AsPublished) {
            Ok(a) => Some(a),
            Err(Error::LambertDomain { .. }) => None,
            Err(e) => return Err(e),
        };
        let corrected = alpha_dmrm(params, &derived, DmrmVariant::Corrected)?;
        Ok(VarshniOut {
            molecule: &params.name,
            q: derived.q,
            b_inv_a: derived.b,
            pole_radius_a: derived.pole_radius(),
            beta_model_inv_a: derived.beta,
            beta_table_inv_a: params.beta_table,
            beta_from_we_inv_a: derived.beta_from_we,
            du_at_re: report.du_at_re,
            slope_ok: report.slope_ok(),
            depth_cm1: report.depth,
            depth_ok: report.depth_ok(),
            d2u_at_re: report.d2u_at_re,
            ke: report.expected_ke,
            curvature_ok: report.curvature_ok(),
            alpha_dmrm_as_published: published,
            alpha_dmrm_corrected: corrected,
            alpha_dmrm_difference: published.map(|a| a - corrected),
        })
    })();
    let v = match result {
        Ok(v) => v,
        Err(e) => return Outcome::computation(e, String::new()),
    };
    let pass = |ok: bool| if ok { "pass" } else { "FAIL" };
    let mut out = String::new();
    match format {
        Format::Json => out = serde_json::to_string_pretty(&v).expect("serialisable") + "\n",
        Format::Csv => {
            let value = serde_json::to_value(&v).expect("serialisable");
            out.push_str("key,value\n");
            for (k, val) in value.as_object().expect("struct") {
                let text = match val {
                    serde_json::Value::Null => String::new(),
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k},{text}");
            }
        }
        Format::Text => {
            let _ = writeln!(out, "molecule            {}", v.molecule);
            let _ = writeln!(out, "q                   {:.6}", v.q);
            let _ = writeln!(out, "b                   {:.6} 1/A", v.b_inv_a);
            match v.pole_radius_a {
                Some(p) => {
                    let _ = writeln!(out, "q < 0, pole at      r = {p:.6} A");
                }
                None => out.push_str("pole                none (q >= 0)\n"),
            }
            let _ = writeln!(out, "beta (model)        {:.6} 1/A", v.beta_model_inv_a);
            if let Some(t) = v.beta_table_inv_a {
                let _ = writeln!(
                    out,
                    "beta (table)        {t:.6} 1/A  (rel. diff {:.2e})",
                    v.beta_model_inv_a / t - 1.0
                );
            }
            let _ = writeln!(out, "beta (from we)      {:.6} 1/A", v.beta_from_we_inv_a);
            let _ = writeln!(out, "dU/dr(re)           {:.3e} cm-1/A   {}", v.du_at_re, pass(v.slope_ok));
            let _ = writeln!(out, "U(inf) - U(re)      {:.4} cm-1   {}", v.depth_cm1, pass(v.depth_ok));
            let _ = writeln!(
                out,
                "d2U/dr2(re)         {:.4} cm-1/A^2 (Ke = {:.4})   {}",
                v.d2u_at_re,
                v.ke,
                pass(v.curvature_ok)
            );
            match v.alpha_dmrm_as_published {
                Some(a) => {
                    let _ = writeln!(out, "alpha_DMRM (W(r q beta e^(-r beta/2)))  {a:.8} 1/A");
                }
                None => out.push_str("alpha_DMRM (W(r q beta e^(-r beta/2)))  undefined (argument below -1/e)\n"),
            }
            let _ = writeln!(out, "alpha_DMRM (W(r q beta e^(-r beta)))    {:.8} 1/A", v.alpha_dmrm_corrected);
            match v.alpha_dmrm_difference {
                Some(d) => {
                    let flag = if d.abs() > 1e-6 { "unequal" } else { "equal" };
                    let _ = writeln!(out, "difference          {d:.8} 1/A   {flag}");
                }
                None => out.push_str("difference          n/a   unequal\n"),
            }
        }
    }
    let all_ok = v.slope_ok && v.depth_ok && v.curvature_ok;
    if all_ok {
        Outcome::ok(out)
    } else {
        Outcome::computation("Varshni conditions not satisfied", out)
    }
}

fn cmd_morse(params: &SpectroscopicParams, nu: &[u32], format: Format) -> Outcome {
    if nu.is_empty() {
        return Outcome::usage(Error::EmptyInput("nu list"));
    }
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &n in nu {
        match morse_vibrational_energy(params.de, params.we, n) {
            Ok(e) => rows.push(LevelOut {
                molecule: &params.name,
                nu: n,
                j: 0,
                e_cm1: Some(e),
                e_roy_ev: None,
                bound: true,
            }),
            Err(e) => failures.push(e.to_string()),
        }
    }
    let rendered = render_levels(&rows, Unit::Wavenumber, format);
    if failures.is_empty() {
        Outcome::ok(rendered)
    } else {
        Outcome::computation(failures.join("; "), rendered)
    }
}

#[derive(Serialize)]
struct ApproxOut {
    r_a: f64,
    r_over_re: f64,
    factorised_rel_error: f64,
    greene_aldrich_rel_error: f64,
}

fn cmd_approx_error(params: &SpectroscopicParams, format: Format) -> Outcome {
    let result = (|| -> crate::Result<Vec<ApproxOut>> {
        let derived = derive(params)?;
        let coeffs = badawi_coefficients(derived.b * params.re, params.eta)?;
        let grid = default_error_grid(params.re, derived.pole_radius());
        let errors = centrifugal_approx_error(&coeffs, derived.b, &grid)?;
        grid.iter()
            .zip(errors)
            .map(|(&r, err)| {
                let ga = greene_aldrich_approx(derived.b, r)? * r * r - 1.0;
                Ok(ApproxOut {
                    r_a: r,
                    r_over_re: r / params.re,
                    factorised_rel_error: err,
                    greene_aldrich_rel_error: ga,
                })
            })
            .collect()
    })();
    let rows = match result {
        Ok(r) => r,
        Err(e) => return Outcome::computation(e, String::new()),
    };
    let mut out = String::new();
    match format {
        Format::Json => out = serde_json::to_string_pretty(&rows).expect("serialisable") + "\n",
        Format::Csv => {
            out.push_str("r_A,r_over_re,factorised_rel_error,greene_aldrich_rel_error\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:.6},{:.6},{:.6e},{:.6e}",
                    r.r_a, r.r_over_re, r.factorised_rel_error, r.greene_aldrich_rel_error
                );
            }
        }
        Format::Text => {
            let _ = writeln!(out, "{:>10} {:>10} {:>14} {:>14}", "r_A", "r/re", "factorised", "greene-aldrich");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:>10.5} {:>10.5} {:>14.4e} {:>14.4e}",
                    r.r_a, r.r_over_re, r.factorised_rel_error, r.greene_aldrich_rel_error
                );
            }
        }
    }
    Outcome::ok(out)
}
