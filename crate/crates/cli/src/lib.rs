//! Scenario-driven command line front end for the support-cone toolkit.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use conecheck_core::{grid, PartnerContext};

pub mod output;
pub mod runner;
pub mod scenario;
pub mod selftest;

use scenario::ScenarioFile;

#[derive(Debug, Parser)]
#[command(
    name = "conecheck",
    about = "Support-cone congruence and symmetry verification from scenario files",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full pipeline: partner search per apex, then symmetry certificates
    CheckTheorem {
        scenario: PathBuf,
        /// Override the apex sample count N
        #[arg(long)]
        samples: Option<usize>,
        /// Override the meridian count M
        #[arg(long)]
        meridians: Option<usize>,
        /// Override the congruence tolerance
        #[arg(long = "tol-congruence")]
        tol_congruence: Option<f64>,
        /// Override the grid seed
        #[arg(long)]
        seed: Option<u64>,
        /// Report path (defaults to the scenario's output.report_path, else stdout)
        #[arg(long)]
        out: Option<String>,
        /// Directory for CSV dumps
        #[arg(long = "csv-dir")]
        csv_dir: Option<String>,
    },
    /// Dump the graze from one apex as CSV (azimuth, normal, contact point)
    Graze {
        scenario: PathBuf,
        /// Apex coordinates, comma separated; defaults to the first surface sample
        #[arg(long)]
        apex: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Search the partner apex minimizing the cone translation distance
    Partner {
        scenario: PathBuf,
        #[arg(long)]
        apex: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Trace the graze-diameter difference along a surface path and locate its zero
    AppendixPath {
        scenario: PathBuf,
        /// Start point on the surface; defaults to the first surface sample
        #[arg(long)]
        from: Option<String>,
        /// End point on the surface; defaults to the partner of the start point
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Scan parallel support-plane sections for inverse homothety with center on the contact chord
    Conjecture1 {
        scenario: PathBuf,
        /// Number of scan directions
        #[arg(long, default_value_t = 64)]
        directions: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Build the isoptic of a planar body and report angle and asymmetry defects
    Isoptic {
        scenario: PathBuf,
        /// Visual angle in radians, strictly between 0 and pi
        #[arg(long)]
        alpha: f64,
        /// Isoptic vertex count
        #[arg(long, default_value_t = 256)]
        count: usize,
        /// CSV path for the polyline
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the built-in analytic oracle suite
    Selftest {
        /// Congruence tolerance for the embedded end-to-end scenario
        #[arg(long = "tol-congruence")]
        tol_congruence: Option<f64>,
    },
}

/// Entry point shared by the binary and the integration tests.
/// Exit codes: 0 success/verified, 1 error, 2 hypothesis failed,
/// 3 conclusion failed.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprintln!("conecheck: {e}");
            return 1;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("conecheck: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::CheckTheorem { scenario, samples, meridians, tol_congruence, seed, out, csv_dir } => {
            let mut file = load(&scenario)?;
            if let Some(n) = samples {
                file.sampling.samples = n;
            }
            if let Some(m) = meridians {
                file.sampling.meridians = m;
            }
            if let Some(t) = tol_congruence {
                file.tolerances.congruence = t;
            }
            if let Some(s) = seed {
                file.sampling.grid_seed = s;
            }
            let s = file.scenario()?;
            let report = runner::check_theorem(&s, runner::thread_count())?;
            let json = output::to_json(&report)?;
            let target = out.or(file.output.report_path.clone());
            output::emit(target.as_deref(), &json)?;
            let csv_target = csv_dir.or(file.output.csv_dir.clone());
            if let Some(dir) = csv_target {
                output::emit(
                    Some(&join(&dir, "apex_records.csv")),
                    &output::records_csv(&report.records),
                )?;
            }
            Ok(output::verdict_exit_code(&report))
        }
        Command::Graze { scenario, apex, out } => {
            let file = load(&scenario)?;
            let body = file.convex_body()?;
            let apex = match apex {
                Some(s) => parse_point(&s)?,
                None => first_sample(&file)?,
            };
            let g = conecheck_core::graze(&body, &apex, file.sampling.meridians)
                .map_err(|e| e.to_string())?;
            let csv = output::graze_csv(&g);
            let target = out.or_else(|| file.output.csv_dir.as_ref().map(|d| join(d, "graze.csv")));
            output::emit(target.as_deref(), &csv)?;
            Ok(0)
        }
        Command::Partner { scenario, apex, out } => {
            let file = load(&scenario)?;
            let s = file.scenario()?;
            let apex = match apex {
                Some(s) => parse_point(&s)?,
                None => first_sample(&file)?,
            };
            let ctx = PartnerContext::build(&s).map_err(|e| e.to_string())?;
            let partner = ctx.find_partner(&apex).map_err(|e| e.to_string())?;
            #[derive(serde::Serialize)]
            struct PartnerReport {
                apex: Vec<f64>,
                partner: Vec<f64>,
                distance: f64,
            }
            let json = output::to_json(&PartnerReport {
                apex,
                partner: partner.point,
                distance: partner.distance,
            })?;
            let target = out.or(file.output.report_path.clone());
            output::emit(target.as_deref(), &json)?;
            Ok(0)
        }
        Command::AppendixPath { scenario, from, to, out } => {
            let file = load(&scenario)?;
            let s = file.scenario()?;
            let x0 = match from {
                Some(p) => parse_point(&p)?,
                None => first_sample(&file)?,
            };
            let y0 = match to {
                Some(p) => parse_point(&p)?,
                None => {
                    let ctx = PartnerContext::build(&s).map_err(|e| e.to_string())?;
                    ctx.find_partner(&x0).map_err(|e| e.to_string())?.point
                }
            };
            let record =
                conecheck_core::appendix_path_search(&s, &x0, &y0).map_err(|e| e.to_string())?;
            let json = output::to_json(&record)?;
            let target = out.or(file.output.report_path.clone());
            output::emit(target.as_deref(), &json)?;
            Ok(0)
        }
        Command::Conjecture1 { scenario, directions, out } => {
            let file = load(&scenario)?;
            let s = file.scenario()?;
            let dirs = grid::unit_directions(s.body.dim(), directions, s.grid_phase());
            let records =
                conecheck_core::conjecture1_scan(&s, &dirs).map_err(|e| e.to_string())?;
            let json = output::to_json(&records)?;
            let target = out.or(file.output.report_path.clone());
            output::emit(target.as_deref(), &json)?;
            Ok(0)
        }
        Command::Isoptic { scenario, alpha, count, out } => {
            let file = load(&scenario)?;
            let body = file.planar_body()?;
            let curve =
                conecheck_core::isoptic_curve(&body, alpha, count).map_err(|e| e.to_string())?;
            let report =
                conecheck_core::remark2_report(&body, alpha, count).map_err(|e| e.to_string())?;
            let csv_target =
                out.or_else(|| file.output.csv_dir.as_ref().map(|d| join(d, "isoptic.csv")));
            output::emit(csv_target.as_deref(), &output::isoptic_csv(&curve))?;
            let json = output::to_json(&report)?;
            output::emit(file.output.report_path.as_deref(), &json)?;
            Ok(0)
        }
        Command::Selftest { tol_congruence } => {
            let checks = selftest::run_selftest(tol_congruence);
            let mut failed = 0;
            for c in &checks {
                if c.passed {
                    println!("ok   {} ({})", c.name, c.detail);
                } else {
                    failed += 1;
                    println!("FAIL {} ({})", c.name, c.detail);
                }
            }
            println!("selftest: {} passed, {} failed", checks.len() - failed, failed);
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn load(path: &Path) -> Result<ScenarioFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read scenario {}: {e}", path.display()))?;
    ScenarioFile::parse(&text)
}

fn first_sample(file: &ScenarioFile) -> Result<Vec<f64>, String> {
    let surface = file.star_surface()?;
    let phase = grid::seed_phase(file.sampling.grid_seed);
    Ok(surface
        .sample_with_phase(file.sampling.samples, phase)
        .into_iter()
        .next()
        .expect("sample count validated positive"))
}

fn parse_point(text: &str) -> Result<Vec<f64>, String> {
    let coords: Result<Vec<f64>, _> =
        text.split(',').map(|t| t.trim().parse::<f64>()).collect();
    coords.map_err(|e| format!("cannot parse point '{text}': {e}"))
}

fn join(dir: &str, name: &str) -> String {
    Path::new(dir).join(name).to_string_lossy().into_owned()
}
