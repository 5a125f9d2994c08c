//! `tricenter`: compute, verify, batch-process and plot triangle centers.
//!
//! Exit codes: 0 success, 1 verification or (with `--strict`) solver
//! failure, 2 usage or input error.

mod batch;
mod document;
mod input;
mod output;
mod plot;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tricenter::hotspot;
use tricenter::verification::{self, Status, VerifyOptions};

use document::{CenterName, Settings};

#[derive(Parser)]
#[command(
    name = "tricenter",
    version,
    about = "Equiareal, illuminating and thermodynamic triangle centers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute centers of one triangle.
    Compute(ComputeArgs),
    /// Recompute the reference values and report one line per criterion.
    Verify(VerifyArgs),
    /// Process a file with one JSON triangle record per line.
    Batch(BatchArgs),
    /// Draw the triangle, its equal-area disk and the centers as SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn positive_float(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Comma-separated subset of equiareal, illuminating, thermodynamic, classical [default: all].
    #[arg(long, value_enum, value_delimiter = ',')]
    centers: Vec<CenterName>,
    /// Relative tolerance for the equiareal (times the diameter) and illuminating solvers.
    #[arg(long, value_parser = positive_float)]
    tol: Option<f64>,
    /// Finest mesh level of the finite-element hot spot.
    #[arg(long, default_value_t = hotspot::DEFAULT_LEVEL,
          value_parser = clap::value_parser!(u32).range(hotspot::FIRST_LEVEL as i64..=10))]
    fem_level: u32,
}

impl SolveArgs {
    fn settings(&self) -> Settings {
        Settings {
            centers: if self.centers.is_empty() {
                CenterName::ALL.to_vec()
            } else {
                self.centers.clone()
            },
            tol: self.tol,
            fem_level: self.fem_level,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// T1, T2, T3 or "x,y x,y x,y".
    #[arg(long)]
    triangle: String,
    #[command(flatten)]
    solve: SolveArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Exit 1 when a center fails or does not converge.
    #[arg(long)]
    strict: bool,
    /// Write the document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Skip the level-8 finite-element run.
    #[arg(long, conflicts_with = "full")]
    quick: bool,
    /// Run every criterion (the default).
    #[arg(long)]
    full: bool,
    /// Seed for the randomized criteria.
    #[arg(long, default_value_t = verification::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Multiplies every tolerance; for testing the failure path.
    #[arg(long, hide = true, default_value_t = 1.0)]
    tolerance_scale: f64,
}

#[derive(Args)]
struct BatchArgs {
    /// Input file, or - for standard input.
    input: PathBuf,
    #[command(flatten)]
    solve: SolveArgs,
    /// Exit 1 when any record fails.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    triangle: String,
    #[command(flatten)]
    solve: SolveArgs,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    /// Exit code 1.
    Check(String),
    /// Exit code 2.
    Input(String),
}

type CliResult = Result<(), Failure>;

fn emit(out: Option<&Path>, content: &str) -> CliResult {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Input(format!("cannot write output: {e}")))
        }
    }
}

fn compute(args: ComputeArgs) -> CliResult {
    let tri = input::parse_spec(&args.triangle).map_err(|e| Failure::Input(e.to_string()))?;
    let doc = document::compute(&tri, &args.solve.settings());
    let rendered = match args.format {
        Format::Json => output::to_json(&doc) + "\n",
        Format::Text => output::to_text(&doc),
    };
    emit(args.out.as_deref(), &rendered)?;
    if args.strict && doc.has_failures() {
        return Err(Failure::Check(
            "some centers failed or did not converge".into(),
        ));
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> CliResult {
    let opts = VerifyOptions {
        full: !args.quick,
        seed: args.seed,
        tolerance_scale: args.tolerance_scale,
    };
    let reports = verification::run(&opts);
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let rendered = match args.format {
        Format::Text => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            s += &format!("{} criteria, {failed} failed\n", reports.len());
            s
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "id": r.id,
                        "name": r.name,
                        "status": r.status.label(),
                        "detail": r.detail,
                    })
                })
                .collect();
            output::to_json(&serde_json::json!({ "criteria": rows, "passed": failed == 0 })) + "\n"
        }
    };
    emit(args.out.as_deref(), &rendered)?;
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} criteria failed")));
    }
    Ok(())
}

fn batch(args: BatchArgs) -> CliResult {
    let threads = batch::thread_count().map_err(Failure::Input)?;
    let mut text = String::new();
    let read = if args.input.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(&args.input).map(|s| text = s)
    };
    read.map_err(|e| Failure::Input(format!("cannot read {}: {e}", args.input.display())))?;

    let docs = batch::run(&text, &args.solve.settings(), threads);
    let rendered: String = docs.iter().map(|d| output::to_json(d) + "\n").collect();
    emit(args.out.as_deref(), &rendered)?;
    let failures = docs.iter().filter(|d| d.has_failures()).count();
    eprintln!("processed {} triangles, {failures} with errors", docs.len());
    if args.strict && failures > 0 {
        return Err(Failure::Check(format!("{failures} records failed")));
    }
    Ok(())
}

fn plot(args: PlotArgs) -> CliResult {
    let tri = input::parse_spec(&args.triangle).map_err(|e| Failure::Input(e.to_string()))?;
    let mut settings = args.solve.settings();
    // The disk is drawn at the equiareal center whether or not it is marked.
    let mark_equiareal = settings.centers.contains(&CenterName::Equiareal);
    settings.centers.push(CenterName::Equiareal);
    let mut doc = document::compute(&tri, &settings);
    let disk = doc
        .point("equiareal")
        .map(|c| (c, document::disk_radius(&tri)));
    if !mark_equiareal {
        doc.centers.remove("equiareal");
    }
    let svg = plot::render(&doc, disk);
    for (name, c) in &doc.centers {
        if let Some(e) = &c.error {
            eprintln!("warning: {name}: {e}");
        }
    }
    emit(Some(&args.out), &svg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Batch(a) => batch(a),
        Command::Plot(a) => plot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("tricenter: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("tricenter: error: {msg}");
            ExitCode::from(2)
        }
    }
}
