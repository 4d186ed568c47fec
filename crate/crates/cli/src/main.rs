//! `conformal-em`: build, verify and scan the compact solutions.
//!
//! Exit codes: 0 when every check passes, 1 for usage errors, 2 when a
//! mathematical check or construction fails.

mod commands;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use conformal_em::exact::{self, Exact};
use conformal_em::{Branch, Error};

use commands::{Settings, SweepArgs, VerifyArgs};
use report::RunReport;

const CSV_HELP: &str = "\
CSV columns (RFC 4180, one header row):
  verify     x, s_h, tracefree_norm, j_residual, em_residual, maxwell_df, maxwell_dstar_f
  enumerate  index, branch, a, b, alpha, s_h, sv
  moduli     k, b_over_a, a, b, sv, bound_gap
  sweep      parameter, sv, s_h, v_h, einstein_residual   (parameter = b/a)
Floats carry 17 significant digits. Empty cells mark Einstein points.

Exit codes: 0 pass, 1 usage error, 2 mathematical validation failure.";

#[derive(Parser, Debug)]
#[command(name = "conformal-em", version, about, after_help = CSV_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report to this path ("-" for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write the CSV table to this path ("-" for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Pass threshold for residual checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Number of oracle sample points.
    #[arg(long, global = true, default_value_t = 32)]
    samples: usize,
}

#[derive(Args, Debug, Clone)]
struct SolutionArgs {
    /// Hirzebruch index k ≥ 1.
    #[arg(long)]
    k: u32,
    /// Left endpoint, as "p/q" or an exact decimal.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_exact)]
    a: Exact,
    /// Right endpoint, as "p/q" or an exact decimal.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_exact)]
    b: Exact,
    /// "first" or "second" (second requires k = 1).
    #[arg(long, default_value = "first", value_parser = parse_branch)]
    branch: Branch,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct and validate a solution and report its invariants.
    Build(SolutionArgs),
    /// Run the curvature oracle on a solution.
    Verify {
        #[command(flatten)]
        solution: SolutionArgs,
        /// Test hook: multiply α by (1 + EPS) before verifying.
        #[arg(long, value_name = "EPS", allow_hyphen_values = true, value_parser = parse_exact)]
        perturb_alpha: Option<Exact>,
        /// Include the full Ricci tensor of h at every sample.
        #[arg(long)]
        full_tensor: bool,
    },
    /// List all k = 1 solutions in the class u𝓛 - v𝔈.
    Enumerate {
        #[arg(long, value_parser = parse_exact)]
        u: Exact,
        #[arg(long, value_parser = parse_exact)]
        v: Exact,
    },
    /// The Einstein point of the k = 1 First family.
    Page,
    /// sV per admissible k and the component lower bound for Ω(𝒟), Ω(ℱ).
    Moduli {
        #[arg(long, value_parser = parse_exact)]
        d: Exact,
        #[arg(long, value_parser = parse_exact)]
        f: Exact,
    },
    /// Invariants along an even grid of b/a at fixed a.
    Sweep {
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value = "first", value_parser = parse_branch)]
        branch: Branch,
        #[arg(long, default_value = "1", value_parser = parse_exact)]
        a: Exact,
        /// First b/a on the grid (> 1).
        #[arg(long, value_parser = parse_exact)]
        from: Exact,
        /// Last b/a on the grid.
        #[arg(long, value_parser = parse_exact)]
        to: Exact,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
}

fn parse_exact(s: &str) -> Result<Exact, String> {
    exact::parse(s).map_err(|e| e.to_string())
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> conformal_em::Result<RunReport> {
    let settings = Settings {
        tol: cli.tol,
        samples: cli.samples,
    };
    if settings.tol.is_nan() || settings.tol <= 0.0 {
        return Err(Error::InvalidInput("--tol must be positive".into()));
    }
    match cli.command {
        Command::Build(s) => commands::build(s.k, s.a, s.b, s.branch),
        Command::Verify {
            solution: s,
            perturb_alpha,
            full_tensor,
        } => commands::verify(
            VerifyArgs {
                k: s.k,
                a: s.a,
                b: s.b,
                branch: s.branch,
                perturb_alpha,
                full_tensor,
            },
            settings,
        ),
        Command::Enumerate { u, v } => commands::enumerate(u, v),
        Command::Page => commands::page_cmd(),
        Command::Moduli { d, f } => commands::moduli(d, f),
        Command::Sweep {
            k,
            branch,
            a,
            from,
            to,
            steps,
        } => commands::sweep(SweepArgs {
            k,
            branch,
            a,
            from,
            to,
            steps,
        }),
    }
}

fn write_to(path: &Path, body: &[u8]) -> io::Result<()> {
    if path.as_os_str() == "-" {
        io::stdout().write_all(body)
    } else {
        fs::write(path, body)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let (json, csv) = (cli.json.clone(), cli.csv.clone());
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let quiet = json.as_deref().is_some_and(|p| p.as_os_str() == "-")
        || csv.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !quiet {
        print!("{}", report.to_text());
    }
    if let Some(path) = json {
        if let Err(e) = write_to(&path, report.to_json().as_bytes()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if let Some(path) = csv {
        let mut buf = Vec::new();
        let written = report
            .write_csv(&mut buf)
            .and_then(|_| write_to(&path, &buf));
        if let Err(e) = written {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
