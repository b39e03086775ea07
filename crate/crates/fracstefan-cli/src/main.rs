//! Command-line front end: recover an unknown thermal coefficient from
//! over-specified boundary data, generate consistent data with the forward
//! problem, sample temperature profiles, and run the built-in checks.
//!
//! Results go to standard output as single-line JSON (profiles as CSV to a
//! file). Exit codes: 0 success, 1 usage or validation error, 2 data
//! restriction violated (the reported margin must be < 1 for a solution to
//! exist), 3 numerical failure (accuracy domain left or no convergence).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use fracstefan::classical;
use fracstefan::inverse::{self, ThermalData, UnknownCoefficient};
use fracstefan::solution::{GridSpec, StefanSolution};
use fracstefan::verify;
use serde::Serialize;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fracstefan",
    version,
    about = "One-phase time-fractional Stefan problem: unknown-coefficient recovery",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recover one unknown coefficient from over-specified face data
    Solve(SolveArgs),
    /// Determine the front coefficient and face flux from complete data
    Forward(ForwardArgs),
    /// Report the case's restriction margin and whether it is solvable
    Check(SolveArgs),
    /// Sample the temperature field and front trajectory to CSV
    Profile(ProfileArgs),
    /// Compare the fractional solution against the classical closed form
    Limit(LimitArgs),
    /// Check the solution against the governing equation by refinement
    Residual(ResidualArgs),
}

#[derive(Args)]
struct DataArgs {
    /// Fractional order of the time derivative, in (0, 1]
    #[arg(long)]
    alpha: f64,
    /// Fixed-face temperature (must exceed --tm)
    #[arg(long)]
    t0: f64,
    /// Melting temperature
    #[arg(long)]
    tm: f64,
    /// Thermal conductivity
    #[arg(long)]
    k: Option<f64>,
    /// Mass density
    #[arg(long)]
    rho: Option<f64>,
    /// Specific heat
    #[arg(long)]
    c: Option<f64>,
    /// Latent heat of fusion
    #[arg(long)]
    ell: Option<f64>,
}

impl DataArgs {
    fn thermal(&self, q0: Option<f64>) -> ThermalData {
        ThermalData {
            alpha: self.alpha,
            k: self.k,
            rho: self.rho,
            c: self.c,
            ell: self.ell,
            t0: self.t0,
            tm: self.tm,
            q0,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Which coefficient is unknown: c, ell, k or rho
    #[arg(long, value_parser = parse_case)]
    case: UnknownCoefficient,
    #[command(flatten)]
    data: DataArgs,
    /// Flux coefficient at the fixed face
    #[arg(long)]
    q0: f64,
    /// Residual tolerance of the front-coefficient bisection
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct ForwardArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Largest sampled position
    #[arg(long)]
    xmax: f64,
    /// Largest sampled time
    #[arg(long)]
    tmax: f64,
    /// Number of positions, spanning [0, xmax]
    #[arg(long)]
    nx: usize,
    /// Number of times, spanning (0, tmax]
    #[arg(long)]
    nt: usize,
    /// Output CSV path
    #[arg(long)]
    out: String,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct LimitArgs {
    /// Which coefficient is unknown: c, ell, k or rho
    #[arg(long, value_parser = parse_case)]
    case: UnknownCoefficient,
    #[command(flatten)]
    data: DataArgs,
    /// Flux coefficient at the fixed face
    #[arg(long)]
    q0: f64,
    /// Fractional orders to sweep, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    alphas: Vec<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args)]
struct ResidualArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Interior position at which the equation is checked
    #[arg(long)]
    x: f64,
    /// End of the time window
    #[arg(long)]
    tend: f64,
    /// Time steps at the coarsest level
    #[arg(long)]
    nsteps: usize,
    /// Number of refinement levels (step count doubles per level)
    #[arg(long, default_value_t = 3)]
    levels: usize,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

fn parse_case(s: &str) -> Result<UnknownCoefficient, String> {
    s.parse().map_err(|e: fracstefan::Error| e.to_string())
}

#[derive(Serialize)]
struct SolveOut {
    case: String,
    alpha: f64,
    xi: f64,
    coefficient: f64,
    lambda: f64,
    restriction_margin: f64,
}

#[derive(Serialize)]
struct ForwardOut {
    xi: f64,
    q0: f64,
    lambda: f64,
}

#[derive(Serialize)]
struct CheckOut {
    restriction_margin: f64,
    solvable: bool,
}

#[derive(Serialize)]
struct ProfileOut {
    out: String,
    rows: usize,
    clamped: usize,
}

#[derive(Serialize)]
struct LimitOut {
    alpha: f64,
    xi: f64,
    two_mu: f64,
    xi_gap: f64,
    coeff_gap: f64,
}

#[derive(Serialize)]
struct ResidualOut {
    nsteps: usize,
    residual: f64,
}

enum Failure {
    Usage(String),
    Lib(fracstefan::Error),
}

impl From<fracstefan::Error> for Failure {
    fn from(e: fracstefan::Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            println!(
                "{}",
                serde_json::json!({ "error": msg, "kind": "usage" })
            );
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            let (kind, code) = match &e {
                fracstefan::Error::Validation(_) => ("validation", 1),
                fracstefan::Error::Restriction { .. } => ("restriction", 2),
                fracstefan::Error::Domain(_) => ("domain", 3),
                fracstefan::Error::NonConvergence(_) => ("nonconvergence", 3),
            };
            let mut obj = serde_json::json!({ "error": e.to_string(), "kind": kind });
            if let fracstefan::Error::Restriction { margin } = e {
                obj["restriction_margin"] = serde_json::json!(margin);
            }
            println!("{obj}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve(args) => {
            reject_unknown_flag(&args)?;
            let d = args.data.thermal(Some(args.q0));
            let sol = inverse::solve_case(args.case, &d, args.tol)?;
            emit(&SolveOut {
                case: sol.case.to_string(),
                alpha: d.alpha,
                xi: sol.xi,
                coefficient: sol.coefficient,
                lambda: sol.lambda,
                restriction_margin: sol.restriction_margin,
            })
        }
        Command::Forward(args) => {
            let d = args.data.thermal(None);
            let fwd = inverse::forward_problem(&d, args.tol)?;
            emit(&ForwardOut { xi: fwd.xi, q0: fwd.q0, lambda: fwd.lambda })
        }
        Command::Check(args) => {
            reject_unknown_flag(&args)?;
            let d = args.data.thermal(Some(args.q0));
            let margin = inverse::restriction(args.case, &d)?;
            emit(&CheckOut { restriction_margin: margin, solvable: margin < 1.0 })
        }
        Command::Profile(args) => {
            let d = args.data.thermal(None);
            let fwd = inverse::forward_problem(&d, args.tol)?;
            let sol = StefanSolution::from_forward(&d, &fwd)?;
            let grid = GridSpec::uniform(args.xmax, args.tmax, args.nx, args.nt)?;
            let profile = sol.emit_profile(&grid)?;
            let mut csv = String::from("t,x,T,s_of_t\n");
            for (i, &t) in profile.times.iter().enumerate() {
                for (j, &x) in profile.positions.iter().enumerate() {
                    let _ = writeln!(
                        csv,
                        "{},{},{},{}",
                        t, x, profile.temperatures[i][j], profile.front[i]
                    );
                }
            }
            fs::write(&args.out, csv).map_err(|e| {
                Failure::Usage(format!("cannot write {}: {e}", args.out))
            })?;
            let rows = profile.times.len() * profile.positions.len();
            emit(&ProfileOut { out: args.out, rows, clamped: profile.clamped_count })
        }
        Command::Limit(args) => {
            if args.alphas.is_empty() {
                return Err(Failure::Usage("at least one --alphas entry is required".into()));
            }
            let d = args.data.thermal(Some(args.q0));
            let rows = classical::limit_compare(args.case, &d, &args.alphas, args.tol)?;
            let out: Vec<LimitOut> = rows
                .into_iter()
                .map(|r| LimitOut {
                    alpha: r.alpha,
                    xi: r.xi,
                    two_mu: r.two_mu,
                    xi_gap: r.xi_gap,
                    coeff_gap: r.coeff_gap,
                })
                .collect();
            emit(&out)
        }
        Command::Residual(args) => {
            if args.levels == 0 || args.nsteps == 0 {
                return Err(Failure::Usage("--nsteps and --levels must be positive".into()));
            }
            let d = args.data.thermal(None);
            let fwd = inverse::forward_problem(&d, args.tol)?;
            let sol = StefanSolution::from_forward(&d, &fwd)?;
            let mut out = Vec::with_capacity(args.levels);
            let mut n = args.nsteps;
            for _ in 0..args.levels {
                out.push(ResidualOut {
                    nsteps: n,
                    residual: verify::pde_residual(&sol, args.x, args.tend, n)?,
                });
                n *= 2;
            }
            emit(&out)
        }
    }
}

/// The flag matching --case must be omitted; everything else is required.
fn reject_unknown_flag(args: &SolveArgs) -> Result<(), Failure> {
    let clash = match args.case {
        UnknownCoefficient::SpecificHeat => args.data.c.is_some(),
        UnknownCoefficient::LatentHeat => args.data.ell.is_some(),
        UnknownCoefficient::Conductivity => args.data.k.is_some(),
        UnknownCoefficient::Density => args.data.rho.is_some(),
    };
    if clash {
        return Err(Failure::Usage(format!(
            "--{} is the unknown for --case {}; omit that flag",
            args.case.name(),
            args.case
        )));
    }
    Ok(())
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!(
        "{}",
        serde_json::to_string(value).expect("output structs always serialize")
    );
    Ok(())
}
