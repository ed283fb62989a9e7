//! `bergman-eggs`: describe domains, print χ, synthesize, emit and evaluate
//! kernels, and run the verification suites.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 evaluation point outside the domain.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use bergman_eggs::algebra::{parse_rational, Rational};
use bergman_eggs::kernel::Format;
use bergman_eggs::{DomainSpec, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

#[derive(Parser, Debug)]
#[command(name = "bergman-eggs", version, about = "Closed-form Bergman kernels of Cartan-Hartogs and Cartan-egg domains")]
struct Cli {
    /// Worker threads for Monte-Carlo suites (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the invariants, norm formula and membership rule of a domain.
    Describe(DescribeArgs),
    /// Print the polynomial χ of a domain.
    Chi(ChiArgs),
    /// Synthesize a closed-form kernel.
    Kernel {
        family: FamilyArg,
        #[command(flatten)]
        args: KernelArgs,
    },
    /// Evaluate a kernel on the diagonal at a point.
    Eval {
        family: FamilyArg,
        #[command(flatten)]
        args: EvalArgs,
    },
    /// Run a verification suite; prints one JSON report per line.
    Verify {
        suite: Suite,
        #[command(flatten)]
        args: VerifyArgs,
    },
    /// Parse a kernel JSON document (file or stdin) and re-emit it.
    Emit(EmitArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Y,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Selberg,
    SeriesY,
    SeriesE,
    Coeffs,
    Volume,
    Reproducing,
}

#[derive(Args, Debug)]
pub struct DescribeArgs {
    #[arg(long, value_parser = parse_domain)]
    pub domain: DomainSpec,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[arg(long, value_parser = parse_domain)]
    pub domain: DomainSpec,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[arg(long, value_parser = parse_domain)]
    pub domain: DomainSpec,
    /// Exponent k of the Hartogs variable (`a/b` or decimal).
    #[arg(long, value_parser = parse_rat)]
    pub k: Rational,
    /// Dimension of W₁ (family e).
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    /// Dimension of W (family y) or W₂ (family e).
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub kernel: KernelArgs,
    /// W as comma-separated complex numbers (family y); zeros if omitted.
    #[arg(long, value_parser = parse_point)]
    pub w: Option<Point>,
    /// W₁ (family e); zeros if omitted.
    #[arg(long, value_parser = parse_point)]
    pub w1: Option<Point>,
    /// W₂ (family e); zeros if omitted.
    #[arg(long, value_parser = parse_point)]
    pub w2: Option<Point>,
    /// Coordinates of Z (matrix entries row-major); zero if omitted.
    #[arg(long, value_parser = parse_point)]
    pub z: Option<Point>,
    /// Volume of Ω; overrides known values and the cache.
    #[arg(long)]
    pub vol: Option<f64>,
    /// Volume cache written by `verify volume`.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_domain)]
    pub domain: DomainSpec,
    #[arg(long, default_value = "1", value_parser = parse_rat)]
    pub k: Rational,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    /// Series truncation index.
    #[arg(long, default_value_t = 300)]
    pub truncate: u32,
    /// Relative tolerance (default: 1e-8 for series suites, 0.02 otherwise).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Moment orders for the Selberg suite, comma-separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_rat)]
    pub s: Option<Vec<Rational>>,
    /// Number of random points for the series suites.
    #[arg(long, default_value_t = 10)]
    pub points: u32,
    /// Restrict the coeffs/reproducing suites to one family.
    #[arg(long)]
    pub family: Option<FamilyArg>,
    /// Highest total degree of the monomials in the coeffs suite.
    #[arg(long, default_value_t = 2)]
    pub degree: u32,
    /// Monomial exponents for the reproducing suite, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub exponents: Option<Vec<u32>>,
    /// Center W₀ for the reproducing suite.
    #[arg(long, value_parser = parse_point)]
    pub w: Option<Point>,
    /// Volume cache updated by the volume suite.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EmitArgs {
    /// Input file; stdin if omitted.
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "json", value_parser = parse_format)]
    pub format: Format,
}

fn parse_domain(s: &str) -> Result<DomainSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A point given as comma-separated complex numbers such as `0.1,0.2+0.3i,-1i`.
#[derive(Clone, Debug)]
pub struct Point(pub Vec<Complex64>);

fn parse_point(s: &str) -> Result<Point, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<Complex64>()
                .map_err(|_| format!("cannot parse complex number {part:?}"))
        })
        .collect::<Result<_, _>>()
        .map(Point)
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    Failed,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::OutsideDomain(_) => 3,
        Error::NumericalDegeneracy(_) | Error::LowAcceptance { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Describe(a) => commands::describe(&a),
        Command::Chi(a) => commands::chi(&a),
        Command::Kernel { family, args } => commands::kernel(family, &args),
        Command::Eval { family, args } => commands::eval(family, &args),
        Command::Verify { suite, args } => commands::verify(suite, &args),
        Command::Emit(a) => commands::emit(&a),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
