mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use radix_core::arith::{depress_quartic, Polynomial};
use radix_core::galois::{quintic_verdict, GaloisError, DEFAULT_MAX_PRIMES};
use radix_core::numeric::BigFloat;
use radix_core::oracle::{match_roots, verify_solution_set, VerificationReport};
use radix_core::parse::{parse_polynomial_with, ParseOptions, ParsedInput};
use radix_core::radical::{eval_numeric, ComplexApprox, RadicalExpr};
use radix_core::solve::{
    euler_resolvent, ferrari_resolvent, ferrari_resolvent_from_square, solve_any, MethodPreference,
    SolutionSet, SolveError,
};

use report::{GaloisReport, MethodCheck, SolveReport, VerifyReport};

#[derive(Parser)]
#[command(
    name = "radix",
    version,
    about = "Exact radical solutions of polynomial equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an equation of degree 1 to 4 by radicals
    Solve(SolveArgs),
    /// Decide whether a quintic is solvable by radicals
    Galois(GaloisArgs),
    /// Cross-check the quartic methods against each other and the numeric oracle
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Polynomial or equation in one variable, e.g. "x^3 = 15x + 4"
    equation: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Read finite decimals such as 1.25 as exact fractions
    #[arg(long)]
    decimal_as_ratio: bool,
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args)]
struct PrecisionArg {
    /// Working precision in bits for numeric values and verification
    #[arg(
        long,
        env = "RADIX_DEFAULT_PRECISION",
        default_value_t = 128,
        value_parser = clap::value_parser!(u32).range(32..=4096)
    )]
    precision: u32,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    precision: PrecisionArg,
    /// Quartic method
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    method: MethodPreference,
    /// Negate the root with this zero-based index before verification
    /// (exercises the failure path)
    #[arg(long, hide = true)]
    perturb_root: Option<usize>,
}

#[derive(Args)]
struct GaloisArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of usable primes to sample
    #[arg(long, default_value_t = DEFAULT_MAX_PRIMES as u64, value_parser = clap::value_parser!(u64).range(1..=1000))]
    max_primes: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    precision: PrecisionArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Latex,
}

fn parse_method(s: &str) -> Result<MethodPreference, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Internal(String),
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Galois(args) => cmd_galois(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(3),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error writing output: {e}");
        }
    }
}

fn read_input(args: &InputArgs) -> Result<ParsedInput, Failure> {
    let options = ParseOptions {
        decimal_as_ratio: args.decimal_as_ratio,
    };
    parse_polynomial_with(&args.equation, options).map_err(|e| {
        let pos = e.position();
        Failure::Usage(format!("{e}\n  {}\n  {}^", args.equation, " ".repeat(pos)))
    })
}

fn require_solvable_degree(f: &Polynomial) -> Result<usize, Failure> {
    match f.degree() {
        Some(d @ 1..=4) => Ok(d),
        Some(5) => Err(Failure::Usage(
            "degree 5 has no general radical formula; run `radix galois` to test this quintic"
                .into(),
        )),
        Some(d) => Err(Failure::Usage(format!(
            "degree {d} is outside the supported range 1 to 4"
        ))),
        None => Err(Failure::Usage(
            "the equation is an identity (every value is a solution)".into(),
        )),
    }
}

fn tolerance(precision: u32) -> BigFloat {
    BigFloat::one(64).mul_pow2(-i64::from(precision / 2))
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn solve_with(f: &Polynomial, preference: MethodPreference) -> Result<SolutionSet, Failure> {
    solve_any(f, preference).map_err(|e| match e {
        SolveError::UnsupportedDegree(_) => Failure::Usage(e.to_string()),
        e => internal(e),
    })
}

fn evaluate(set: &SolutionSet, precision: u32) -> Result<Vec<ComplexApprox>, Failure> {
    set.roots
        .iter()
        .map(|r| eval_numeric(r, precision).map_err(internal))
        .collect()
}

fn check(
    set: &SolutionSet,
    f: &Polynomial,
    precision: u32,
) -> Result<(Vec<ComplexApprox>, VerificationReport), Failure> {
    let values = evaluate(set, precision)?;
    let verification =
        verify_solution_set(&set.roots, f, precision, &tolerance(precision)).map_err(internal)?;
    Ok((values, verification))
}

fn cmd_solve(args: SolveArgs) -> Result<Outcome, Failure> {
    let input = read_input(&args.input)?;
    let f = &input.polynomial;
    let degree = require_solvable_degree(f)?;
    let precision = args.precision.precision;
    let mut set = solve_with(f, args.method)?;
    if let Some(i) = args.perturb_root {
        let root = set
            .roots
            .get_mut(i)
            .ok_or_else(|| Failure::Usage(format!("no root with index {i}")))?;
        *root = RadicalExpr::neg(root.clone());
    }
    let (values, verification) = check(&set, f, precision)?;
    let mut notes = Vec::new();
    if args.input.verbose {
        notes = working_notes(f, &set);
    }
    let report = SolveReport {
        input: &input,
        degree,
        set: &set,
        values: &values,
        verification: &verification,
        notes,
    };
    match args.input.format {
        OutputFormat::Text => emit(&report.text()),
        OutputFormat::Latex => emit(&report.latex()),
        OutputFormat::Json => emit(&(report.json() + "\n")),
    }
    Ok(if verification.all_matched {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn cmd_galois(args: GaloisArgs) -> Result<Outcome, Failure> {
    let input = read_input(&args.input)?;
    let f = &input.polynomial;
    if f.degree() != Some(5) {
        return Err(Failure::Usage(format!(
            "galois expects a quintic, got degree {}; use `radix solve` for degrees 1 to 4",
            f.degree().map_or("-inf".to_string(), |d| d.to_string())
        )));
    }
    let verdict = quintic_verdict(f, args.max_primes as usize).map_err(|e| match e {
        GaloisError::NotSquarefree => Failure::Usage(
            "the quintic has repeated roots; its squarefree part has degree at most 4, use `radix solve`".into(),
        ),
        e => internal(e),
    })?;
    let report = GaloisReport {
        input: &input,
        verdict: &verdict,
    };
    match args.input.format {
        OutputFormat::Json => emit(&(report.json() + "\n")),
        OutputFormat::Text | OutputFormat::Latex => emit(&report.text()),
    }
    Ok(Outcome::Ok)
}

fn cmd_verify(args: VerifyArgs) -> Result<Outcome, Failure> {
    let input = read_input(&args.input)?;
    let f = &input.polynomial;
    let degree = require_solvable_degree(f)?;
    let precision = args.precision.precision;
    let preferences: &[MethodPreference] = if degree == 4 {
        &[MethodPreference::Ferrari, MethodPreference::Euler]
    } else {
        &[MethodPreference::Auto]
    };
    let mut checks = Vec::new();
    for &preference in preferences {
        let set = solve_with(f, preference)?;
        let (values, verification) = check(&set, f, precision)?;
        checks.push(MethodCheck {
            set,
            values,
            verification,
        });
    }
    let cross = match checks.as_slice() {
        [a, b] => Some(match_roots(&a.values, &b.values, &tolerance(precision))),
        _ => None,
    };
    let notes = if args.input.verbose {
        working_notes(f, &checks[0].set)
    } else {
        Vec::new()
    };
    let report = VerifyReport {
        input: &input,
        degree,
        precision,
        checks: &checks,
        cross: cross.as_ref(),
        notes,
    };
    match args.input.format {
        OutputFormat::Json => emit(&(report.json() + "\n")),
        OutputFormat::Text | OutputFormat::Latex => emit(&report.text()),
    }
    let ok = checks.iter().all(|c| c.verification.all_matched) && cross.is_none_or(|(_, ok)| ok);
    Ok(if ok {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

/// Intermediate equations shown with `--verbose`.
fn working_notes(f: &Polynomial, set: &SolutionSet) -> Vec<String> {
    let mut notes = Vec::new();
    if f.degree() != Some(4) {
        return notes;
    }
    let Ok(d) = depress_quartic(&f.monic()) else {
        return notes;
    };
    let depressed = d.to_polynomial();
    let substitution = if d.shift.is_zero() {
        String::new()
    } else if d.shift.is_negative() {
        format!(" with x = y + {}", -d.shift.clone())
    } else {
        format!(" with x = y - {}", d.shift)
    };
    notes.push(format!(
        "depressed quartic: {} = 0{substitution}",
        depressed.display_with("y")
    ));
    let ferrari = ferrari_resolvent_from_square(&depressed)
        .ok()
        .flatten()
        .or_else(|| ferrari_resolvent(&depressed).ok());
    if let Some(r) = ferrari {
        notes.push(format!("ferrari resolvent: {}", equation_line(&r, "y")));
    }
    notes.push(format!(
        "euler resolvent: {}",
        equation_line(&euler_resolvent(&d), "z")
    ));
    notes.push(format!("solved with: {}", set.method));
    notes
}

/// `p = 0` written with the constant term moved to the right.
fn equation_line(p: &Polynomial, var: &str) -> String {
    let c = p.coeff(0);
    let lhs = p.sub(&Polynomial::constant(c.clone()));
    format!("{} = {}", lhs.display_compact(var), -c)
}
