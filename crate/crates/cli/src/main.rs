//! `mathieu`: certified evaluation, tables, asymptotics and lemma reports.
//!
//! Exit codes: 0 success / VERIFIED, 1 FALSIFIED, 2 usage error,
//! 3 INCONCLUSIVE.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "mathieu",
    version,
    about = "Certified numerics for Mathieu's series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified enclosure of S(r), the cubed companion sum, α(r) or T(r).
    Eval(EvalArgs),
    /// S(r), the nested bounds and α(r) over a grid of r values.
    Table(TableArgs),
    /// Replay a lemma or the main theorem and print the report.
    Verify(VerifyArgs),
    /// Exact coefficients of the large-r expansion of α(r).
    Asymptotic(AsymptoticArgs),
}

#[derive(clap::Args, Debug)]
struct EvalArgs {
    /// Positive rational, e.g. `2.57`, `257/100` or `1e-4`.
    #[arg(long, allow_hyphen_values = true)]
    r: String,
    /// direct, russell, zeta, lampret or combined.
    #[arg(long, default_value = "combined")]
    method: String,
    /// Target enclosure width.
    #[arg(long, default_value = "1e-20")]
    width: String,
    /// Truncation parameter (N, k, m or number of terms) for explicit methods.
    #[arg(long)]
    order: Option<u64>,
    #[arg(long, value_enum, default_value_t = Quantity::S)]
    quantity: Quantity,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Fractional digits of the decimal rendering.
    #[arg(long, default_value_t = 25)]
    digits: usize,
}

#[derive(clap::Args, Debug)]
struct TableArgs {
    #[arg(long)]
    rmin: String,
    #[arg(long)]
    rmax: String,
    #[arg(long)]
    step: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Target width of the S enclosures.
    #[arg(long, default_value = "1e-24")]
    width: String,
    /// Fractional digits; bounds round away from S.
    #[arg(long, default_value_t = 30)]
    digits: usize,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    /// Width of every ζ enclosure entering a certificate.
    #[arg(long, default_value = "1e-20")]
    zeta_width: String,
    /// Target width of the certified evaluations.
    #[arg(long, default_value = "1e-20")]
    eval_width: String,
    /// Bisection depth limit of the positivity fallback.
    #[arg(long, default_value_t = mathieu_core::polyalg::DEFAULT_DEPTH_CAP)]
    depth_cap: u32,
    /// Comma-separated r values replacing the theorem grid.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(clap::Args, Debug)]
struct AsymptoticArgs {
    /// Number of coefficients, 1 to 40.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=40))]
    terms: u32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Quantity {
    S,
    Companion,
    Alpha,
    T,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Lemma1,
    Lemma2,
    Lemma3,
    Theorem,
    All,
}

/// A command that produced no result, with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: 2,
            msg: msg.into(),
        }
    }
}

impl From<mathieu_core::Error> for Failure {
    fn from(e: mathieu_core::Error) -> Self {
        use mathieu_core::Error as E;
        let code = match e {
            E::PrecisionExhausted(_) | E::PrecisionInsufficient(_) => 3,
            _ => 2,
        };
        Self {
            code,
            msg: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => commands::eval(&a),
        Command::Table(a) => commands::table(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Asymptotic(a) => commands::asymptotic(&a),
    };
    match result {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure { code, msg }) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
