//! `partpoly`: print partition polynomials, their roots and the table and
//! figure data, and run the verification sweeps.
//!
//! Exit codes: 0 on success, 1 when a verification suite does not come back
//! verified, 2 on usage or configuration errors.

mod commands;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "partpoly", version, about = "Partition polynomials and inequality sweeps")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Size of the polynomial cache; inferred from the command if omitted.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Decimal digits for printed approximations.
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Number of worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    /// `P_{n+1} - P_n`
    Delta,
    /// `P_a P_b - P_{a+b}`
    Bo,
    /// `x P_n - P_{n+1}`
    Prop7,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Suite {
    Bo,
    Cft,
    Monotone,
    PrimeRemark,
    Main,
    Summand,
    Prop7,
    Bounds,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of P_n.
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// Exact value P_n(x).
    Eval {
        #[arg(long)]
        n: usize,
        /// Rational as p/q or decimal.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Isolating intervals for the real roots of a polynomial family.
    Roots {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Target interval width.
        #[arg(long, default_value = "1/1000000000000")]
        eps: String,
    },
    /// Positive real roots of P_a P_b - P_{a+b}, two decimals.
    Table1 {
        #[arg(long, default_value_t = 10)]
        amax: usize,
        #[arg(long, default_value_t = 10)]
        bmax: usize,
    },
    /// Complex roots of P_{n+1} - P_n with positive real part.
    Figure1 {
        #[arg(long, default_value_t = 30)]
        nmax: usize,
    },
    /// Positive real root of P_a P_1 - P_{a+1}.
    Figure2 {
        #[arg(long, default_value_t = 100)]
        amax: usize,
    },
    /// Sandwich bounds on p(m) and optionally Lehmer's truncation bound.
    Bounds {
        #[arg(long)]
        m: u64,
        /// Number of Rademacher terms N for the truncation bound.
        #[arg(long)]
        lehmer: Option<u64>,
    },
    /// Run verification sweeps and emit reports.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        amax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
        /// Largest m for the sandwich bounds in the bounds suite.
        #[arg(long)]
        mmax: Option<usize>,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Claim,
}

impl From<partition_polys::Error> for Failure {
    fn from(e: partition_polys::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Rendered output and whether every claim it covers came back verified.
struct Output {
    body: String,
    verified: bool,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = cli.global.clone();
    let output = match g.jobs {
        Some(0) => return Err(Failure::Usage("--jobs must be positive".into())),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(|| commands::execute(&cli.command, &g))?,
        None => commands::execute(&cli.command, &g)?,
    };
    match &g.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(output.body.as_bytes()))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(output.body.as_bytes());
        }
    }
    if output.verified {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
