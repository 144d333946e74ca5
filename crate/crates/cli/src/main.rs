//! tapkit: Riley polynomials, parabolic representations and twisted
//! Alexander polynomials of double-twist and 2-bridge knots.
//!
//! Exit codes: 0 success, 2 usage or spec error, 3 numerical failure,
//! 4 assertion failure.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tapkit_core::analysis::DetectOptions;
use tapkit_core::parabolic::SolveOptions;
use tapkit_core::{Error, KnotSpec};

use render::Format;

#[derive(Parser)]
#[command(
    name = "tapkit",
    version,
    about = "Twisted Alexander polynomials of 2-bridge knots at parabolic representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (0 = one per core); TAPKIT_THREADS overrides
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Accept a root when |phi(y)| <= phi_tol * max|coeff|
    #[arg(long, global = true, default_value_t = 1e-8, value_parser = positive)]
    phi_tol: f64,

    /// Accept a root when max |W^n A - B W^n| <= matrix_tol
    #[arg(long, global = true, default_value_t = 1e-8, value_parser = positive)]
    matrix_tol: f64,

    /// Monic means |lead - 1| and |trail - 1| are at most monic_tol
    #[arg(long, global = true, default_value_t = 1e-8, value_parser = positive)]
    monic_tol: f64,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("tolerance must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// k of J(k,2n)
    #[arg(
        long,
        allow_hyphen_values = true,
        requires = "n",
        conflicts_with = "two_bridge"
    )]
    k: Option<i64>,

    /// n of J(k,2n)
    #[arg(long, allow_hyphen_values = true, requires = "k")]
    n: Option<i64>,

    /// 2-bridge knot b(p,q) given as p/q
    #[arg(long, value_name = "P/Q")]
    two_bridge: Option<String>,
}

impl SpecArgs {
    fn resolve(&self) -> Result<KnotSpec, Error> {
        match (self.k, self.n, &self.two_bridge) {
            (Some(k), Some(n), None) => KnotSpec::double_twist(k, n),
            (None, None, Some(pq)) => {
                let parsed = pq
                    .split_once('/')
                    .and_then(|(p, q)| Some((p.trim().parse().ok()?, q.trim().parse().ok()?)));
                match parsed {
                    Some((p, q)) => KnotSpec::two_bridge(p, q),
                    None => Err(Error::InvalidSpec(format!("expected P/Q, got {pq:?}"))),
                }
            }
            _ => Err(Error::InvalidSpec(
                "give either --k and --n, or --two-bridge P/Q".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum XValue {
    #[value(name = "2")]
    Two,
    Symbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Riley polynomial phi(x, y)
    Riley {
        #[command(flatten)]
        spec: SpecArgs,
        /// Evaluate at x = 2 or keep x symbolic
        #[arg(long, value_enum, default_value_t = XValue::Two)]
        x: XValue,
    },
    /// Parabolic representations (roots of phi(2, y)) with residuals
    Parabolic {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Twisted Alexander polynomial at one parabolic representation
    Tap {
        #[command(flatten)]
        spec: SpecArgs,
        /// Index into the roots sorted by (Re y, Im y)
        #[arg(long, default_value_t = 0)]
        root_index: usize,
    },
    /// Genus and fiberedness detection
    Analyze {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Per-root detection rows for every J(k,2n) with k <= kmax, |n| <= nmax
    Sweep {
        #[arg(long, default_value_t = 8)]
        kmax: i64,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
    },
    /// Run every verification criterion on the grid
    Verify {
        #[arg(long, default_value_t = 8)]
        kmax: i64,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
        #[arg(long, default_value_t = 200)]
        pmax: u64,
    },
    /// Odd primes up to MAX for which 2 is a primitive root
    P2 { max: u64 },
}

/// Failure carrying its exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSpec(_) | Error::Syntax { .. } | Error::NotPrime(_) => 2,
            Error::TheoremViolation(_) => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn assertion(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

fn thread_count(flag: usize) -> Result<usize, Failure> {
    match std::env::var("TAPKIT_THREADS") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "TAPKIT_THREADS must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(flag),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let threads = thread_count(cli.threads)?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::usage(e.to_string()))?;

    let opts = DetectOptions {
        solve: SolveOptions {
            phi_tol: cli.phi_tol,
            matrix_tol: cli.matrix_tol,
            ..SolveOptions::default()
        },
        monic_tol: cli.monic_tol,
    };
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Riley { spec, x } => render::riley(&spec.resolve()?, *x == XValue::Symbolic, fmt)?,
        Command::Parabolic { spec } => render::parabolic(&spec.resolve()?, &opts, fmt)?,
        Command::Tap { spec, root_index } => {
            render::tap(&spec.resolve()?, *root_index, &opts, fmt)?
        }
        Command::Analyze { spec } => render::analyze(&spec.resolve()?, &opts, fmt)?,
        Command::Sweep { kmax, nmax } => render::sweep(*kmax, *nmax, &opts, fmt)?,
        Command::Verify { kmax, nmax, pmax } => {
            if *kmax < 1 || *nmax < 1 {
                return Err(Failure::usage("--kmax and --nmax must be at least 1"));
            }
            let (text, passed) = render::verify(*kmax, *nmax, *pmax, &opts, fmt);
            print!("{text}");
            return if passed {
                Ok(())
            } else {
                Err(Failure::assertion("verification failed"))
            };
        }
        Command::P2 { max } => render::p2(*max, fmt),
    };
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("tapkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
