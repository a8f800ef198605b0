//! Command-line front end: argument parsing, command dispatch and exit codes.
//!
//! Exit codes: 0 success, 2 verification mismatch, 64 usage error.

use std::collections::BTreeSet;
use std::time::Instant;

use bernstir::bell::{bell_partition_sum, bell_recurrence};
use bernstir::series::{bell_egf_coeff, bernoulli_series};
use bernstir::{BellArgs, BellValue, BernoulliEngine, MethodId, Rational, StirlingTable};
use clap::{Parser, Subcommand, ValueEnum};

pub mod render;

use render::{BenchRecord, BernoulliRecord, Cell, OutputFormat, StirlingRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable capping every requested index.
pub const MAX_N_ENV: &str = "BERNSTIR_MAX_N";
pub const DEFAULT_MAX_N_CAP: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "bernstir",
    version,
    about = "Exact Bernoulli, Stirling and Bell numbers"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute B_n by one method, or by every method with `--method all`
    Bernoulli {
        n: usize,
        /// oracle, theorem, bell, logan, guo-qi, double-stirling, alternating, or all
        #[arg(long, default_value = "theorem")]
        method: String,
    },
    /// Dump the triangle S(n,k) for 0 <= k <= n <= max-n
    Stirling {
        #[arg(long)]
        max_n: usize,
    },
    /// Evaluate the partial Bell polynomial B_{n,k} at rational arguments
    Bell {
        n: usize,
        k: usize,
        /// Comma-separated arguments x_1,x_2,... as p/q tokens
        #[arg(long, allow_hyphen_values = true)]
        args: String,
        #[arg(long, value_enum, default_value_t = Evaluator::Recurrence)]
        evaluator: Evaluator,
    },
    /// Cross-check every method against the series oracle for n <= max-n
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Treat the known `alternating` discrepancy as non-fatal
        #[arg(long)]
        allow_known: bool,
        /// Run the Bell-polynomial identity suite instead
        #[arg(long)]
        identities: bool,
        /// Random instances for the identity suite
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time each method for n <= max-n, after checking the values agree
    Bench {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated method names (default: all)
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Evaluator {
    PartitionSum,
    Recurrence,
    Egf,
}

/// What a command produced: text for stdout and stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Default::default()
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            stderr: format!("error: {}\n", msg.into()),
            code: EXIT_USAGE,
            ..Default::default()
        }
    }
}

/// Methods whose disagreement with the oracle is documented and non-fatal
/// when explicitly allowed.
pub fn known_discrepancies() -> BTreeSet<MethodId> {
    [MethodId::AlternatingDoubleSum].into()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, max_n_cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stderr: text,
                    code,
                    ..Default::default()
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let cap = match max_n_cap {
        None => DEFAULT_MAX_N_CAP,
        Some(s) => match s.trim().parse() {
            Ok(cap) => cap,
            Err(_) => {
                return Outcome::usage(format!(
                    "{MAX_N_ENV} must be a nonnegative integer, got {s:?}"
                ))
            }
        },
    };
    execute(&cli, cap)
}

fn check_cap(requested: usize, cap: usize) -> Result<(), Outcome> {
    if requested > cap {
        return Err(Outcome::usage(format!(
            "n = {requested} exceeds the cap of {cap}; raise {MAX_N_ENV} to allow it"
        )));
    }
    Ok(())
}

pub fn execute(cli: &Cli, cap: usize) -> Outcome {
    let format = cli.format;
    let result = match &cli.command {
        Command::Bernoulli { n, method } => cmd_bernoulli(*n, method, format, cap),
        Command::Stirling { max_n } => cmd_stirling(*max_n, format, cap),
        Command::Bell {
            n,
            k,
            args,
            evaluator,
        } => cmd_bell(*n, *k, args, *evaluator, format, cap),
        Command::Verify {
            max_n,
            allow_known,
            identities,
            trials,
            seed,
        } => {
            if *identities {
                cmd_identities(*max_n, *trials, *seed, format, cap)
            } else {
                cmd_verify(*max_n, *allow_known, format, cap)
            }
        }
        Command::Bench { max_n, methods } => cmd_bench(*max_n, methods, format, cap),
    };
    result.unwrap_or_else(|outcome| outcome)
}

fn parse_methods(names: &[String]) -> Result<Vec<MethodId>, Outcome> {
    names
        .iter()
        .map(|s| {
            s.parse()
                .map_err(|e: bernstir::Error| Outcome::usage(e.to_string()))
        })
        .collect()
}

pub fn cmd_bernoulli(
    n: usize,
    method: &str,
    format: OutputFormat,
    cap: usize,
) -> Result<Outcome, Outcome> {
    check_cap(n, cap)?;
    if method == "all" {
        let engine = BernoulliEngine::new(n);
        let records: Vec<_> = MethodId::ALL
            .into_iter()
            .map(|m| BernoulliRecord {
                n,
                method: m,
                value: match engine.compute(n, m) {
                    Ok(v) => Cell::Value(v),
                    Err(_) => Cell::Unsupported,
                },
            })
            .collect();
        return Ok(Outcome::ok(render::bernoulli(&records, format)));
    }
    let method: MethodId = method
        .parse()
        .map_err(|e: bernstir::Error| Outcome::usage(e.to_string()))?;
    let value = bernstir::bernoulli(n, method).map_err(|e| Outcome::usage(e.to_string()))?;
    let record = BernoulliRecord {
        n,
        method,
        value: Cell::Value(value),
    };
    Ok(Outcome::ok(render::bernoulli(&[record], format)))
}

pub fn cmd_stirling(max_n: usize, format: OutputFormat, cap: usize) -> Result<Outcome, Outcome> {
    check_cap(max_n, cap)?;
    let table = StirlingTable::new(max_n);
    let records: Vec<_> = table
        .entries()
        .map(|(n, k, v)| StirlingRecord {
            n,
            k,
            value: Rational::from(v),
        })
        .collect();
    Ok(Outcome::ok(render::stirling(&records, format)))
}

pub fn cmd_bell(
    n: usize,
    k: usize,
    args: &str,
    evaluator: Evaluator,
    format: OutputFormat,
    cap: usize,
) -> Result<Outcome, Outcome> {
    check_cap(n, cap)?;
    let usage = |e: bernstir::Error| Outcome::usage(e.to_string());
    let args: BellArgs = args.parse().map_err(usage)?;
    let value = match evaluator {
        Evaluator::PartitionSum => bell_partition_sum(n, k, &args),
        Evaluator::Recurrence => bell_recurrence(n, k, &args),
        Evaluator::Egf => args.check(n, k).and_then(|_| bell_egf_coeff(n, k, &args)),
    }
    .map_err(usage)?;
    Ok(Outcome::ok(render::bell(
        &BellValue { n, k, value },
        format,
    )))
}

pub fn cmd_verify(
    max_n: usize,
    allow_known: bool,
    format: OutputFormat,
    cap: usize,
) -> Result<Outcome, Outcome> {
    if max_n < 1 {
        return Err(Outcome::usage("--max-n must be at least 1"));
    }
    check_cap(max_n, cap)?;
    let known = if allow_known {
        known_discrepancies()
    } else {
        BTreeSet::new()
    };
    let report = bernstir::cross_verify(max_n, &known);
    let mut outcome = Outcome::ok(render::verification(&report, format));
    if !report.is_clean() {
        outcome.code = EXIT_MISMATCH;
        for m in &report.summary.mismatches {
            outcome.stderr.push_str(&format!("mismatch {m}\n"));
        }
    }
    Ok(outcome)
}

pub fn cmd_identities(
    max_n: usize,
    trials: usize,
    seed: u64,
    format: OutputFormat,
    cap: usize,
) -> Result<Outcome, Outcome> {
    if max_n < 2 {
        return Err(Outcome::usage(
            "--max-n must be at least 2 for the identity suite",
        ));
    }
    check_cap(max_n, cap)?;
    let report = bernstir::identity_suite(max_n, trials, seed).map_err(|e| Outcome {
        stderr: format!("error: {e}\n"),
        code: EXIT_MISMATCH,
        ..Default::default()
    })?;
    let mut outcome = Outcome::ok(render::identities(&report, format));
    if !report.all_passed() {
        outcome.code = EXIT_MISMATCH;
    }
    Ok(outcome)
}

/// Times every requested method at every supported `n <= max_n`. All values
/// are compared with the oracle before anything is emitted.
pub fn bench_records(
    max_n: usize,
    methods: &[MethodId],
) -> (Vec<BenchRecord>, Vec<(usize, MethodId)>) {
    let engine = BernoulliEngine::new(max_n);
    let oracle = bernoulli_series(max_n);
    let known = known_discrepancies();
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for (n, expected) in oracle.iter().enumerate() {
        for &method in methods.iter().filter(|m| m.supports(n)) {
            let start = Instant::now();
            let value = engine.compute(n, method).expect("engine covers max_n");
            let micros = start.elapsed().as_micros() as u64;
            if &value != expected && !known.contains(&method) {
                mismatches.push((n, method));
            }
            records.push(BenchRecord {
                n,
                method,
                value,
                micros,
            });
        }
    }
    (records, mismatches)
}

pub fn cmd_bench(
    max_n: usize,
    methods: &[String],
    format: OutputFormat,
    cap: usize,
) -> Result<Outcome, Outcome> {
    if max_n < 2 {
        return Err(Outcome::usage("--max-n must be at least 2"));
    }
    check_cap(max_n, cap)?;
    let mut methods = if methods.is_empty() {
        MethodId::ALL.to_vec()
    } else {
        parse_methods(methods)?
    };
    methods.sort();
    methods.dedup();
    let (records, mismatches) = bench_records(max_n, &methods);
    let mut outcome = Outcome::ok(render::bench(&records, format));
    if !mismatches.is_empty() {
        outcome.code = EXIT_MISMATCH;
        for (n, m) in mismatches {
            outcome.stderr.push_str(&format!("mismatch ({n}, {m})\n"));
        }
    }
    Ok(outcome)
}
