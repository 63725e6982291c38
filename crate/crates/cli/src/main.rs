mod render;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use dyck_odd::automaton::dp_counts;
use dyck_odd::kernel;
use dyck_odd::oeis::{self, Source};
use dyck_odd::oracle::MAX_STEPS;
use dyck_odd::series::DEFAULT_PRECISION;
use dyck_odd::verify::{self, Check, Fault};
use dyck_odd::{Error, KernelError, Layer, OeisError, PathClass, Series};
use serde_json::json;

use render::OutputFormat;

/// Exact counts of Dyck paths and prefixes whose descents have odd length.
///
/// Every command is deterministic: there is no randomness anywhere, and the
/// same flags always produce the same output.
#[derive(Parser, Debug)]
#[command(name = "dyck-odd", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count paths by final automaton state, or complete paths by semilength.
    Enumerate {
        #[arg(long, value_parser = parse_class)]
        class: PathClass,
        /// Maximum number of steps.
        #[arg(long = "n", default_value_t = 22)]
        n_max: usize,
        /// Report complete Dyck paths by semilength instead of the full table.
        #[arg(long)]
        complete: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Expand a closed-form generating function.
    Expand {
        #[arg(long, value_enum)]
        target: Target,
        /// Height index for fj, gj, hj.
        #[arg(long)]
        j: Option<u32>,
        /// Number of powers of z to compute.
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Test hook: Newton iteration budget for v1.
        #[arg(long, hide = true, default_value_t = kernel::MAX_ITERATIONS)]
        max_newton_iterations: usize,
    },
    /// Check the algebraic identities and/or the agreement of the three
    /// independent computations.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Path length for the triple-agreement checks.
        #[arg(long = "n", default_value_t = 22)]
        n_max: usize,
        /// Powers of z for the identity checks.
        #[arg(long, default_value_t = 26)]
        precision: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Test hook: corrupt g0 before checking it.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Compare a computed series with an OEIS sequence.
    Oeis {
        #[arg(long)]
        id: String,
        #[arg(long, value_enum)]
        target: Target,
        /// Power of Z aligned with the sequence's first term (default: the
        /// sequence offset).
        #[arg(long)]
        start_power: Option<i64>,
        #[arg(long, default_value_t = 11)]
        count: usize,
        /// Fetch the b-file from oeis.org instead of the bundled fixtures.
        #[arg(long)]
        network: bool,
        /// Network timeout in seconds.
        #[arg(long, default_value_t = 20)]
        timeout: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    V1,
    G0,
    H0,
    G0h0,
    BonusG0,
    Fj,
    Gj,
    Hj,
}

impl Target {
    fn layer(self) -> Option<Layer> {
        match self {
            Target::Fj => Some(Layer::F),
            Target::Gj => Some(Layer::G),
            Target::Hj => Some(Layer::H),
            _ => None,
        }
    }

    /// Even targets are reported in `Z = z^2`.
    fn is_even(self) -> bool {
        matches!(
            self,
            Target::G0 | Target::H0 | Target::G0h0 | Target::BonusG0
        )
    }

    fn name(self) -> &'static str {
        match self {
            Target::V1 => "v1",
            Target::G0 => "g0",
            Target::H0 => "h0",
            Target::G0h0 => "g0+h0",
            Target::BonusG0 => "bonus g0",
            Target::Fj => "f_j",
            Target::Gj => "g_j",
            Target::Hj => "h_j",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    TripleAgreement,
    All,
}

fn parse_class(s: &str) -> Result<PathClass, String> {
    s.parse()
        .map_err(|e: dyck_odd::class::UnknownClass| e.to_string())
}

/// Failure modes, each with its own exit code.
enum Failure {
    Check(String),
    Usage(String),
    Numeric(String),
    External(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 3,
            Failure::External(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Numeric(m) | Failure::External(m) => m,
        }
    }
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::PrecisionTooLow { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Kernel(k) => k.into(),
            Error::Oracle(o) => Failure::Usage(o.to_string()),
            Error::Oeis(o) => o.into(),
            other => Failure::Numeric(other.to_string()),
        }
    }
}

impl From<OeisError> for Failure {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::NotFound(_) | OeisError::NetworkError { .. } | OeisError::Io(_) => {
                Failure::External(e.to_string())
            }
            OeisError::ParseError { .. } => Failure::External(e.to_string()),
            OeisError::InsufficientPrecision { .. } | OeisError::InsufficientTerms { .. } => {
                Failure::Usage(e.to_string())
            }
            OeisError::Series(s) => Failure::Numeric(s.to_string()),
        }
    }
}

fn expand_target(
    target: Target,
    j: Option<u32>,
    precision: i64,
    max_iterations: usize,
) -> Result<Series, Failure> {
    match (target.layer(), j) {
        (Some(_), None) => {
            return Err(Failure::Usage(format!(
                "--target {} requires --j",
                target.to_possible_value().unwrap().get_name()
            )))
        }
        (None, Some(_)) => {
            return Err(Failure::Usage(
                "--j is only meaningful for fj, gj and hj".to_string(),
            ))
        }
        _ => {}
    }
    let s = match target {
        Target::V1 => kernel::solve_v1_bounded(precision, max_iterations)?.0,
        Target::G0 => kernel::g0_closed(precision)?,
        Target::H0 => kernel::h0_closed(precision)?,
        Target::G0h0 => kernel::g0_plus_h0_closed(precision)?,
        Target::BonusG0 => kernel::bonus_closed(precision)?.g0,
        Target::Fj | Target::Gj | Target::Hj => {
            kernel::partial_closed(target.layer().unwrap(), j.unwrap(), precision)?
        }
    };
    if target.is_even() {
        s.decimate().map_err(|e| Failure::Numeric(e.to_string()))
    } else {
        Ok(s)
    }
}

fn render_checks(checks: &[Check], format: OutputFormat) -> String {
    let passed = checks.iter().all(|c| c.passed);
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            for c in checks {
                let _ = writeln!(out, "{c}");
            }
            let _ = writeln!(
                out,
                "{} of {} checks passed",
                checks.iter().filter(|c| c.passed).count(),
                checks.len()
            );
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("check,passed,precision,detail\n");
            for c in checks {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},\"{}\"",
                    c.name, c.passed, c.precision, c.detail
                );
            }
            out
        }
        OutputFormat::Json => {
            let items: Vec<_> = checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "precision": c.precision,
                        "detail": c.detail,
                    })
                })
                .collect();
            format!("{}\n", json!({ "passed": passed, "checks": items }))
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Enumerate {
            class,
            n_max,
            complete,
            format,
        } => {
            let t = dp_counts(class, n_max);
            if !complete {
                return Ok(render::table(&t, format));
            }
            let counts = t.complete_counts();
            Ok(match format {
                OutputFormat::Table => {
                    let mut out = format!("# class {class}, complete paths by semilength\n");
                    let _ = writeln!(out, "{:>10}  count", "semilength");
                    for (m, c) in counts.iter().enumerate() {
                        let _ = writeln!(out, "{:>10}  {c}", m + 1);
                    }
                    out
                }
                OutputFormat::Csv => {
                    let mut out = String::from("semilength,count\n");
                    for (m, c) in counts.iter().enumerate() {
                        let _ = writeln!(out, "{},{c}", m + 1);
                    }
                    out
                }
                OutputFormat::Json => render::series(
                    &t.complete_series(),
                    "Z",
                    "complete paths",
                    OutputFormat::Json,
                ),
            })
        }
        Command::Expand {
            target,
            j,
            precision,
            format,
            max_newton_iterations,
        } => {
            let s = expand_target(target, j, precision, max_newton_iterations)?;
            let var = if target.is_even() { "Z" } else { "z" };
            let label = match j {
                Some(j) => target.name().replace('j', &j.to_string()),
                None => target.name().to_string(),
            };
            Ok(render::series(&s, var, &label, format))
        }
        Command::Verify {
            suite,
            n_max,
            precision,
            format,
            inject_fault,
        } => {
            if n_max > MAX_STEPS && suite != Suite::Identities {
                return Err(Failure::Usage(format!(
                    "--n {n_max} exceeds the brute-force cap of {MAX_STEPS} steps"
                )));
            }
            let fault = if inject_fault {
                Fault::PerturbG0
            } else {
                Fault::None
            };
            let mut checks = Vec::new();
            if suite != Suite::TripleAgreement {
                checks.extend(verify::identities(precision, fault)?);
            }
            if suite != Suite::Identities {
                checks.extend(verify::triple_agreement(n_max, fault)?);
            }
            let out = render_checks(&checks, format);
            if checks.iter().all(|c| c.passed) {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check("verification failed".to_string()))
            }
        }
        Command::Oeis {
            id,
            target,
            start_power,
            count,
            network,
            timeout,
        } => {
            if !target.is_even() {
                return Err(Failure::Usage(
                    "only g0, h0, g0h0 and bonus-g0 are sequences in Z".to_string(),
                ));
            }
            let source = if network {
                Source::Network {
                    timeout: Duration::from_secs(timeout),
                }
            } else {
                Source::fixture_from_env()
            };
            let rec = oeis::load(&id, &source)?;
            let start = start_power.unwrap_or(rec.offset);
            let precision = (2 * (start + count as i64) + 2).max(4);
            let s = expand_target(target, None, precision, kernel::MAX_ITERATIONS)?;
            let report = oeis::compare(&s, &rec, start, count)?;
            let out = format!("{report}\n");
            if report.all_equal() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check(format!(
                    "mismatch at index {}",
                    report.first_mismatch().unwrap()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
