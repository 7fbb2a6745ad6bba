//! Command-line front end. Every invocation writes exactly one JSON document
//! with the keys `command`, `inputs`, `result` and `status`.
//!
//! Exit codes: 0 on success (every requested check holds), 1 when a check is
//! violated, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{check_prop21, Prop21Kind};
use crate::error::{Error, Result};
use crate::exact::{det_oracle, parse_list, parse_matrix, RationalMatrix, Scalar, VerificationReport};
use crate::recurrence::{fib_block_det_check, fib_step_block};
use crate::seed::{verify_theorem, CoefficientScheme};
use crate::sympoly::{power_sum_direct, power_sum_recurrence, PointSet};
use crate::trials::{run_suite, FuzzSummary, Suite};
use crate::vandermonde::{genvand_det, genvand_matrix, vand_det, vand_inverse, vand_minor, ExponentSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "detident", version, about = "Exact checks of determinantal identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact determinant of a matrix file.
    Det { file: PathBuf },
    /// Vandermonde determinant, inverse or minor.
    Vand {
        op: VandOp,
        /// Comma-separated points, integers or p/q.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Generalized Vandermonde determinant.
    Genvand {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        exponents: String,
        #[arg(long, value_enum, default_value_t = Method::Factored)]
        method: Method,
    },
    /// Power sum s_k.
    Powersum {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Via::Recurrence)]
        via: Via,
    },
    /// Hessenberg identities for binomial and Stirling numbers.
    Identity {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "all")]
        j: Option<usize>,
        /// Check every j in 1..=n (the default when --j is absent).
        #[arg(long)]
        all: bool,
    },
    /// n-step Fibonacci block built from an initial matrix.
    FibStep {
        #[arg(long)]
        init: PathBuf,
        #[arg(long)]
        check_det: bool,
    },
    /// Check one instance of the column-recurrence minor identity.
    SeedVerify {
        #[arg(long)]
        matrix: PathBuf,
        /// (n+r-1) x r coefficient array; entries at or below each column's
        /// -1 position are ignored.
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        delete: String,
    },
    /// Randomized identity checks, reproducible for a fixed seed.
    Fuzz {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VandOp {
    Det,
    Inv,
    Minor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Factored,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Recurrence,
    Direct,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Binomial,
    Stirling1,
    Stirling2,
}

impl From<Family> for Prop21Kind {
    fn from(f: Family) -> Self {
        match f {
            Family::Binomial => Prop21Kind::Binomial,
            Family::Stirling1 => Prop21Kind::Stirling1,
            Family::Stirling2 => Prop21Kind::Stirling2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Violated,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::Violated => EXIT_VIOLATED,
            Status::InputError => EXIT_INPUT_ERROR,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Payload {
    Scalar(Scalar),
    Matrix(Vec<Vec<String>>),
    Reports(Vec<VerificationReport>),
    Fuzz(FuzzSummary),
    Error(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct CliReport {
    pub command: String,
    pub inputs: Value,
    pub result: Payload,
    pub status: Status,
}

impl CliReport {
    fn new(command: impl Into<String>, inputs: Value, result: Payload) -> Self {
        let status = match &result {
            Payload::Reports(r) if r.iter().any(|r| !r.holds) => Status::Violated,
            Payload::Fuzz(f) if !f.all_hold() => Status::Violated,
            Payload::Error(_) => Status::InputError,
            _ => Status::Ok,
        };
        CliReport {
            command: command.into(),
            inputs,
            result,
            status,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn points_arg(text: &str) -> Result<PointSet> {
    PointSet::new(parse_list(text)?)
}

fn strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn read_matrix(path: &PathBuf) -> Result<RationalMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text)
}

fn matrix_payload(m: &RationalMatrix) -> Payload {
    Payload::Matrix(m.to_string_rows())
}

fn execute(command: Command) -> std::result::Result<CliReport, (String, Value, Error)> {
    macro_rules! tryi {
        ($name:expr, $inputs:expr, $e:expr) => {
            match $e {
                Ok(v) => v,
                Err(err) => return Err(($name.to_string(), $inputs.clone(), err)),
            }
        };
    }

    match command {
        Command::Det { file } => {
            let name = "det";
            let mut inputs = json!({ "file": file.display().to_string() });
            let m = tryi!(name, inputs, read_matrix(&file));
            inputs["matrix"] = json!(m.to_string_rows());
            let det = tryi!(name, inputs, det_oracle(&m));
            Ok(CliReport::new(name, inputs, Payload::Scalar(det)))
        }
        Command::Vand { op, points, i, j } => {
            let name = match op {
                VandOp::Det => "vand det",
                VandOp::Inv => "vand inv",
                VandOp::Minor => "vand minor",
            };
            let mut inputs = json!({ "points": points });
            let ps = tryi!(name, inputs, points_arg(&points));
            inputs = json!({ "points": strings(ps.points()) });
            let result = match op {
                VandOp::Det => Payload::Scalar(vand_det(&ps)),
                VandOp::Inv => matrix_payload(&tryi!(name, inputs, vand_inverse(&ps))),
                VandOp::Minor => {
                    let (i, j) = tryi!(
                        name,
                        inputs,
                        i.zip(j).ok_or_else(|| Error::Parse("minor needs --i and --j".into()))
                    );
                    inputs["i"] = json!(i);
                    inputs["j"] = json!(j);
                    Payload::Scalar(tryi!(name, inputs, vand_minor(&ps, i, j)))
                }
            };
            Ok(CliReport::new(name, inputs, result))
        }
        Command::Genvand { points, exponents, method } => {
            let name = "genvand";
            let method_name = format!("{method:?}").to_lowercase();
            let raw = json!({ "exponents": exponents, "method": method_name, "points": points });
            let ps = tryi!(name, raw, points_arg(&points));
            let ks: ExponentSequence = tryi!(name, raw, exponents.parse());
            let inputs = json!({
                "exponents": ks.as_slice(),
                "method": method_name,
                "points": strings(ps.points()),
            });
            let oracle = || -> Result<Scalar> { det_oracle(&genvand_matrix(&ps, &ks)?) };
            let result = match method {
                Method::Factored => Payload::Scalar(tryi!(name, inputs, genvand_det(&ps, &ks))),
                Method::Oracle => Payload::Scalar(tryi!(name, inputs, oracle())),
                Method::Both => {
                    let lhs = tryi!(name, inputs, oracle());
                    let rhs = tryi!(name, inputs, genvand_det(&ps, &ks));
                    Payload::Reports(vec![VerificationReport::new(
                        format!("generalized Vandermonde, exponents {ks}: oracle determinant vs sgn det Q det V"),
                        lhs,
                        rhs,
                    )])
                }
            };
            Ok(CliReport::new(name, inputs, result))
        }
        Command::Powersum { points, k, via } => {
            let name = "powersum";
            let via_name = format!("{via:?}").to_lowercase();
            let raw = json!({ "k": k, "points": points, "via": via_name });
            let ps = tryi!(name, raw, points_arg(&points));
            let inputs = json!({ "k": k, "points": strings(ps.points()), "via": via_name });
            let result = match via {
                Via::Recurrence => Payload::Scalar(power_sum_recurrence(&ps, k)),
                Via::Direct => Payload::Scalar(power_sum_direct(&ps, k)),
                Via::Both => Payload::Reports(vec![VerificationReport::new(
                    format!("power sum s_{k}: direct vs recurrence"),
                    power_sum_direct(&ps, k),
                    power_sum_recurrence(&ps, k),
                )]),
            };
            Ok(CliReport::new(name, inputs, result))
        }
        Command::Identity { family, n, j, all: _ } => {
            let kind = Prop21Kind::from(family);
            let name = format!("identity {kind}");
            let (inputs, js) = match j {
                Some(j) => (json!({ "j": j, "n": n }), vec![j]),
                None => (json!({ "all": true, "n": n }), (1..=n).collect()),
            };
            if js.is_empty() {
                return Err((name, inputs, Error::IndexOutOfRange { index: 0, bound: 0 }));
            }
            let reports = tryi!(
                name,
                inputs,
                js.into_iter().map(|j| check_prop21(kind, n, j)).collect::<Result<Vec<_>>>()
            );
            Ok(CliReport::new(name, inputs, Payload::Reports(reports)))
        }
        Command::FibStep { init, check_det } => {
            let name = "fib-step";
            let mut inputs = json!({ "check_det": check_det, "init": init.display().to_string() });
            let a = tryi!(name, inputs, read_matrix(&init));
            inputs["matrix"] = json!(a.to_string_rows());
            let result = if check_det {
                Payload::Reports(vec![tryi!(name, inputs, fib_block_det_check(&a))])
            } else {
                matrix_payload(&tryi!(name, inputs, fib_step_block(&a)))
            };
            Ok(CliReport::new(name, inputs, result))
        }
        Command::SeedVerify { matrix, coeffs, delete } => {
            let name = "seed-verify";
            let mut inputs = json!({
                "coeffs_file": coeffs.display().to_string(),
                "delete": delete,
                "matrix_file": matrix.display().to_string(),
            });
            let a = tryi!(name, inputs, read_matrix(&matrix));
            let raw_p = tryi!(name, inputs, read_matrix(&coeffs));
            let deleted: Vec<usize> = tryi!(name, inputs, parse_list(&delete));
            inputs["delete"] = json!(deleted);
            inputs["matrix"] = json!(a.to_string_rows());
            let p = tryi!(name, inputs, CoefficientScheme::from_matrix(a.rows(), &raw_p));
            inputs["coeffs"] = json!(p.to_matrix().to_string_rows());
            let report = tryi!(name, inputs, verify_theorem(&a, &p, &deleted));
            Ok(CliReport::new(name, inputs, Payload::Reports(vec![report])))
        }
        Command::Fuzz { suite, trials, seed, max_n } => {
            let name = "fuzz";
            let inputs = json!({ "max_n": max_n, "seed": seed, "suite": suite, "trials": trials });
            let suite: Suite = tryi!(name, inputs, suite.parse());
            let summary = tryi!(name, inputs, run_suite(suite, trials, seed, max_n));
            Ok(CliReport::new(name, inputs, Payload::Fuzz(summary)))
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the JSON report to `out`. Returns the process exit code.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let report = match Cli::try_parse_from(&args) {
        Ok(cli) => match execute(cli.command) {
            Ok(report) => report,
            Err((command, inputs, err)) => CliReport::new(command, inputs, Payload::Error(err.to_string())),
        },
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{err}");
                return EXIT_OK;
            }
            let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
            let command = argv.first().cloned().unwrap_or_default();
            let message = err.to_string();
            let first = message.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            CliReport::new(command, json!({ "argv": argv }), Payload::Error(first))
        }
    };
    let _ = out.write_all(report.to_json().as_bytes());
    report.status.exit_code()
}
