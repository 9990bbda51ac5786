//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 when the answer is "no solution" (infeasible,
//! not viable, undefined conditional), 1 on usage or input errors.

mod file;
mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use file::{BuiltinSpec, ConstraintSpec, ContextSpec, FileError, ScenarioFile};
pub use report::{AtomMass, BiasReport, ConditionalReport, Report};

use crate::contextuality::detect_bias;
use crate::error::Error;
use crate::measure::{Assignment, Event};
use crate::scenarios::{self, ScenarioBundle};
use crate::solver::{self, SolveStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NO_SOLUTION: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "quasiprob",
    version,
    about = "Proper and signed joint distributions for ±1 variables"
)]
struct Args {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum-L1 signed joint of a scenario file.
    Solve { file: PathBuf },
    /// Proper joint of a scenario file, or NOT VIABLE.
    Viable { file: PathBuf },
    /// First disagreement between contexts on a shared event, or NO BIAS.
    Bias { file: PathBuf },
    /// Signed conditional on the minimum-L1 witness.
    Condition {
        file: PathBuf,
        /// Partial assignment such as `Da=+1`.
        #[arg(long)]
        target: String,
        /// Partial assignment such as `D1=+1,D2=-1`.
        #[arg(long)]
        given: String,
    },
    /// Solve a built-in scenario: mz-case-1..8, mz-counterfactual, mz-detuned,
    /// pr-box, tsirelson, lg-chain.
    Builtin {
        name: String,
        /// `value` for the builtin's main parameter, or `key=value`.
        #[arg(long)]
        param: Vec<String>,
    },
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report to `out`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&args.command) {
        Ok((report, code)) => {
            let text = match args.format {
                Format::Table => report.to_table(),
                Format::Json => report.to_json(),
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn load(path: &Path) -> Result<ScenarioBundle, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = ScenarioFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    file.to_bundle()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn builtin_params(name: &str, raw: &[String]) -> Result<BTreeMap<String, String>, Error> {
    let mut params = BTreeMap::new();
    for p in raw {
        let (key, value) = match p.split_once('=') {
            Some((k, v)) => (k.trim().to_string(), v.trim().to_string()),
            None => {
                let key = scenarios::default_param_key(name).ok_or_else(|| {
                    Error::InvalidParameter(format!("`{name}` takes no parameters"))
                })?;
                (key.to_string(), p.trim().to_string())
            }
        };
        if params.insert(key.clone(), value).is_some() {
            return Err(Error::InvalidParameter(format!("`{key}` given twice")));
        }
    }
    Ok(params)
}

fn base_report(command: &str, bundle: &ScenarioBundle) -> Report {
    Report {
        command: command.to_string(),
        scenario: bundle.label.clone(),
        variables: bundle.constraint_system().space().variables().to_vec(),
        ..Report::default()
    }
}

fn solve_report(command: &str, bundle: &ScenarioBundle) -> (Report, i32) {
    let r = solver::minimize_l1(&bundle.constraint_system());
    let code = if r.status == SolveStatus::Infeasible {
        EXIT_NO_SOLUTION
    } else {
        EXIT_OK
    };
    (base_report(command, bundle).with_solve(&r), code)
}

fn execute(command: &Command) -> Result<(Report, i32), String> {
    match command {
        Command::Solve { file } => Ok(solve_report("solve", &load(file)?)),
        Command::Builtin { name, param } => {
            let params = builtin_params(name, param).map_err(|e| e.to_string())?;
            let bundle = scenarios::builtin(name, &params).map_err(|e| e.to_string())?;
            Ok(solve_report("builtin", &bundle))
        }
        Command::Viable { file } => {
            let bundle = load(file)?;
            let cs = bundle.constraint_system();
            let (rank, nullity) = solver::rank_nullity(&cs);
            let mut report = base_report("viable", &bundle);
            report.rank = Some(rank);
            report.nullity = Some(nullity);
            match solver::feasible_proper(&cs) {
                Some(p) => {
                    report.status = "VIABLE".into();
                    report.mstar = Some("1".into());
                    report.witness = Some(report::witness_rows(&p));
                    Ok((report, EXIT_OK))
                }
                None => {
                    report.status = "NOT VIABLE".into();
                    Ok((report, EXIT_NO_SOLUTION))
                }
            }
        }
        Command::Bias { file } => {
            let bundle = load(file)?;
            let family = bundle
                .as_family()
                .ok_or_else(|| format!("{}: `bias` needs a file with contexts", file.display()))?;
            let report = base_report("bias", &bundle);
            Ok(match detect_bias(family) {
                Some(w) => (
                    Report {
                        status: "BIAS".into(),
                        ..report
                    }
                    .with_bias(&w),
                    EXIT_OK,
                ),
                None => (
                    Report {
                        status: "NO BIAS".into(),
                        ..report
                    },
                    EXIT_OK,
                ),
            })
        }
        Command::Condition {
            file,
            target,
            given,
        } => {
            let bundle = load(file)?;
            let cs = bundle.constraint_system();
            let space = cs.space().clone();
            let parse = |text: &str| -> Result<(Assignment, Event), String> {
                let a = Assignment::parse(text).map_err(|e| e.to_string())?;
                let e = Event::cylinder(&space, &a).map_err(|e| e.to_string())?;
                Ok((a, e))
            };
            let (ta, te) = parse(target)?;
            let (ga, ge) = parse(given)?;
            let (mut report, code) = solve_report("condition", &bundle);
            let Some(w) = solver::minimize_l1(&cs).witness else {
                return Ok((report, code));
            };
            let (value, code) = match w.signed_conditional(&te, &ge) {
                Ok(v) => (Some(v), EXIT_OK),
                Err(Error::UndefinedConditional) => (None, EXIT_NO_SOLUTION),
                Err(e) => return Err(e.to_string()),
            };
            report.conditionals.push(ConditionalReport {
                target: ta.to_string(),
                given: ga.to_string(),
                proper_range: value
                    .as_ref()
                    .map(|v| *v >= crate::rational::int(0) && *v <= crate::rational::int(1)),
                value: value.map(|v| v.to_string()),
            });
            Ok((report, code))
        }
    }
}
