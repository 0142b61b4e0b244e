//! The `qmock` command line, written against plain writers so it can be
//! driven from tests.
//!
//! Exit codes: 0 success, 1 mismatch, 2 usage or parse error, 3 engine error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::expr::{eval, parse, parse_identity};
use crate::identity::{builtin_registry, lookup, verify_all_of, Identity, Status, VerificationReport};
use crate::selftest::{self, Fault};
use crate::series::{render_coefficient, EvalContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qmock", version, about = "Exact q-series expansion and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an expression as a truncated Laurent series.
    Expand {
        expr: String,
        #[arg(long, default_value_t = 100)]
        order: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Verify a registry identity, all of them, or an inline "lhs = rhs".
    Verify {
        #[arg(conflicts_with_all = ["id", "all"])]
        identity: Option<String>,
        #[arg(long)]
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        #[arg(long, default_value_t = 100)]
        order: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Run the property suites and the registry.
    Selftest {
        #[arg(long, default_value_t = 100)]
        order: i64,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// List registry identities and their sources.
    List,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Expand { expr, order, format } => expand(&expr, order, format, out, err),
        Command::Verify { identity, id, all, order, format } => {
            verify(identity.as_deref(), id.as_deref(), all, order, format, out, err)
        }
        Command::Selftest { order, inject_fault } => selftest(order, inject_fault, out, err),
        Command::List => list(out),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "io error: {e}");
        EXIT_ERROR
    })
}

fn context(order: i64, err: &mut dyn Write) -> std::io::Result<Option<EvalContext>> {
    match EvalContext::new(order) {
        Ok(ctx) => Ok(Some(ctx)),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(None)
        }
    }
}

#[derive(Serialize)]
struct Expansion {
    lo: i64,
    valid_to: i64,
    coefficients: Vec<(i64, String)>,
}

fn expand(text: &str, order: i64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let Some(ctx) = context(order, err)? else { return Ok(EXIT_USAGE) };
    let expr = match parse(text) {
        Ok(e) => e,
        Err(e) => {
            writeln!(err, "parse error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let series = match eval(&expr, &ctx) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_ERROR);
        }
    };
    let upto = order.min(series.valid_to());
    if series.valid_to() < order {
        writeln!(err, "warning: series is only known below q^{}", series.valid_to())?;
    }
    let coefficients: Vec<(i64, String)> =
        series.terms().filter(|(e, _)| *e < upto).map(|(e, c)| (e, render_coefficient(c))).collect();
    match format {
        Format::Plain => {
            for (e, c) in &coefficients {
                writeln!(out, "{e}: {c}")?;
            }
        }
        Format::Json => {
            let doc = Expansion { lo: series.lo(), valid_to: series.valid_to(), coefficients };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))?;
        }
    }
    Ok(EXIT_OK)
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Error) {
        EXIT_ERROR
    } else if reports.iter().any(|r| r.status == Status::Mismatch) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn verify(
    inline: Option<&str>,
    id: Option<&str>,
    all: bool,
    order: i64,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let Some(ctx) = context(order, err)? else { return Ok(EXIT_USAGE) };
    let registry = builtin_registry();
    let targets: Vec<Identity> = match (inline, id, all) {
        (_, _, true) => registry,
        (_, Some(name), _) => match lookup(&registry, name) {
            Some(found) => vec![found.clone()],
            None => {
                writeln!(err, "unknown identity {name:?}; try `qmock list`")?;
                return Ok(EXIT_USAGE);
            }
        },
        (Some(text), None, false) => match parse_identity(text) {
            Ok((lhs, rhs)) => vec![Identity {
                name: "inline".into(),
                lhs,
                rhs,
                min_order: 1,
                source: "command line".into(),
                builtin: None,
            }],
            Err(e) => {
                writeln!(err, "parse error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        },
        (None, None, false) => {
            writeln!(err, "verify needs an identity, --id NAME or --all")?;
            return Ok(EXIT_USAGE);
        }
    };
    let reports: Vec<VerificationReport> = match verify_all_of(&targets, &ctx) {
        Ok(results) => results.into_iter().map(|v| v.report).collect(),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_ERROR);
        }
    };
    match format {
        Format::Plain => {
            for r in &reports {
                writeln!(out, "{}", r.plain())?;
            }
        }
        Format::Json => {
            let doc = if all {
                serde_json::to_string_pretty(&reports)
            } else {
                serde_json::to_string_pretty(&reports[0])
            };
            writeln!(out, "{}", doc.expect("serializable"))?;
        }
    }
    Ok(exit_code(&reports))
}

fn selftest(order: i64, fault: Option<Fault>, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let report = match selftest::run(order, fault) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    for check in &report.checks {
        writeln!(out, "{}", check.line())?;
    }
    writeln!(out, "{} passed, {} failed", report.passed(), report.failed())?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn list(out: &mut dyn Write) -> std::io::Result<i32> {
    for id in builtin_registry() {
        writeln!(out, "{:<16} {}", id.name, id.source)?;
    }
    Ok(EXIT_OK)
}
