//! Command-line front end.

pub mod eval;
pub mod expr;

pub use eval::{eval, print_value, Env, Value};
pub use expr::{parse, print, Expr};

use crate::error::Error;
use crate::identity_suite::{self, render_json, render_text, Report};
use crate::letterplace::{Straightener, TermOrder, DEFAULT_BUDGET};
use crate::whitney::{self, Matroid};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cayley", about = "Exact Grassmann-Cayley, letterplace and Whitney algebra computations")]
struct Cli {
    /// Seed for randomized instance families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON file binding vector names to rational coordinates.
    #[arg(long, global = true)]
    env: Option<String>,
    /// Longest word used by matroid checks.
    #[arg(long = "max-word", global = true, default_value_t = 3)]
    max_word: usize,
    /// Row-operation budget for straightening.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
        expr: String,
    },
    /// Rewrite a letterplace or bitableau expression in standard bitableaux.
    Straighten {
        #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Order::PlaceLex)]
        order: Order,
    },
    /// Run an identity suite: desargues, alternative, distributive, modular,
    /// capelli, hodge or all.
    Verify { suite: String },
    /// Run a check (exchange, oracle, polarization, probe) on a matroid file.
    Matroid { file: String, check: String },
    /// Evaluate equations `lhs = rhs` and report whether both sides agree.
    Check {
        #[arg(short = 'e', long = "expr", required = true, allow_hyphen_values = true)]
        equations: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    PlaceLex,
    LetterLex,
    ReverseLex,
}

impl From<Order> for TermOrder {
    fn from(o: Order) -> TermOrder {
        match o {
            Order::PlaceLex => TermOrder::PlaceLex,
            Order::LetterLex => TermOrder::LetterLex,
            Order::ReverseLex => TermOrder::ReverseLex,
        }
    }
}

enum Failure {
    Usage(String),
    Identity,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn load_env(path: &Option<String>, expr: &Expr) -> Result<Env, Failure> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{p}: {e}")))?;
            Ok(Env::from_json(&text)?)
        }
        None => Ok(Env::standard(basis_dim(expr).max(3))),
    }
}

/// Largest k among basis names e<k> in the expression.
fn basis_dim(e: &Expr) -> usize {
    match e {
        Expr::Name(n) => n.strip_prefix('e').and_then(|k| k.parse().ok()).unwrap_or(0),
        Expr::Star(x) | Expr::Neg(x) | Expr::Diamond(_, _, _, x) => basis_dim(x),
        Expr::Wedge(a, b) | Expr::Meet(a, b) | Expr::Tensor(a, b) | Expr::Add(a, b) | Expr::Sub(a, b) => {
            basis_dim(a).max(basis_dim(b))
        }
        Expr::Bracket(items) => items.iter().map(basis_dim).max().unwrap_or(0),
        _ => 0,
    }
}

/// Values compared across representations: bitableaux by expansion,
/// scalars as step-0 exterior elements.
fn same_value(a: &Value, b: &Value) -> bool {
    fn lift(v: &Value, dim: usize) -> Value {
        match v {
            Value::Bitableau(b) => Value::Letterplace(b.expand()),
            Value::Scalar(c) => Value::Ext(crate::Exterior::scalar(dim, c.clone())),
            other => other.clone(),
        }
    }
    let dim = [a, b]
        .iter()
        .find_map(|v| match v {
            Value::Ext(e) => Some(e.dim()),
            _ => None,
        })
        .unwrap_or(0);
    lift(a, dim) == lift(b, dim)
}

fn check_equation(text: &str, env_path: &Option<String>) -> Result<Report, Failure> {
    let (l, r) = match text.split_once('=') {
        Some((l, r)) if !r.contains('=') => (l, r),
        _ => return Err(Failure::Usage(format!("{text:?} is not of the form lhs = rhs"))),
    };
    // positions in the right side count from the start of the equation
    let re = parse(r).map_err(|e| match e {
        Error::Syntax { line: 1, column, message } => Error::Syntax {
            line: 1,
            column: column + l.chars().count() + 1,
            message,
        },
        other => other,
    });
    let (le, re) = (parse(l)?, re?);
    let both = Expr::Sub(Box::new(le.clone()), Box::new(re.clone()));
    let env = load_env(env_path, &both)?;
    let (lv, rv) = (eval(&le, &env)?, eval(&re, &env)?);
    Ok(Report {
        identity: "equation".into(),
        instance: format!("{} = {}", print(&le), print(&re)),
        lhs: print_value(&lv),
        rhs: print_value(&rv),
        equal: same_value(&lv, &rv),
    })
}

fn emit_reports(reports: &[Report], json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let text = if json { render_json(reports) + "\n" } else { render_text(reports) };
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))?;
    if reports.iter().all(|r| r.equal) {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn emit_value(text: String, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let line = if json {
        serde_json::json!({ "value": text }).to_string()
    } else {
        text
    };
    writeln!(out, "{line}").map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { expr } => {
            let e = parse(&expr)?;
            let env = load_env(&cli.env, &e)?;
            emit_value(print_value(&eval(&e, &env)?), cli.json, out)
        }
        Command::Straighten { expr, order } => {
            let e = parse(&expr)?;
            let env = load_env(&cli.env, &e)?;
            let mut s = Straightener::new(order.into(), cli.budget);
            let result = match eval(&e, &env)? {
                Value::Bitableau(b) => s.straighten(&b)?,
                Value::Letterplace(lp) => s.standard_expansion(&lp)?,
                _ => return Err(Failure::Usage("straighten needs a letterplace or bitableau expression".into())),
            };
            emit_value(print_value(&Value::Bitableau(result)), cli.json, out)
        }
        Command::Verify { suite } => {
            let reports = identity_suite::run_suite(&suite, cli.seed)?;
            emit_reports(&reports, cli.json, out)
        }
        Command::Matroid { file, check } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
            let m = Matroid::from_json(&text)?;
            let reports = whitney::run_matroid_check(&m, &check, cli.max_word)?;
            emit_reports(&reports, cli.json, out)
        }
        Command::Check { equations } => {
            let reports = equations
                .iter()
                .map(|e| check_equation(e, &cli.env))
                .collect::<Result<Vec<_>, _>>()?;
            emit_reports(&reports, cli.json, out)
        }
    }
}

/// Runs the command line; returns the process exit code. Normal output goes
/// to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_PASS,
        Err(Failure::Identity) => EXIT_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
