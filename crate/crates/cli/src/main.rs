//! `bruhatkit`: JSON in, JSON out.
//!
//! Exit status is 0 on success, 1 when an oracle check finds a mismatch,
//! 2 when an input does not parse and 3 on a domain error.

use std::path::Path;
use std::process::ExitCode;

use bruhatkit::bruhat_moves::chain_toward;
use bruhatkit::colmat::ColMatrix;
use bruhatkit::decomp::bruhat_decompose;
use bruhatkit::flags::{intersection_gradation, is_independent, relative_position, Flag};
use bruhatkit::oracle::{run_suite, Suite};
use bruhatkit::permutation::{bruhat_leq, bruhat_leq_bounded, Permutation};
use bruhatkit::schubert::closure_cover_check;
use bruhatkit::{Error, Ring};
use clap::{Parser, Subcommand};
use log::{debug, info};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "bruhatkit", version, about = "Exact Bruhat order and Bruhat decomposition toolkit")]
struct Cli {
    /// Field for inputs that do not name one: Q, Fp:<p> or Z.
    #[arg(long, global = true)]
    field: Option<Ring>,

    /// Indented JSON plus a one-line summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bruhat comparison σ ≤ τ.
    Compare {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        /// Verification bound for permutations with a non-identity tail.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Transposition steps from τ down toward σ.
    Chain {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[arg(long, default_value_t = 100)]
        max_steps: usize,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Factor an invertible matrix as b·σ·c.
    Decompose {
        #[arg(long)]
        matrix: String,
    },
    /// Decide membership of a matrix in the closed locus Y_σ.
    ClosureTest {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        matrix: String,
    },
    /// Relative position of two flags; the reference defaults to the
    /// standard flag.
    Relpos {
        #[arg(long)]
        flag: String,
        #[arg(long)]
        reference: Option<String>,
    },
    /// Gradation of the intersections of two flags.
    Grade {
        #[arg(long)]
        flag: String,
        #[arg(long)]
        reference: Option<String>,
    },
    /// Exhaustive cross-check against the brute-force oracle.
    OracleCheck {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Domain(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

/// An argument is a path when such a file exists, inline JSON otherwise.
fn load(arg: &str) -> Result<Value, Failure> {
    let text = if Path::new(arg).is_file() {
        debug!("reading {arg}");
        std::fs::read_to_string(arg).map_err(|e| Failure::Parse(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{arg}: {e}")))
}

fn load_permutation(arg: &str) -> Result<Permutation, Failure> {
    serde_json::from_value(load(arg)?).map_err(|e| Failure::Parse(format!("permutation {arg}: {e}")))
}

fn load_matrix(arg: &str, field: Option<Ring>) -> Result<ColMatrix, Failure> {
    Ok(ColMatrix::from_json(&load(arg)?, field)?)
}

fn load_flag(arg: &str, field: Option<Ring>) -> Result<Flag, Failure> {
    Ok(Flag::from_json(&load(arg)?, field)?)
}

fn flag_pair(flag: &str, reference: Option<&str>, field: Option<Ring>) -> Result<(Flag, Flag), Failure> {
    let f = load_flag(flag, field)?;
    let e = match reference {
        Some(r) => load_flag(r, field)?,
        None => Flag::standard(f.ring(), f.dim()),
    };
    Ok((f, e))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

/// JSON result and a one-line summary.
fn run(cli: &Cli) -> Result<(Value, String), Failure> {
    let field = cli.field;
    match &cli.command {
        Command::Compare { sigma, tau, bound } => {
            let (s, t) = (load_permutation(sigma)?, load_permutation(tau)?);
            match bound {
                Some(b) => {
                    let v = bruhat_leq_bounded(&s, &t, *b);
                    let summary = format!("{s} <= {t}: {}", v.holds);
                    Ok((json!({"leq": v.holds, "verified_up_to": v.verified_up_to}), summary))
                }
                None => {
                    let leq = bruhat_leq(&s, &t)?;
                    Ok((json!({ "leq": leq }), format!("{s} <= {t}: {leq}")))
                }
            }
        }
        Command::Chain { sigma, tau, max_steps, bound } => {
            let (s, t) = (load_permutation(sigma)?, load_permutation(tau)?);
            let chain = chain_toward(&s, &t, *max_steps, *bound)?;
            let summary = format!(
                "{} steps from {t} toward {s}, terminated: {}",
                chain.steps.len(),
                chain.terminated
            );
            Ok((to_json(&chain.steps), summary))
        }
        Command::Decompose { matrix } => {
            let g = load_matrix(matrix, field)?;
            let f = bruhat_decompose(&g)?;
            let verified = f.reproduces(&g);
            let mut out = to_json(&f);
            out["verified"] = json!(verified);
            Ok((out, format!("g lies in the cell of {}", f.sigma)))
        }
        Command::ClosureTest { sigma, matrix } => {
            let s = load_permutation(sigma)?;
            let g = load_matrix(matrix, field)?;
            let v = closure_cover_check(&s, &g)?;
            let summary = format!("g in Y_{s}: {} (cell {})", v.in_closure, v.coset);
            Ok((to_json(&v), summary))
        }
        Command::Relpos { flag, reference } => {
            let (f, e) = flag_pair(flag, reference.as_deref(), field)?;
            let w = relative_position(&f, &e)?;
            Ok((json!({ "w": to_json(&w) }), format!("relative position {w}")))
        }
        Command::Grade { flag, reference } => {
            let (f, e) = flag_pair(flag, reference.as_deref(), field)?;
            let table = intersection_gradation(&f, &e)?;
            let d = f.dim();
            let mut cells = Vec::new();
            for i in 0..=d {
                for j in 0..=d {
                    let cell = table.cell(table.poset.pair(i, j));
                    if !cell.is_zero() {
                        let basis: Vec<Vec<String>> =
                            cell.basis().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
                        cells.push(json!({"i": i, "j": j, "basis": basis}));
                    }
                }
            }
            let independent = is_independent(&table)?;
            let summary = format!("{} nonzero cells, independent: {independent}", cells.len());
            Ok((json!({"cells": cells, "independent": independent}), summary))
        }
        Command::OracleCheck { suite, n, p } => {
            info!("running {suite:?} suite at n = {n}, p = {p}");
            match run_suite(*suite, *n, *p)? {
                Ok(report) => Ok((
                    json!({"suite": format!("{suite:?}").to_lowercase(), "cases": report.cases, "ok": true}),
                    format!("{} cases agree", report.cases),
                )),
                Err(m) => Err(Failure::Mismatch(m.counterexample)),
            }
        }
    }
}

fn emit(value: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", text.expect("json values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::new().filter("BRUHATKIT_LOG")).init();
    match run(&cli) {
        Ok((value, summary)) => {
            emit(&value, cli.pretty);
            if cli.pretty {
                eprintln!("{summary}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(counterexample)) => {
            emit(&json!({"ok": false, "counterexample": counterexample}), cli.pretty);
            eprintln!("mismatch: {counterexample}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
