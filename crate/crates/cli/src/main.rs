//! `dirac`: command-line access to complexes, ideals, graphs and the verification suites.

mod commands;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use dirac_core::{Error, FieldChoice};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "dirac", version, about = "Simplicial complexes, monomial ideals, quasi-trees and chordal graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Input file (JSON); stdin when omitted.
    #[arg(short = 'f', long = "file", global = true)]
    pub file: Option<String>,
    /// Print monomials as `x1*x2^2` instead of exponent vectors.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Coefficient field: `q`, `gf2` or `gf<p>`.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Drop non-maximal faces from input complexes instead of rejecting them.
    #[arg(long, global = true)]
    pub minimalize: bool,
    /// Omit the timing field, so identical runs give identical bytes.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Alexander dual of a complex.
    Dual,
    /// Complex of facet complements.
    Complement,
    /// The i-dimensional skeleton.
    Skeleton {
        #[arg(long)]
        dim: usize,
    },
    /// Minimal nonfaces and the flag verdict.
    Nonfaces,
    /// Stanley-Reisner ideal.
    SrIdeal,
    /// Facet ideal, optionally of the complement or pure complement.
    FacetIdeal {
        /// Use the complex of facet complements.
        #[arg(long, conflicts_with = "pure_complement")]
        complement: bool,
        /// Use the pure complement (non-faces of the facet dimension).
        #[arg(long)]
        pure_complement: bool,
    },
    /// Leaf order, or its absence.
    Quasitree,
    /// All relation trees of a quasi-tree.
    RelationTrees {
        #[arg(long, default_value_t = dirac_core::quasitrees::DEFAULT_TREE_LIMIT)]
        limit: usize,
    },
    /// The Taylor relation matrix of the complement facet ideal.
    Mdelta,
    /// Multigraded Betti numbers of an ideal.
    Betti,
    /// Projective dimension of an ideal.
    Projdim,
    /// Castelnuovo-Mumford regularity of an ideal.
    Reg,
    /// Chordality with a witness.
    Chordal,
    /// Clique complex of a graph.
    CliqueComplex,
    /// Chordality against quasi-tree-ness of the clique complex.
    Dirac,
    /// Higher-dimensional analogue for a pure complex.
    HigherDirac,
    /// k-th power of an ideal.
    Power {
        #[arg(long)]
        k: u32,
    },
    /// Generators bounded by an exponent vector, e.g. `--bound 1,2,0`.
    Restrict {
        #[arg(long, value_delimiter = ',')]
        bound: Vec<u32>,
    },
    /// Shelling order of a pure complex.
    Shelling,
    /// Linear-quotients order of an ideal.
    LinearQuotients,
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_facets: Option<usize>,
    #[arg(long)]
    pub max_power: Option<u32>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// A complex to use in place of the random family, for suites that take one.
    #[arg(long)]
    pub complex: Option<String>,
}

/// Outcome of a command before it is wrapped into a report.
pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Value>,
}

pub fn check(name: &str, passed: bool, witness: Option<Value>) -> Value {
    let mut c = json!({ "name": name, "passed": passed });
    if let Some(w) = witness {
        c["witness"] = w;
    }
    c
}

fn parse_field(text: &str) -> Result<FieldChoice, Error> {
    match text.to_ascii_lowercase().as_str() {
        "q" | "qq" | "rationals" => Ok(FieldChoice::Rationals),
        other => match other.strip_prefix("gf").map(str::parse::<u64>) {
            Some(Ok(p)) => FieldChoice::prime(p),
            _ => Err(Error::Parse(format!("unknown field '{text}'"))),
        },
    }
}

pub fn read_input(global: &Global) -> Result<String, Error> {
    match &global.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}"))),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Verify(v) => format!("verify {}", v.suite),
        other => {
            let debug = format!("{other:?}");
            let head = debug.split([' ', '{', '(']).next().unwrap_or_default().to_string();
            let mut out = String::new();
            for (i, ch) in head.chars().enumerate() {
                if ch.is_ascii_uppercase() && i > 0 {
                    out.push('-');
                }
                out.push(ch.to_ascii_lowercase());
            }
            out
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    if e.is_resource() {
        3
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = command_name(&cli.command);
    let start = Instant::now();
    let outcome = parse_field(&cli.global.field).and_then(|field| commands::run(&cli, field));
    match outcome {
        Ok(out) => {
            let passed = out.checks.iter().all(|c| c["passed"] == json!(true));
            let mut report = json!({
                "schema": "v1",
                "command": name,
                "inputs": out.inputs,
                "result": out.result,
                "checks": out.checks,
            });
            if !cli.global.no_timing {
                report["timing"] = json!({ "ms": start.elapsed().as_millis() as u64 });
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            let only_unresolved = out.checks.iter().all(|c| c["passed"] == json!(true) || c["unresolved"] == json!(true));
            ExitCode::from(match (passed, only_unresolved) {
                (true, _) => 0,
                (false, true) => 3,
                (false, false) => 2,
            })
        }
        Err(e) => {
            let report = json!({
                "schema": "v1",
                "command": name,
                "error": { "kind": error_kind(&e), "message": e.to_string() },
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::Resource(_) => "resource",
        _ => "domain",
    }
}
