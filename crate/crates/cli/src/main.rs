//! `gk`: prime graphs, cocliques and factored orders of finite simple groups,
//! plus the verification ledger for E6(3) and 2E6(3).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gk_core::catalog::{order, parse_group, parse_group_verbose, pi, GroupId};
use gk_core::coclique::{max_coclique, max_coclique_containing};
use gk_core::gkgraph::{encoded_graph, export, parse_graph, rule_graph, GkGraph, GraphFormat};
use gk_core::ledger::{render, run_ledger, Epsilon, ReportFormat};
use gk_core::search::{find, Constraint, SearchBounds};
use num_bigint::BigUint;

#[derive(Parser)]
#[command(
    name = "gk",
    version,
    about = "Gruenberg-Kegel prime graphs of finite simple groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factored group order, `p^e * p^e * ...` with ascending primes.
    Order { group: String },
    /// Prime divisors of the group order, comma-separated.
    Pi { group: String },
    /// Prime graph (encoded for E6(3)/2E6(3), rule-based for Alt(n) and L(2,q)).
    Graph {
        group: String,
        #[arg(long, default_value = "dot")]
        format: GraphFormat,
    },
    /// Maximum coclique of a prime graph.
    Coclique {
        #[arg(required_unless_present = "graph_file", conflicts_with = "graph_file")]
        group: Option<String>,
        /// Read the graph from a dot, json or edge-list file.
        #[arg(long)]
        graph_file: Option<PathBuf>,
        /// Only cocliques containing this prime.
        #[arg(long)]
        containing: Option<u64>,
    },
    /// Bounded search for simple groups satisfying order constraints.
    Search {
        #[arg(long)]
        largest_prime: u64,
        /// Required divisor, e.g. `2^37` or `19*37*73`.
        #[arg(long)]
        divisible: Option<String>,
        /// Allowed primes: those dividing the order of this group.
        #[arg(long)]
        pi_subset: Option<String>,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Brute-force element orders (Alt(n), n <= 30; L(2,p), p <= 101).
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Replay the recognition argument as a ledger of checks.
    Verify {
        #[arg(long)]
        epsilon: Epsilon,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Element orders, comma-separated.
    Spectrum { group: String },
}

#[derive(clap::Args)]
struct BoundsArgs {
    /// Bounds config file of `key = value` lines.
    #[arg(long, env = "GK_BOUNDS")]
    bounds: Option<PathBuf>,
    /// Override one bounds key, e.g. `--set q_max.L2=1000`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

impl BoundsArgs {
    fn load(&self) -> Result<SearchBounds, Failure> {
        let mut bounds = SearchBounds::default();
        if let Some(path) = &self.bounds {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            bounds.apply_config(&text)?;
        }
        for kv in &self.overrides {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("expected KEY=VALUE, got {kv:?}")))?;
            bounds.set(k, v)?;
        }
        bounds.validate()?;
        Ok(bounds)
    }
}

enum Failure {
    /// Bad input or I/O; exit 2.
    Usage(String),
    /// A verification check failed; exit 1.
    Checks(usize),
}

impl From<gk_core::Error> for Failure {
    fn from(e: gk_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn group(spec: &str) -> Result<GroupId, Failure> {
    let parsed = parse_group_verbose(spec)?;
    if let Some(note) = &parsed.note {
        eprintln!("note: {note}");
    }
    Ok(parsed.id)
}

fn graph_of(g: &GroupId) -> Result<GkGraph, Failure> {
    match encoded_graph(g) {
        Ok(graph) => Ok(graph),
        Err(_) => Ok(rule_graph(g)?),
    }
}

/// Parses `a^b * c * ...` into a number.
fn parse_number(text: &str) -> Result<BigUint, Failure> {
    let bad = || Failure::Usage(format!("not a number: {text:?}"));
    let mut n = BigUint::from(1u32);
    for factor in text.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let base: BigUint = base.parse().map_err(|_| bad())?;
        n *= base.pow(exp);
    }
    Ok(n)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Order { group: spec } => println!("{}", order(&group(&spec)?)?),
        Command::Pi { group: spec } => println!("{}", join(pi(&group(&spec)?)?)),
        Command::Graph {
            group: spec,
            format,
        } => print!("{}", export(&graph_of(&group(&spec)?)?, format)),
        Command::Coclique {
            group: spec,
            graph_file,
            containing,
        } => {
            let graph = match (spec, graph_file) {
                (_, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    parse_graph(&text)?
                }
                (Some(spec), None) => graph_of(&group(&spec)?)?,
                (None, None) => {
                    return Err(Failure::Usage("a group or --graph-file is required".into()))
                }
            };
            let result = match containing {
                Some(v) => max_coclique_containing(&graph, v)?,
                None => max_coclique(&graph)?,
            };
            println!("size {}", result.size);
            println!("witness {}", join(&result.witness));
        }
        Command::Search {
            largest_prime,
            divisible,
            pi_subset,
            bounds,
        } => {
            let constraint = Constraint {
                largest_prime_equals: Some(largest_prime),
                required_divisor: divisible.as_deref().map(parse_number).transpose()?,
                pi_subset_of: match pi_subset {
                    Some(spec) => Some(
                        pi(&parse_group(&spec)?)?
                            .iter()
                            .map(|p| {
                                u64::try_from(p)
                                    .map_err(|_| Failure::Usage(format!("prime {p} too large")))
                            })
                            .collect::<Result<_, _>>()?,
                    ),
                    None => None,
                },
            };
            for g in find(&bounds.load()?, &constraint)? {
                println!("{g}");
            }
        }
        Command::Oracle {
            command: OracleCommand::Spectrum { group: spec },
        } => {
            let s = gk_core::oracle::spectrum(&group(&spec)?)?;
            println!("{}", join(&s.orders));
        }
        Command::Verify {
            epsilon,
            json,
            bounds,
        } => {
            let ledger = run_ledger(epsilon, &bounds.load()?);
            let format = if json {
                ReportFormat::Json
            } else {
                ReportFormat::Text
            };
            print!("{}", render(&ledger, format));
            if ledger.summary.fail > 0 {
                return Err(Failure::Checks(ledger.summary.fail));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(n)) => {
            eprintln!("{n} check(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
