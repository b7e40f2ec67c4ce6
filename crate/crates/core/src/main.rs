//! Command-line front end for the enumerator.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 input not chordal,
//! 3 parse error, 4 check mismatch.

use chordal_mds::clique_tree::{CliqueTree, TreeError};
use chordal_mds::enumerate::{self, profile_delays_with_tree};
use chordal_mds::generators::{random_chordal, sat_gadget, split_double, CnfFormula};
use chordal_mds::graph::BRUTE_FORCE_LIMIT;
use chordal_mds::io::{parse_graph, parse_tree, write_graph};
use chordal_mds::{Graph, VertexSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeSet;
use std::io::{self, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "chordal-mds",
    version,
    about = "Minimal dominating sets of chordal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every minimal dominating set, one per line.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Stop after this many solutions.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value = "lines")]
        format: Format,
    },
    /// Print the number of minimal dominating sets.
    Count {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the enumerator with brute force (at most 20 vertices).
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time the gaps between outputs and print them as JSON.
    Bench {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for standard input.
    #[arg(required_unless_present = "inline", conflicts_with = "inline")]
    graph: Option<PathBuf>,
    /// Graph text given inline, with `;` separating lines.
    #[arg(long)]
    inline: Option<String>,
    /// Explicit clique tree file to use instead of the computed one.
    #[arg(long)]
    tree: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenKind {
    /// Random chordal graph.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduction graph of a DIMACS CNF formula: writes `<out>.graph` and
    /// `<out>.tree` and prints S and X.
    Gadget {
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Split graph of a graph file.
    Split {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Ndjson,
}

#[derive(Serialize)]
struct BenchReport {
    outputs: u64,
    max_gap_ns: u128,
    median_gap_ns: u128,
    p95_gap_ns: u128,
    pre_gap_ns: u128,
    post_gap_ns: u128,
}

/// A failure mapped to its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: 1,
            message: message.to_string(),
        }
    }

    fn parse(message: impl ToString) -> Self {
        Self {
            code: 3,
            message: message.to_string(),
        }
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::NotChordal { witness } => Self {
                code: 2,
                message: match witness {
                    Some(cycle) => format!("graph is not chordal: chordless cycle {cycle:?}"),
                    None => "graph is not chordal".into(),
                },
            },
            other => Self::parse(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("chordal-mds: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        io::read_to_string(io::stdin()).map_err(|e| Failure::usage(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

fn write_text(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("stdout: {e}"))),
    }
}

/// Loads the graph and either the supplied or a computed clique tree.
fn load(input: &InputArgs) -> Result<(Graph, CliqueTree), Failure> {
    let text = match (&input.graph, &input.inline) {
        (_, Some(inline)) => inline.replace(';', "\n"),
        (Some(path), None) => read_text(path)?,
        (None, None) => return Err(Failure::usage("no graph given")),
    };
    let g = parse_graph(&text).map_err(Failure::parse)?;
    let t = match &input.tree {
        Some(path) => parse_tree(&read_text(path)?, &g).map_err(Failure::parse)?,
        None => CliqueTree::build(&g)?,
    };
    Ok((g, t))
}

fn format_set(d: &VertexSet, format: Format) -> String {
    match format {
        Format::Lines => d
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        Format::Ndjson => serde_json::json!({ "d": d.to_vec() }).to_string(),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            input,
            limit,
            format,
        } => {
            let (g, t) = load(&input)?;
            let mut out = io::stdout().lock();
            let mut emitted = 0u64;
            let mut failure = None;
            let _ = enumerate::enum_with_tree(&g, &t, &mut |d| {
                let line = format_set(d, format);
                if let Err(e) = writeln!(out, "{line}").and_then(|()| out.flush()) {
                    if e.kind() != io::ErrorKind::BrokenPipe {
                        failure = Some(Failure::usage(format!("stdout: {e}")));
                    }
                    return ControlFlow::Break(());
                }
                emitted += 1;
                if limit.is_some_and(|l| emitted >= l) {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            failure.map_or(Ok(()), Err)
        }
        Command::Count { input } => {
            let (g, t) = load(&input)?;
            let mut count = 0u64;
            let _ = enumerate::enum_with_tree(&g, &t, &mut |_| {
                count += 1;
                ControlFlow::Continue(())
            });
            println!("{count}");
            Ok(())
        }
        Command::Check { input } => check(&input),
        Command::Gen { kind } => generate(kind),
        Command::Bench { input, limit } => {
            let (g, t) = load(&input)?;
            let p = profile_delays_with_tree(&g, &t, limit);
            let report = BenchReport {
                outputs: p.outputs,
                max_gap_ns: p.max_gap().as_nanos(),
                median_gap_ns: p.median_gap().as_nanos(),
                p95_gap_ns: p.p95_gap().as_nanos(),
                pre_gap_ns: p.pre_gap().as_nanos(),
                post_gap_ns: p.post_gap().as_nanos(),
            };
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
            Ok(())
        }
    }
}

/// Enumerator versus brute force; prints `OK` or the smallest discrepancy.
fn check(input: &InputArgs) -> Result<(), Failure> {
    let (g, t) = load(input)?;
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Failure::usage(format!(
            "check is limited to {BRUTE_FORCE_LIMIT} vertices, graph has {n}"
        )));
    }
    let mut seen = BTreeSet::new();
    let mut duplicates = Vec::new();
    let _ = enumerate::enum_with_tree(&g, &t, &mut |d| {
        if !seen.insert(d.clone()) {
            duplicates.push(d.clone());
        }
        ControlFlow::Continue(())
    });
    let expected: BTreeSet<VertexSet> = g
        .brute_force_minimal_dominating_sets()
        .expect("size checked above")
        .into_iter()
        .collect();
    let by_size = |a: &&VertexSet, b: &&VertexSet| a.len().cmp(&b.len()).then(a.cmp(b));
    let missing = expected.difference(&seen).min_by(by_size);
    let extra = seen.difference(&expected).min_by(by_size);
    let show = |d: &VertexSet| format_set(d, Format::Lines);
    let report = if let Some(d) = missing {
        format!("missing: {}", show(d))
    } else if let Some(d) = extra {
        format!("extra: {}", show(d))
    } else if let Some(d) = duplicates.iter().min_by(|a, b| by_size(a, b)) {
        format!("duplicate: {}", show(d))
    } else {
        println!("OK");
        return Ok(());
    };
    println!("{report}");
    Err(Failure {
        code: 4,
        message: String::new(),
    })
}

fn generate(kind: GenKind) -> Result<(), Failure> {
    match kind {
        GenKind::Random {
            vertices,
            density,
            seed,
            out,
        } => write_text(
            out.as_deref(),
            &write_graph(&random_chordal(vertices, density, seed)),
        ),
        GenKind::Split { graph, out } => {
            let g = parse_graph(&read_text(&graph)?).map_err(Failure::parse)?;
            write_text(out.as_deref(), &write_graph(&split_double(&g).0))
        }
        GenKind::Gadget { cnf, out } => {
            let f = CnfFormula::from_dimacs(&read_text(&cnf)?).map_err(Failure::parse)?;
            let gadget =
                sat_gadget(&f).map_err(|e| Failure::usage(format!("gadget construction: {e}")))?;
            let with_ext = |ext: &str| {
                let mut name = out.clone().into_os_string();
                name.push(ext);
                PathBuf::from(name)
            };
            write_text(Some(&with_ext(".graph")), &write_graph(&gadget.graph))?;
            write_text(Some(&with_ext(".tree")), &gadget.tree.to_text())?;
            println!("S: {}", format_set(&gadget.s_set, Format::Lines));
            println!("X: {}", format_set(&gadget.x_set, Format::Lines));
            Ok(())
        }
    }
}
