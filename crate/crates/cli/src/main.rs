//! Command-line front end: analyze graphs, construct extremal families,
//! apply leaf relocations, enumerate trees, build spanning certificates and
//! run the verification harness.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
//! counterexample.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use treebound_core::centrality;
use treebound_core::enumerate::{free_trees, MAX_ENUM_ORDER};
use treebound_core::extremal::{Family, FamilySpec};
use treebound_core::spanning::{
    graph_bounds_check, max_degree_spanning_tree, radius_preserving_spanning_tree,
    status_preserving_spanning_tree, SpanningCertificate,
};
use treebound_core::transform::{
    maximize_status, minimize_status, predict_centroid, relocate_leaf, status_delta,
    RelocationMove, TraceEntry,
};
use treebound_core::verify::{reports_to_json, verify, verify_all, TheoremId, VerifyOptions};
use treebound_core::{Graph, Tree};

#[derive(Parser)]
#[command(name = "treebound", version, about = "Status and radius bounds on trees and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Balanced,
    Comet,
    Scomet,
    Cstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Relocate,
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, ValueEnum)]
enum PreserveArg {
    Radius,
    Status,
    Degree,
}

#[derive(Args)]
struct OutputArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the centrality report of a graph as JSON.
    Analyze {
        /// Edge-list file: one "u v" pair per line, '#' comments allowed.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Build a member of an extremal family and emit it.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Family member selector: balanced last-level layout, comet hub
        /// offset, or the attachment point of the extra leaf.
        #[arg(long)]
        variant: Option<usize>,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Apply one leaf relocation or run a status optimizer, with trace.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Leaf to relocate (relocate only).
        #[arg(long)]
        leaf: Option<usize>,
        /// Vertex the leaf is reattached to (relocate only).
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Stream all non-isomorphic trees of one order, or count per order.
    Enumerate {
        /// Stream the trees of this order, one per line with edges separated
        /// by semicolons.
        #[arg(long)]
        n: Option<usize>,
        /// Print "n count" lines for every order up to this one.
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Emit a spanning tree certified to preserve radius, status or maximum
    /// degree, plus the graph-versus-bounds report.
    Spanning {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        preserve: PreserveArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Run the verification harness and emit machine-readable reports.
    Verify {
        /// Theorem name (e.g. StatusLower, prop1, radius-upper) or "all".
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads; results never depend on it.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutputArg,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: &OutputArg, text: &str) -> Result<(), Box<dyn std::error::Error>> {
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("usage error: {message}");
    ExitCode::from(2)
}

fn read_graph(path: &PathBuf) -> Result<Graph, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    Ok(Graph::parse_edge_list(&text)?)
}

fn read_tree(path: &PathBuf) -> Result<Tree, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    Ok(Tree::parse_edge_list(&text)?)
}

fn graph_text(g: &Graph, format: Format) -> String {
    match format {
        Format::Dot => g.to_dot(),
        _ => g.to_edge_list(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Analyze { input, format, out } => {
            if format != Format::Json {
                return Ok(usage_error("analyze only emits json"));
            }
            let g = read_graph(&input)?;
            let report = centrality::report(&g);
            emit(&out, &format!("{}\n", serde_json::to_string_pretty(&report)?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family, n, k, variant, format, out } => {
            if format == Format::Json {
                return Ok(usage_error("construct emits edges or dot"));
            }
            let family = match family {
                FamilyArg::Balanced => Family::Balanced,
                FamilyArg::Comet => Family::Comet,
                FamilyArg::Scomet => Family::SComet,
                FamilyArg::Cstar => Family::CStar,
            };
            let tree = FamilySpec { family, n, k, variant }.build()?;
            emit(&out, &graph_text(&tree, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform { input, op, leaf, target, format, out } => {
            let tree = read_tree(&input)?;
            match op {
                TransformOp::Relocate => {
                    let (Some(b), Some(u)) = (leaf, target) else {
                        return Ok(usage_error("relocate needs --leaf and --target"));
                    };
                    let m = RelocationMove { b, u };
                    let x = centrality::centroid(&tree)[0];
                    let prediction = predict_centroid(&tree, x, m)?;
                    let delta = status_delta(&tree, x, m)?;
                    let after = relocate_leaf(&tree, m)?;
                    match format {
                        Format::Json => {
                            let step =
                                TraceEntry { b, u, delta_status: delta, case_tag: prediction.case };
                            emit(&out, &format!("{}\n", transform_json(&after, &[step])?))?;
                        }
                        _ => emit(&out, &graph_text(&after, format))?,
                    }
                }
                TransformOp::Minimize | TransformOp::Maximize => {
                    if leaf.is_some() || target.is_some() {
                        return Ok(usage_error("--leaf/--target only apply to relocate"));
                    }
                    let (result, trace) = match op {
                        TransformOp::Minimize => minimize_status(&tree)?,
                        _ => maximize_status(&tree)?,
                    };
                    match format {
                        Format::Json => {
                            emit(&out, &format!("{}\n", transform_json(&result, &trace)?))?
                        }
                        _ => emit(&out, &graph_text(&result, format))?,
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, max_n, out } => match (n, max_n) {
            (Some(n), None) => {
                let mut text = String::new();
                for t in free_trees(n)? {
                    let line: Vec<String> =
                        t.edges().iter().map(|&(u, v)| format!("{u} {v}")).collect();
                    text.push_str(&line.join(";"));
                    text.push('\n');
                }
                emit(&out, &text)?;
                Ok(ExitCode::SUCCESS)
            }
            (None, Some(max_n)) => {
                if max_n > MAX_ENUM_ORDER {
                    return Ok(usage_error(&format!("--max-n is capped at {MAX_ENUM_ORDER}")));
                }
                let mut text = String::new();
                for n in 1..=max_n {
                    text.push_str(&format!("{n} {}\n", free_trees(n)?.count()));
                }
                emit(&out, &text)?;
                Ok(ExitCode::SUCCESS)
            }
            _ => Ok(usage_error("enumerate takes exactly one of --n or --max-n")),
        },
        Command::Spanning { input, preserve, format, out } => {
            let g = read_graph(&input)?;
            let cert = match preserve {
                PreserveArg::Radius => radius_preserving_spanning_tree(&g),
                PreserveArg::Status => status_preserving_spanning_tree(&g),
                PreserveArg::Degree => max_degree_spanning_tree(&g),
            };
            match format {
                Format::Json => emit(&out, &format!("{}\n", certificate_json(&g, &cert)?))?,
                _ => emit(&out, &graph_text(&cert.tree, format))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { theorem, max_n, seed, jobs, out } => {
            let opts = VerifyOptions {
                n_max: max_n,
                seed,
                jobs: jobs.unwrap_or_else(|| {
                    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
                }),
            };
            if opts.jobs == 0 {
                return Ok(usage_error("--jobs must be at least 1"));
            }
            let reports = if theorem.eq_ignore_ascii_case("all") {
                verify_all(&opts)?
            } else {
                match theorem.parse::<TheoremId>() {
                    Ok(id) => vec![verify(id, &opts)?],
                    Err(msg) => return Ok(usage_error(&msg)),
                }
            };
            for report in &reports {
                eprintln!(
                    "{}: {} ({} trees, {} moves, {} ms)",
                    report.theorem.name(),
                    if report.passed() { "PASS" } else { "FAIL" },
                    report.trees_examined,
                    report.moves_examined,
                    report.elapsed_ms,
                );
            }
            let text = if reports.len() == 1 {
                format!("{}\n", reports[0].to_json_pretty(false))
            } else {
                format!("{}\n", reports_to_json(&reports, &opts, false))
            };
            emit(&out, &text)?;
            if reports.iter().all(|r| r.passed()) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
    }
}

fn transform_json(
    result: &Tree,
    trace: &[TraceEntry],
) -> Result<String, Box<dyn std::error::Error>> {
    #[derive(serde::Serialize)]
    struct TransformJson<'a> {
        n: usize,
        status: usize,
        edges: &'a [(usize, usize)],
        trace: &'a [TraceEntry],
    }
    Ok(serde_json::to_string_pretty(&TransformJson {
        n: result.n(),
        status: centrality::graph_status(result).0,
        edges: result.edges(),
        trace,
    })?)
}

fn certificate_json(
    g: &Graph,
    cert: &SpanningCertificate,
) -> Result<String, Box<dyn std::error::Error>> {
    #[derive(serde::Serialize)]
    struct CertificateJson<'a> {
        preserved: treebound_core::spanning::Preserved,
        witness_vertex: Option<usize>,
        n: usize,
        edges: &'a [(usize, usize)],
        graph_radius: usize,
        tree_radius: usize,
        graph_status: usize,
        tree_status: usize,
        bounds: Option<treebound_core::spanning::GraphBoundsReport>,
    }
    Ok(serde_json::to_string_pretty(&CertificateJson {
        preserved: cert.preserved,
        witness_vertex: cert.witness_vertex,
        n: cert.tree.n(),
        edges: cert.tree.edges(),
        graph_radius: centrality::radius(g).0,
        tree_radius: centrality::radius(&cert.tree).0,
        graph_status: centrality::graph_status(g).0,
        tree_status: centrality::graph_status(&cert.tree).0,
        bounds: graph_bounds_check(g).ok(),
    })?)
}
