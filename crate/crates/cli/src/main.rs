//! Command-line front end for the `w6free` library.
//!
//! Exit status: 0 when a predicate holds (or the command succeeded), 1 when
//! it fails, 2 on usage or input errors. `W6_WORKERS` sets the number of
//! worker threads.

mod format;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use w6free::chain_lab::{
    chain_decompose, chain_search, enumerate_splits, generate_cyclically_4conn_cubic,
    is_square_of_cycle, root_graph_cubic, verify_theorem,
};
use w6free::{
    catalog, catalog_lookup, construct, emit_graph6, find_hamiltonian_cycle, find_minor_model,
    has_topological_minor, is_k_connected, vertex_connectivity, Family, Graph,
};

use input::{parse_pattern, Source};

#[derive(Parser, Debug)]
#[command(
    name = "w6free",
    version,
    about = "Minors, connectivity and the W6-minor-free catalog"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// 4-connectivity, W6-minor-freeness and catalog membership.
    Classify {
        #[command(flatten)]
        source: Source,
    },
    /// Minor containment with a branch-set certificate.
    Minor {
        #[command(flatten)]
        source: Source,
        /// Pattern graph: a name (w6, k5, k3,3, petersen, ...) or graph6.
        #[arg(long, default_value = "w6")]
        pattern: String,
        /// Test topological containment instead.
        #[arg(long)]
        topological: bool,
    },
    /// Vertex connectivity with a minimum separator.
    Connectivity {
        #[command(flatten)]
        source: Source,
        /// Exit 0 only if the graph is k-connected.
        #[arg(long)]
        k: Option<usize>,
    },
    /// A Hamiltonian cycle, or "none".
    Hamilton {
        #[command(flatten)]
        source: Source,
    },
    /// Vertex splits, one per isomorphism class.
    Splits {
        #[command(flatten)]
        source: Source,
        /// Keep only 4-connected splits.
        #[arg(long = "4conn")]
        four_conn: bool,
        /// Keep only splits without a W6 minor.
        #[arg(long)]
        w6_free: bool,
    },
    /// A contraction chain of 4-connected graphs.
    Chain {
        #[command(flatten)]
        source: Source,
        /// Search for a chain ending at this square of a cycle instead of
        /// contracting greedily.
        #[arg(long, value_enum)]
        target: Option<Target>,
    },
    /// Print a graph.
    Show {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The fourteen 4-connected graphs without a W6 minor.
    Catalog {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cyclically 4-connected cubic graphs generated by handle additions.
    GenerateCubic {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Exhaustively compare the W6-minor-free 4-connected graphs with the
    /// catalog.
    VerifyTheorem {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    C25,
    C26,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Graph6,
    Dot,
}

const TRUE: u8 = 0;
const FALSE: u8 = 1;
const USAGE: u8 = 2;

/// Output lines and status for one input graph.
struct Outcome {
    lines: Vec<String>,
    status: u8,
}

impl Outcome {
    fn line(line: String, holds: bool) -> Outcome {
        Outcome {
            lines: vec![line],
            status: if holds { TRUE } else { FALSE },
        }
    }
}

fn w6() -> Graph {
    construct(Family::Wheel(6)).expect("W6 is in range")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(g: &Graph) -> Outcome {
    let four = is_k_connected(g, 4);
    let mut line = format!("4-connected: {}; ", yes_no(four));
    match find_minor_model(g, &w6()) {
        Some(m) => {
            line += &format!(
                "W6-minor-free: no; certificate: {}",
                format::compact_model(&m)
            );
            Outcome::line(line, true)
        }
        None if four => match catalog_lookup(g) {
            Some(name) => {
                Outcome::line(line + &format!("W6-minor-free: yes; catalog: {name}"), true)
            }
            None => Outcome::line(
                line + "W6-minor-free: yes; not in catalog — theorem violated",
                false,
            ),
        },
        None => Outcome::line(line + "W6-minor-free: yes", true),
    }
}

fn minor(g: &Graph, h: &Graph, topological: bool, batch: bool) -> Outcome {
    if topological {
        let found = has_topological_minor(g, h);
        return Outcome::line(yes_no(found).to_string(), found);
    }
    match find_minor_model(g, h) {
        Some(m) if batch => Outcome::line(format!("yes {}", format::compact_model(&m)), true),
        Some(m) => {
            let mut lines = vec!["yes".to_string()];
            lines.extend(m.to_string().lines().map(str::to_owned));
            Outcome {
                lines,
                status: TRUE,
            }
        }
        None => Outcome::line("no".into(), false),
    }
}

fn connectivity(g: &Graph, k: Option<usize>) -> Outcome {
    let (kappa, cert) = vertex_connectivity(g);
    let detail = match cert {
        Some(c) => {
            let cut: Vec<String> = c.cut.iter().map(|v| v.to_string()).collect();
            format!("cut: {}", cut.join(" "))
        }
        None => "complete".into(),
    };
    Outcome::line(
        format!("connectivity: {kappa}; {detail}"),
        k.is_none_or(|k| kappa >= k),
    )
}

fn hamilton(g: &Graph) -> Outcome {
    match find_hamiltonian_cycle(g) {
        Some(c) => {
            let vs: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
            Outcome::line(vs.join(" "), true)
        }
        None => Outcome::line("none".into(), false),
    }
}

fn show(g: &Graph, format: Format) -> Outcome {
    let text = match format {
        Format::Text => format::text(g),
        Format::Graph6 => emit_graph6(g),
        Format::Dot => format::dot(g, "G"),
    };
    Outcome {
        lines: text.lines().map(str::to_owned).collect(),
        status: TRUE,
    }
}

fn splits(g: &Graph, four_conn: bool, w6_free: bool) -> Outcome {
    let w6 = w6();
    let classes = enumerate_splits(g, four_conn);
    let kept: Vec<String> = classes
        .par_iter()
        .filter(|s| !w6_free || find_minor_model(&s.graph, &w6).is_none())
        .map(|s| {
            let side = |vs: &[usize]| {
                vs.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            let name = catalog_lookup(&s.graph)
                .map(|n| format!(" ({n})"))
                .unwrap_or_default();
            format!(
                "{} split {} into {{{}}} | {{{}}}{name}",
                emit_graph6(&s.graph),
                s.spec.vertex,
                side(&s.spec.x_side),
                side(&s.spec.y_side)
            )
        })
        .collect();
    Outcome {
        lines: kept,
        status: TRUE,
    }
}

fn describe_end(g: &Graph) -> String {
    if let Some(n) = is_square_of_cycle(g) {
        format!("square of C{n}")
    } else if let Some(root) = root_graph_cubic(g) {
        format!("line graph of {}", emit_graph6(&root))
    } else {
        emit_graph6(g)
    }
}

fn chain(g: &Graph, target: Option<Target>) -> Result<Outcome, w6free::Error> {
    let found = match target {
        None => Some(chain_decompose(g)?),
        Some(t) => {
            let n = if matches!(t, Target::C25) { 5 } else { 6 };
            chain_search(g, &construct(Family::Square(n))?)?
        }
    };
    let Some(c) = found else {
        return Ok(Outcome::line("none".into(), false));
    };
    let mut lines = Vec::new();
    for (i, h) in c.graphs.iter().enumerate() {
        match c.contracted.get(i) {
            Some(e) => lines.push(format!("{} contract {e}", emit_graph6(h))),
            None => lines.push(format!("{} ends at {}", emit_graph6(h), describe_end(h))),
        }
    }
    Ok(Outcome {
        lines,
        status: TRUE,
    })
}

fn per_graph(
    command: &Command,
    g: &Graph,
    batch: bool,
    pattern: Option<&Graph>,
) -> Result<Outcome, w6free::Error> {
    Ok(match command {
        Command::Classify { .. } => classify(g),
        Command::Minor { topological, .. } => {
            minor(g, pattern.expect("pattern parsed"), *topological, batch)
        }
        Command::Connectivity { k, .. } => connectivity(g, *k),
        Command::Hamilton { .. } => hamilton(g),
        Command::Show { format, .. } => show(g, *format),
        Command::Splits {
            four_conn, w6_free, ..
        } => splits(g, *four_conn, *w6_free),
        Command::Chain { target, .. } => chain(g, *target)?,
        _ => unreachable!("not a per-graph command"),
    })
}

fn source_of(command: &Command) -> Option<&Source> {
    match command {
        Command::Classify { source }
        | Command::Minor { source, .. }
        | Command::Connectivity { source, .. }
        | Command::Hamilton { source }
        | Command::Show { source, .. }
        | Command::Splits { source, .. }
        | Command::Chain { source, .. } => Some(source),
        _ => None,
    }
}

fn run_graphs(command: &Command, source: &Source) -> u8 {
    let pattern = match command {
        Command::Minor { pattern, .. } => match parse_pattern(pattern) {
            Ok(h) => Some(h),
            Err(e) => {
                eprintln!("error: pattern {pattern:?}: {e}");
                return USAGE;
            }
        },
        _ => None,
    };
    let parsed = match source.read() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    let batch = source.is_batch();
    let results: Vec<Result<Outcome, String>> = parsed
        .par_iter()
        .map(|p| match p {
            Ok(g) => per_graph(command, g, batch, pattern.as_ref()).map_err(|e| e.to_string()),
            Err(e) => Err(e.to_string()),
        })
        .collect();
    let mut status = TRUE;
    for r in results {
        match r {
            Ok(o) => {
                for l in o.lines {
                    println!("{l}");
                }
                status = status.max(o.status);
            }
            Err(e) => {
                if batch {
                    println!("error: {e}");
                }
                eprintln!("error: {e}");
                status = USAGE;
            }
        }
    }
    status
}

fn run(command: Command) -> u8 {
    if let Some(source) = source_of(&command) {
        return run_graphs(&command, source);
    }
    match command {
        Command::Catalog { format } => {
            for e in catalog() {
                match format {
                    Format::Graph6 => println!("{}", emit_graph6(&e.graph)),
                    Format::Text => println!(
                        "{} {} {}",
                        e.name,
                        emit_graph6(&e.graph),
                        format::text(&e.graph)
                    ),
                    Format::Dot => println!("{}", format::dot(&e.graph, e.name)),
                }
            }
            TRUE
        }
        Command::GenerateCubic { max_n } => match generate_cyclically_4conn_cubic(max_n) {
            Ok(gs) => {
                for g in gs {
                    println!("{}", emit_graph6(&g));
                }
                TRUE
            }
            Err(e) => {
                eprintln!("error: {e}");
                USAGE
            }
        },
        Command::VerifyTheorem { max_n, report } => match verify_theorem(max_n) {
            Ok(r) => {
                let text = r.to_string();
                print!("{text}");
                if let Some(path) = report {
                    if let Err(e) = fs::write(&path, &text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return USAGE;
                    }
                }
                if r.holds() {
                    TRUE
                } else {
                    FALSE
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                USAGE
            }
        },
        _ => unreachable!("per-graph commands handled above"),
    }
}

fn configure_workers() {
    let Ok(value) = std::env::var("W6_WORKERS") else {
        return;
    };
    match value.parse::<usize>() {
        Ok(n) if n > 0 => {
            // only fails if a pool already exists, which cannot happen here
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => eprintln!("warning: ignoring W6_WORKERS={value:?}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers();
    ExitCode::from(run(cli.command))
}
