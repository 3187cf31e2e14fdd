//! `antimagic`: generate graphs, build and verify local antimagic labelings,
//! compute bounds and search small graphs.
//!
//! Exit status: 0 success, 1 a labeling or precondition fails a condition,
//! 2 I/O or parameter error, 3 search budget exhausted.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use antimagic::construct::{compose_lexi, expand_copies, expand_null_fiber, label_join_cycle_null};
use antimagic::format::{parse_graph, parse_labeling, write_certificate, write_graph, write_matrix};
use antimagic::graph::{generate, Family, Graph};
use antimagic::labeling::EdgeLabeling;
use antimagic::magic::{magic_rectangle, magic_square};
use antimagic::search::{
    chi_la_exact_with, chromatic_number, lexi_lower_bound, search_with_progress, SearchConfig,
    SearchOutcome, CHI_LA_EDGE_LIMIT,
};
use antimagic::Error;

#[derive(Parser, Debug)]
#[command(name = "antimagic", version, about = "Local antimagic labelings of graphs")]
struct Cli {
    /// Append the labeling matrix to certificates.
    #[arg(long, global = true)]
    emit_matrix: bool,

    /// Write the main artifact here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyName {
    Cycle,
    Null,
    Path,
    Complete,
    CompleteBipartite,
    Prism,
    Octahedron,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph from a named family.
    Gen {
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        /// First part size for complete-bipartite.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Expand a labeling to `p` disjoint copies (--p) or to the product
    /// with a null graph of order n (--n).
    Label {
        file: PathBuf,
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        p: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the verification report of a labeling file.
    Verify { file: PathBuf },
    /// Label the lexicographic product G[H] from labelings of G and H.
    Compose { g: PathBuf, h: PathBuf },
    /// 3-color the join of the cycle C_2m with the null graph O_2n.
    JoinLabel { m: u64, n: u64 },
    /// Lower bound on the chromatic number of G[H].
    Bounds { g: PathBuf, h: PathBuf },
    /// Backtracking search for a labeling with few colors.
    Search {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_colors: usize,
        #[arg(long)]
        require_parity: bool,
        #[arg(long, default_value_t = 10_000_000)]
        node_limit: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Exact local antimagic chromatic number of a small graph.
    Chila {
        graph: PathBuf,
        #[arg(long, default_value_t = u64::MAX)]
        node_limit: u64,
    },
    /// Print a magic square (--n) or an m×n magic rectangle (--m, --n).
    Dump {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
    },
}

/// An error that already carries its exit status.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn status_of(err: &anyhow::Error) -> u8 {
    if let Some(Exit(code, _)) = err.downcast_ref::<Exit>() {
        return *code;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::ConditionViolation { .. } | Error::ConstructionUnsound(_)) => 1,
        Some(Error::Budget { .. }) => 3,
        _ => 2,
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_labeling(path: &Path) -> anyhow::Result<EdgeLabeling> {
    let text = read(path)?;
    parse_labeling(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Graph files and labeling files are both accepted wherever a graph is.
fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read(path)?;
    match parse_graph(&text) {
        Ok(g) => Ok(g),
        Err(first) => match parse_labeling(&text) {
            Ok(l) => Ok(l.graph().clone()),
            Err(_) => Err(first).with_context(|| format!("parsing {}", path.display())),
        },
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn family(name: FamilyName, n: Option<usize>, m: Option<usize>) -> anyhow::Result<Family> {
    let need_n = || n.ok_or_else(|| anyhow!("--n is required for this family"));
    Ok(match name {
        FamilyName::Cycle => Family::Cycle(need_n()?),
        FamilyName::Null => Family::Null(need_n()?),
        FamilyName::Path => Family::Path(need_n()?),
        FamilyName::Complete => Family::Complete(need_n()?),
        FamilyName::CompleteBipartite => {
            Family::CompleteBipartite(m.ok_or_else(|| anyhow!("--m is required"))?, need_n()?)
        }
        FamilyName::Prism => Family::Prism(need_n()?),
        FamilyName::Octahedron => Family::Octahedron,
    })
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gen { family: name, n, m } => {
            let g = generate(family(name, n, m)?)?;
            emit(out, &write_graph(&g))
        }
        Command::Label { file, p, n } => {
            let l = load_labeling(&file)?;
            let cert = match (p, n) {
                (Some(p), _) => expand_copies(&l, p)?,
                (None, Some(n)) => expand_null_fiber(&l, n)?,
                (None, None) => bail!("one of --p or --n is required"),
            };
            emit(out, &write_certificate(&cert.labeling, cli.emit_matrix))
        }
        Command::Verify { file } => {
            let report = load_labeling(&file)?.verify();
            emit(out, &report.to_key_values())?;
            if report.is_injective && report.is_local_antimagic {
                Ok(())
            } else {
                Err(Exit(1, "labeling is not local antimagic".into()).into())
            }
        }
        Command::Compose { g, h } => {
            let cert = compose_lexi(&load_labeling(&g)?, &load_labeling(&h)?)?;
            emit(out, &write_certificate(&cert.labeling, cli.emit_matrix))
        }
        Command::JoinLabel { m, n } => {
            let cert = label_join_cycle_null(m, n)?;
            emit(out, &write_certificate(&cert.labeling, cli.emit_matrix))
        }
        Command::Bounds { g, h } => {
            let report = lexi_lower_bound(&load_graph(&g)?, &load_graph(&h)?)?;
            emit(out, &report.to_key_values())
        }
        Command::Search { graph, max_colors, require_parity, node_limit, seed, workers } => {
            let g = load_graph(&graph)?;
            let cfg = SearchConfig::new(max_colors)
                .parity(require_parity)
                .node_limit(node_limit)
                .seed(seed)
                .workers(workers);
            let r = search_with_progress(&g, &cfg, &mut |p| {
                eprintln!("nodes={} best_colors={}", p.nodes, p.best_colors);
            });
            let tag = format!("result={}\n", r.outcome.tag());
            match &r.outcome {
                SearchOutcome::Found(l) => {
                    let cert = write_certificate(l, cli.emit_matrix);
                    match out {
                        Some(_) => emit(out, &cert)?,
                        None => print!("{cert}"),
                    }
                }
                SearchOutcome::ProvenNone => {}
                SearchOutcome::Budget => {
                    print!("{tag}");
                    return Err(Exit(3, format!("no labeling within {} nodes", r.nodes)).into());
                }
            }
            print!("{tag}");
            Ok(())
        }
        Command::Chila { graph, node_limit } => {
            let g = load_graph(&graph)?;
            let chi = chromatic_number(&g)?;
            let res = chi_la_exact_with(&g, CHI_LA_EDGE_LIMIT, node_limit, &mut |p| {
                eprintln!("nodes={} best_colors={}", p.nodes, p.best_colors);
            })?;
            if out.is_some() {
                emit(out, &write_certificate(&res.witness, cli.emit_matrix))?;
            }
            print!("chi_la={}\nchromatic_number={chi}\nstatus=proven\nnodes={}\n", res.value, res.nodes);
            Ok(())
        }
        Command::Dump { m, n } => {
            let omega = match m {
                Some(m) => magic_rectangle(m, n)?,
                None => magic_square(n)?,
            };
            emit(out, &write_matrix(&omega))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(status_of(&err))
        }
    }
}
