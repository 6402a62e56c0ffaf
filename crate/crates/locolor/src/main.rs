use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use locolor::claims::run_claims;
use locolor::enumerate::smallest_four_chromatic_locally_bipartite;
use locolor::format::{emit_dot, emit_graph, Format};
use locolor::source::{catalog_graph, resolve};
use locolor_core::catalog::{named, GraphId};
use locolor_core::colouring::{maximum_clique, optimal_colouring};
use locolor_core::hom::{find_hom, find_injective_hom};
use locolor_core::local::{classify_pair, locally_partite_violation, PairClass};

/// Exact algorithms and claim checks for locally colourable graphs.
///
/// Graph sources are `@catalog:NAME`, a file path (graph6 or adjacency
/// text), or `-` for graph6 on stdin. Exit status: 0 success, 1 a
/// verification failed, 2 usage or input error.
#[derive(Parser)]
#[command(name = "locolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the claim registry.
    Verify {
        /// Glob over claim ids, e.g. 'diagram.*'.
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Print the chromatic number and an optimal colouring.
    Chi { source: String },
    /// Print the clique number and a maximum clique.
    Clique { source: String },
    /// Test a-local b-partiteness.
    Local { a: usize, b: usize, source: String },
    /// Classify the pair u, v at clique level b.
    Pair { u: usize, v: usize, b: usize, source: String },
    /// Find a homomorphism src -> dst; prints "none" if there is none.
    Hom {
        src: String,
        dst: String,
        #[arg(long)]
        injective: bool,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
    /// Write a graph in graph6, adjacency text or DOT.
    Export {
        name: String,
        #[arg(long, default_value = "graph6")]
        format: String,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show { name: String },
}

#[derive(Subcommand)]
enum EnumerateCommand {
    /// Smallest 4-chromatic locally bipartite graphs.
    Smallest {
        #[arg(long)]
        max_n: usize,
    },
}

/// A bare catalog name is accepted wherever a source is.
fn load(source: &str) -> anyhow::Result<locolor_core::Graph> {
    if let Ok((_, g)) = catalog_graph(source) {
        if !std::path::Path::new(source).exists() {
            return Ok(g);
        }
    }
    Ok(resolve(source)?)
}

fn list(v: impl IntoIterator<Item = usize>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Verify {
            filter,
            seed,
            report,
            output,
        } => {
            let r = run_claims(&filter, seed)?;
            match report {
                ReportFormat::Json => writeln!(out, "{}", r.to_json())?,
                ReportFormat::Text => write!(out, "{}", r.to_text())?,
            }
            if let Some(path) = output {
                std::fs::write(&path, r.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            return Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Chi { source } => {
            let g = load(&source)?;
            let c = optimal_colouring(&g);
            writeln!(out, "{}", c.colour_count())?;
            writeln!(out, "colouring: {}", list(c.colours().iter().copied()))?;
        }
        Command::Clique { source } => {
            let g = load(&source)?;
            let k = maximum_clique(&g);
            writeln!(out, "{}", k.len())?;
            writeln!(out, "clique: {}", list(k.iter()))?;
        }
        Command::Local { a, b, source } => {
            let g = load(&source)?;
            match locally_partite_violation(&g, a, b) {
                None => writeln!(out, "yes")?,
                Some(q) => {
                    writeln!(out, "no")?;
                    writeln!(out, "violating clique: {}", list(q.iter()))?;
                }
            }
        }
        Command::Pair { u, v, b, source } => {
            let g = load(&source)?;
            let class = classify_pair(&g, u, v, b)?;
            match class {
                PairClass::Adjacent => writeln!(out, "adjacent")?,
                PairClass::BDense(c) => writeln!(out, "dense ({c} common neighbours)")?,
                PairClass::BSparse(c) => writeln!(out, "sparse ({c} common neighbours)")?,
            }
        }
        Command::Hom { src, dst, injective } => {
            let (g, h) = (load(&src)?, load(&dst)?);
            let f = if injective { find_injective_hom(&g, &h) } else { find_hom(&g, &h) };
            match f {
                Some(f) => writeln!(out, "{}", list(f.map().iter().copied()))?,
                None => writeln!(out, "none")?,
            }
        }
        Command::Catalog(CatalogCommand::List) => {
            for id in GraphId::ZOO {
                let g = named(id)?.graph;
                writeln!(out, "{id:<12} n={:<3} m={:<3} {}", g.n(), g.edge_count(), emit_graph(&g, Format::Graph6))?;
            }
        }
        Command::Catalog(CatalogCommand::Show { name }) => {
            let (id, _) = catalog_graph(&name)?;
            let ng = named(id)?;
            let g = &ng.graph;
            writeln!(out, "name: {id}")?;
            writeln!(out, "vertices: {}", g.n())?;
            writeln!(out, "edges: {}", g.edge_count())?;
            writeln!(out, "graph6: {}", emit_graph(g, Format::Graph6))?;
            let labels: Vec<String> = ng.labels.iter().map(|(l, v)| format!("{v}={l}")).collect();
            writeln!(out, "labels: {}", labels.join(" "))?;
            for (u, v) in g.edges() {
                writeln!(out, "{} {}", ng.label(u).unwrap_or("?"), ng.label(v).unwrap_or("?"))?;
            }
        }
        Command::Enumerate(EnumerateCommand::Smallest { max_n }) => {
            let r = smallest_four_chromatic_locally_bipartite(max_n)?;
            for l in &r.levels {
                writeln!(
                    out,
                    "n={} graphs={} core={} locally_bipartite={} witnesses={}",
                    l.n, l.graphs, l.core, l.locally_bipartite, l.witnesses
                )?;
            }
            if !r.smallest_classes.is_empty() {
                writeln!(out, "classes: {}", r.smallest_classes.join(" "))?;
            }
            if let Some(w) = &r.moser_witness {
                writeln!(out, "moser witness: {w}")?;
            }
            writeln!(out, "{}", if r.consistent { "consistent" } else { "INCONSISTENT" })?;
            return Ok(if r.consistent { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Export { name, format } => {
            let format: Format = format.parse()?;
            let g = load(&name)?;
            let text = match format {
                Format::Dot => emit_dot(&g, name.trim_start_matches("@catalog:")),
                f => emit_graph(&g, f),
            };
            write!(out, "{text}")?;
            if format == Format::Graph6 {
                writeln!(out)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = locolor::apply_vertex_limit_from_env().and_then(|()| run(cli));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

