use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quasiline::composition::{detect_strip_decomposition, parse_composition, serialize_composition};
use quasiline::fractional::fractional_chromatic;
use quasiline::graph::io::{parse_graph, serialize_graph};
use quasiline::graph::{exact_chromatic, exact_clique_number, verify_colouring};
use quasiline::interval::recognize_circular_interval;
use quasiline::pipeline::{
    colour_quasi_line, gen_circular_interval, gen_composition, CircularParams, CompositionParams, Input, ReductionStep,
};
use quasiline::{Colouring, Error, Graph, Result, SearchLimits};

#[derive(Parser)]
#[command(name = "quasiline", version, about = "Colour quasi-line graphs with at most floor(chi_f + 3 sqrt(chi_f)) colours")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a quasi-line graph or a strip composition.
    Colour {
        file: PathBuf,
        /// Read the file as a strip composition.
        #[arg(long)]
        composition: bool,
        /// Node limit for every exact search.
        #[arg(long)]
        budget: Option<u64>,
        /// Write intermediate results into this directory.
        #[arg(long)]
        dump_stages: Option<PathBuf>,
    },
    /// Exact fractional chromatic number and an optimal basic solution.
    Chif {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check that a colouring is proper.
    Verify { graph: PathBuf, colouring: PathBuf },
    /// Exact chromatic or clique number.
    Oracle {
        which: Oracle,
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate a seeded instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Recover a circular interval representation or a strip composition.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Chi,
    Omega,
}

#[derive(Subcommand)]
enum GenKind {
    /// A composition of linear interval strips.
    Composition {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        h_vertices: usize,
        #[arg(long, default_value_t = 6)]
        h_edges: usize,
        #[arg(long, default_value_t = 3)]
        min_len: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 1)]
        min_end: usize,
        #[arg(long, default_value_t = 3)]
        max_end: usize,
        #[arg(long, default_value_t = 0.4)]
        trivial_fraction: f64,
        #[arg(long, default_value_t = 60)]
        max_vertices: usize,
        /// Emit the composed graph instead of the composition.
        #[arg(long)]
        graph: bool,
    },
    /// A circular interval graph; the representation follows as comments.
    Circular {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        min_len: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

fn limits(budget: Option<u64>) -> SearchLimits {
    budget.map_or_else(SearchLimits::default, |max_nodes| SearchLimits { max_nodes })
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Colour {
            file,
            composition,
            budget,
            dump_stages,
        } => {
            let text = read(&file)?;
            let input = if composition {
                Input::Composition(parse_composition(&text)?)
            } else {
                Input::Graph(parse_graph(&text)?)
            };
            let out = colour_quasi_line(&input, &limits(budget))?;
            if let Some(dir) = dump_stages {
                let mut stages = out.stages.clone();
                stages.push(("reductions".into(), steps_text(&out.steps)));
                write_stages(&dir, &stages)?;
            }
            eprintln!(
                "palette {} of t = {} (chi_f = {}, omega = {})",
                out.colouring.palette_size(),
                out.bounds.t,
                out.bounds.chi_f,
                out.bounds.omega
            );
            Ok(out.colouring.to_text())
        }
        Command::Chif { file, budget } => {
            let g = read_graph(&file)?;
            let fc = fractional_chromatic(&g, &limits(budget))?;
            Ok(format!("chi_f {}\n{}", fc.total(), fc.to_text()))
        }
        Command::Verify { graph, colouring } => {
            let g = read_graph(&graph)?;
            let c = Colouring::from_text(&read(&colouring)?)?;
            if c.len() != g.n() {
                return Err(Error::Input(format!("colouring has {} vertices, graph has {}", c.len(), g.n())));
            }
            if verify_colouring(&g, &c)? {
                Ok(format!("proper {}\n", c.palette_size()))
            } else {
                Err(Error::Input("colouring is not proper".into()))
            }
        }
        Command::Oracle { which, file, budget } => {
            let g = read_graph(&file)?;
            let lim = limits(budget);
            Ok(match which {
                Oracle::Chi => format!("chi {}\n", exact_chromatic(&g, None, &lim)?.0),
                Oracle::Omega => format!("omega {}\n", exact_clique_number(&g, &lim)?),
            })
        }
        Command::Gen { kind } => match kind {
            GenKind::Composition {
                seed,
                h_vertices,
                h_edges,
                min_len,
                max_len,
                min_end,
                max_end,
                trivial_fraction,
                max_vertices,
                graph,
            } => {
                let p = CompositionParams {
                    h_vertices,
                    h_edges,
                    strip_len: (min_len, max_len),
                    end_size: (min_end, max_end),
                    trivial_fraction,
                    max_vertices,
                };
                let c = gen_composition(seed, &p)?;
                Ok(if graph { serialize_graph(c.graph()) } else { serialize_composition(&c) })
            }
            GenKind::Circular { seed, n, min_len, max_len } => {
                let (g, rep) = gen_circular_interval(seed, &CircularParams { n, arc_len: (min_len, max_len) })?;
                let mut out = serialize_graph(&g);
                for line in rep.to_text().lines() {
                    out.push_str(&format!("c {line}\n"));
                }
                Ok(out)
            }
        },
        Command::Decompose { file, budget } => {
            let g = read_graph(&file)?;
            let lim = limits(budget);
            if let Some(rep) = recognize_circular_interval(&g, &lim)? {
                return Ok(format!("# circular interval\n{}", rep.to_text()));
            }
            match detect_strip_decomposition(&g, &lim) {
                Some(c) => Ok(serialize_composition(&c)),
                None => Err(Error::DecompositionRequired(
                    "no circular interval representation or strip composition found".into(),
                )),
            }
        }
    }
}

fn steps_text(steps: &[ReductionStep]) -> String {
    let list = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    for s in steps {
        match s {
            ReductionStep::LowDegree { vertex, neighbours } => {
                out.push_str(&format!("low-degree {} | {}\n", vertex + 1, list(neighbours)));
            }
            ReductionStep::CliqueCutset { cutset, parts } => {
                let parts: Vec<String> = parts.iter().map(|p| list(p)).collect();
                out.push_str(&format!("clique-cutset {} | {}\n", list(cutset), parts.join(" | ")));
            }
            ReductionStep::HomogeneousPair { pair, removed } => {
                let removed: Vec<String> = removed.iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
                out.push_str(&format!(
                    "homogeneous-pair {} | {} | {}\n",
                    list(&pair.a),
                    list(&pair.b),
                    removed.join(" ")
                ));
            }
        }
    }
    out
}

fn write_stages(dir: &Path, stages: &[(String, String)]) -> Result<()> {
    let io = |e: std::io::Error| Error::Input(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    for (i, (name, text)) in stages.iter().enumerate() {
        fs::write(dir.join(format!("{:02}-{name}.txt", i + 1)), text).map_err(io)?;
    }
    Ok(())
}
