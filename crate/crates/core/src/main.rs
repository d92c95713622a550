use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use interdep::assignment::{self, AssignmentPlan};
use interdep::exact::{self, ExactOptions};
use interdep::experiments::{self, io, ExperimentConfig, Instance};
use interdep::{poly, ColorCutResult, ColoredGraph, CutMode, Graph};

#[derive(Parser)]
#[command(
    name = "interdep",
    version,
    about = "Supply node connectivity of interdependent networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Random seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an Erdos-Renyi graph as a colored graph file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Random colors from this many; distinct colors when absent.
        #[arg(long)]
        colors: Option<usize>,
        /// Resample until connected.
        #[arg(long)]
        connected: bool,
    },
    /// Turn a dependency system into its colored graph.
    Transform { input: PathBuf },
    /// Minimum color cut of a colored graph or dependency system.
    Cut {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Exact)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Mode::Global)]
        mode: Mode,
        #[arg(long)]
        source: Option<usize>,
        #[arg(long)]
        target: Option<usize>,
        /// Budget for the exact solver; 0 disables it.
        #[arg(long, default_value_t = 60)]
        timeout_s: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Assign supplies to a graph read from a colored graph file.
    Assign {
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: AssignAlgo,
        /// Number of supplies (colors) for one-way assignments.
        #[arg(long, default_value_t = 1)]
        colors: usize,
        #[arg(long)]
        source: Option<usize>,
        #[arg(long)]
        target: Option<usize>,
        /// Second network for bidirectional assignments.
        #[arg(long)]
        other: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        ns1: usize,
        #[arg(long, default_value_t = 1)]
        ns2: usize,
    },
    /// Reduction gadgets.
    Gadget {
        #[command(subcommand)]
        kind: Gadget,
    },
    /// Interdependent random-network experiment.
    Table1 {
        #[arg(long, default_value_t = 50)]
        n1: usize,
        #[arg(long, default_value_t = 75)]
        n2: usize,
        #[arg(long, default_value_t = 0.1)]
        p1: f64,
        #[arg(long, default_value_t = 0.1)]
        p2: f64,
        #[arg(long, default_value_t = 3)]
        ns1: usize,
        #[arg(long, default_value_t = 2)]
        ns2: usize,
        #[arg(long, default_value_t = 10)]
        instances: usize,
        #[arg(long, default_value_t = 600)]
        timeout_s: u64,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Write the integer program of a color cut query in LP format.
    ExportMilp {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Global)]
        mode: Mode,
        #[arg(long)]
        source: Option<usize>,
        #[arg(long)]
        target: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    Poly,
    Qapprox,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    St,
    Global,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AssignAlgo {
    Path,
    Cds,
    Random,
    BidirCds,
    BidirRandom,
}

#[derive(Subcommand)]
enum Gadget {
    /// Ring of cliques for a vertex cover instance given as a colored graph
    /// file (colors ignored); the built-in seven-node example when absent.
    Vc { input: Option<PathBuf> },
    /// Disjoint paths for a hitting set instance.
    Hs {
        #[arg(long)]
        universe: usize,
        /// Sets as comma-separated elements, separated by `;`.
        #[arg(long)]
        sets: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(degraded) => ExitCode::from(if degraded { 2 } else { 0 }),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn workers(flag: Option<usize>) -> usize {
    std::env::var("INTERDEP_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .or(flag)
        .unwrap_or(1)
        .max(1)
}

fn emit(common: &Common, text: &str) -> interdep::Result<()> {
    match &common.out {
        Some(path) => io::write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn colored_input(path: &Path) -> interdep::Result<ColoredGraph> {
    Ok(match io::read_instance(path)? {
        Instance::Colored(cg) => cg,
        Instance::System(sys) => sys.transform().colored,
    })
}

fn graph_input(path: &Path) -> interdep::Result<Graph> {
    Ok(colored_input(path)?.graph().clone())
}

fn pair(
    mode: Mode,
    s: Option<usize>,
    t: Option<usize>,
) -> interdep::Result<Option<(usize, usize)>> {
    match (mode, s, t) {
        (Mode::Global, _, _) => Ok(None),
        (Mode::St, Some(s), Some(t)) => Ok(Some((s, t))),
        _ => Err(interdep::Error::Invalid(
            "--mode st needs --source and --target".into(),
        )),
    }
}

fn run(cli: Cli) -> interdep::Result<bool> {
    let common = &cli.common;
    match cli.command {
        Command::Gen {
            n,
            p,
            colors,
            connected,
        } => {
            let g = if connected {
                let (g, retries) =
                    experiments::gen_connected_erdos_renyi(n, p, common.seed, 10_000)?;
                eprintln!("rejected {retries} disconnected samples");
                g
            } else {
                experiments::gen_erdos_renyi(n, p, common.seed)?
            };
            let cg = match colors {
                Some(k) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
                    rng.set_stream(1);
                    let c = (0..n).map(|_| rng.gen_range(0..k.max(1))).collect();
                    ColoredGraph::new(g, c, k.max(1))?
                }
                None => ColoredGraph::with_distinct_colors(g),
            };
            emit(common, &io::write_colored_graph(&cg))?;
            Ok(false)
        }
        Command::Transform { input } => {
            let cg = colored_input(&input)?;
            emit(common, &io::write_colored_graph(&cg))?;
            Ok(false)
        }
        Command::Cut {
            input,
            algo,
            mode,
            source,
            target,
            timeout_s,
            workers: w,
        } => {
            let cg = colored_input(&input)?;
            let st = pair(mode, source, target)?;
            let cut_mode = match st {
                Some((s, t)) => CutMode::St { s, t },
                None => CutMode::Global,
            };
            let opts = ExactOptions {
                budget: (timeout_s > 0).then(|| Duration::from_secs(timeout_s)),
                workers: workers(w),
            };
            let r = match (algo, st) {
                (Algo::Exact, Some((s, t))) => exact::min_color_st_cut_exact(&cg, s, t, &opts)?,
                (Algo::Exact, None) => exact::min_color_cut_exact(&cg, &opts)?,
                (Algo::Poly, Some((s, t))) => poly::min_color_st_cut_connected(&cg, s, t)?,
                (Algo::Poly, None) => poly::min_color_cut_connected(&cg)?,
                (Algo::Qapprox, _) => poly::min_color_cut_qapprox(&cg, cut_mode)?,
            };
            emit(common, &render_cut(&r, common.format))?;
            Ok(r.lower_bound < r.value && r.method == interdep::Method::Bound)
        }
        Command::Assign {
            input,
            algo,
            colors,
            source,
            target,
            other,
            ns1,
            ns2,
        } => {
            let g = graph_input(&input)?;
            let seed = common.seed;
            let (text, bound) = match algo {
                AssignAlgo::Path => {
                    let (s, t) = pair(Mode::St, source, target)?.expect("pair checked");
                    let plan = assignment::assign_path_based(&g, s, t, colors)?;
                    (render_one_way(&g, &plan)?, plan.guaranteed_lower_bound)
                }
                AssignAlgo::Cds => {
                    let plan = assignment::assign_cds_based(&g, colors)?;
                    (render_one_way(&g, &plan)?, plan.guaranteed_lower_bound)
                }
                AssignAlgo::Random => {
                    let plan = assignment::assign_random(&g, colors, seed)?;
                    (render_one_way(&g, &plan)?, plan.guaranteed_lower_bound)
                }
                AssignAlgo::BidirCds | AssignAlgo::BidirRandom => {
                    let other = other.ok_or_else(|| {
                        interdep::Error::Invalid("bidirectional assignment needs --other".into())
                    })?;
                    let g2 = graph_input(&other)?;
                    let (p1, p2) = if algo == AssignAlgo::BidirCds {
                        assignment::assign_bidirectional_cds(&g, &g2, ns1, ns2)?
                    } else {
                        assignment::assign_bidirectional_random(&g, &g2, ns1, ns2, seed)?
                    };
                    let mut text = io::write_system(&p1.system(&g, Some(&g2))?);
                    text.push_str("# second network\n");
                    text.push_str(&io::write_system(&p2.system(&g2, Some(&g))?));
                    eprintln!(
                        "guaranteed lower bound for the second network: {}",
                        p2.guaranteed_lower_bound
                    );
                    (text, p1.guaranteed_lower_bound)
                }
            };
            eprintln!("guaranteed lower bound: {bound}");
            emit(common, &text)?;
            Ok(false)
        }
        Command::Gadget { kind } => {
            let text = match kind {
                Gadget::Vc { input } => {
                    let g = match input {
                        Some(p) => graph_input(&p)?,
                        None => experiments::worked_example_cover_graph(),
                    };
                    io::write_colored_graph(&experiments::gen_vertex_cover_gadget(&g)?)
                }
                Gadget::Hs { universe, sets } => {
                    let sets = parse_sets(&sets)?;
                    let (cg, s, t) = experiments::gen_hitting_set_gadget(universe, &sets)?;
                    eprintln!("source {s}, target {t}");
                    io::write_colored_graph(&cg)
                }
            };
            emit(common, &text)?;
            Ok(false)
        }
        Command::Table1 {
            n1,
            n2,
            p1,
            p2,
            ns1,
            ns2,
            instances,
            timeout_s,
            workers: w,
        } => {
            let config = ExperimentConfig {
                n1,
                n2,
                p1,
                p2,
                ns1,
                ns2,
                instances,
                seed: common.seed,
                budget: (timeout_s > 0).then(|| Duration::from_secs(timeout_s)),
                workers: workers(w),
            };
            let report = experiments::run_table1(&config)?;
            eprintln!("elapsed {:.1} s", report.elapsed.as_secs_f64());
            let text = match common.format {
                Format::Text => report.render_text(),
                Format::Csv => report.render_csv(),
            };
            emit(common, &text)?;
            Ok(report.timeouts > 0)
        }
        Command::ExportMilp {
            input,
            mode,
            source,
            target,
        } => {
            let cg = colored_input(&input)?;
            let st = pair(mode, source, target)?;
            let mut buf = Vec::new();
            exact::write_lp(&cg, st, &mut buf)?;
            emit(common, &String::from_utf8(buf).expect("LP text is ASCII"))?;
            Ok(false)
        }
    }
}

fn parse_sets(text: &str) -> interdep::Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|set| {
            set.split(',')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| {
                    e.parse()
                        .map_err(|_| interdep::Error::Invalid(format!("bad element `{e}`")))
                })
                .collect()
        })
        .collect()
}

fn render_one_way(g: &Graph, plan: &AssignmentPlan) -> interdep::Result<String> {
    Ok(io::write_system(&plan.system(g, None)?))
}

fn render_cut(r: &ColorCutResult, format: Format) -> String {
    let join = |xs: &[usize], sep: &str| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    };
    let q = r.q.map_or(String::new(), |q| q.to_string());
    match format {
        Format::Text => format!(
            "value {}\nlower_bound {}\nmethod {}\nq {}\ncolors {}\ncut_nodes {}\n",
            r.value,
            r.lower_bound,
            r.method.as_str(),
            if q.is_empty() { "-" } else { &q },
            join(&r.colors, " "),
            join(&r.witness_cut.nodes, " ")
        ),
        Format::Csv => format!(
            "value,lower_bound,method,q,colors,cut_nodes\n{},{},{},{},{},{}\n",
            r.value,
            r.lower_bound,
            r.method.as_str(),
            q,
            join(&r.colors, " "),
            join(&r.witness_cut.nodes, " ")
        ),
    }
}
