use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use recon_minors::families::GeneralizedWheel;
use recon_minors::format::{named_graph, ModelFile};
use recon_minors::recon::shortest_sequence;
use recon_minors::{
    build_recon_graph, plan_clique, plan_genwheel, plan_k2, run_campaign, CampaignParams, EnumOptions, Error, Graph,
    HModel, ReconSequence, DEFAULT_BUDGET,
};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const PARSE: u8 = 2;
const BUDGET: u8 = 3;
const NOT_A_MINOR: u8 = 4;
const UNREACHABLE: u8 = 5;
const PRECONDITION: u8 = 6;

#[derive(Parser)]
#[command(name = "recon-minors", version, about = "Reconfiguration of H-models (minor embeddings)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Instance {
    /// Host graph: an edge-list file (`.g6` files hold graph6) or a family
    /// spec such as `wheel:5`.
    #[arg(short = 'g', long = "graph")]
    graph: Option<String>,
    /// Target graph: `k2`, `k3`, `kN`, a family spec, or an edge-list file.
    #[arg(short = 'H', long = "target")]
    target: Option<String>,
    /// Cap on visited models.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Auto,
    Bfs,
    K2,
    Clique,
    Genwheel,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a labeling is a model.
    Validate {
        #[command(flatten)]
        inst: Instance,
        #[arg(short = 'm', long = "model")]
        model: PathBuf,
    },
    /// Size, components, diameter and frozen models of the reconfiguration graph.
    Reconstats {
        #[command(flatten)]
        inst: Instance,
        /// Write the reconfiguration graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the summary as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Whether the reconfiguration graph is connected.
    Hostcheck {
        #[command(flatten)]
        inst: Instance,
    },
    /// Plan a reconfiguration sequence between two models.
    Plan {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Write the sequence here instead of standard output.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Replay a sequence file from a start model and print the end model.
    Replay {
        #[command(flatten)]
        inst: Instance,
        #[arg(short = 'm', long = "model")]
        model: PathBuf,
        #[arg(short = 's', long = "seq")]
        seq: PathBuf,
    },
    /// Run a verification campaign.
    Campaign {
        /// Campaign name; `list` prints the available ones.
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Largest host size for sweeps over small graphs.
        #[arg(long)]
        n_max: Option<usize>,
        /// Successful runs per planner in planner-fuzz.
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a generated graph as an edge list.
    Gen {
        /// `kN`, `wheel:K`, `cycle:N`, `path:N`, `star:K`, `c2:K`, `kb:P,Q`,
        /// `genwheel:l=L,m=M,n=N,part=SHAPE` or `rand3:n=N,seed=S`.
        spec: String,
        /// Print graph6 instead of an edge list.
        #[arg(long)]
        graph6: bool,
        /// Seed for random families given without one.
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. }
            | Error::BadParameter(_)
            | Error::ShapeMismatch { .. }
            | Error::LabelOutOfRange { .. }
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::EdgeExists(..)
            | Error::TooLarge(_)
            | Error::PartSizeMismatch(..)
            | Error::PartDisconnected(_) => PARSE,
            Error::StateSpaceExceeded { .. } => BUDGET,
            Error::NotAMinor => NOT_A_MINOR,
            Error::PreconditionFailed { .. }
            | Error::NotTwoConnected
            | Error::NotComplete
            | Error::SizeMismatch(_)
            | Error::NotAGeneralizedWheel(_) => PRECONDITION,
            _ => NEGATIVE,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| fail(NEGATIVE, format!("{}: {e}", path.display())))
}

/// A graph from an inline edge list, from a file (relative to `base`) if
/// one exists, otherwise from a name.
fn load_graph(arg: &str, base: Option<&Path>) -> Result<Graph, Failure> {
    if arg.trim().contains('\n') {
        return Ok(Graph::parse_edge_list(arg)?);
    }
    let path = match base {
        Some(dir) if Path::new(arg).is_relative() => dir.join(arg),
        _ => PathBuf::from(arg),
    };
    if path.is_file() {
        let text = read(&path)?;
        let g = if path.extension().is_some_and(|e| e == "g6") {
            Graph::from_graph6(text.trim())
        } else {
            Graph::parse_edge_list(&text)
        };
        return g.map_err(|e| fail(PARSE, format!("{}: {e}", path.display())));
    }
    named_graph(arg).map_err(|e| fail(PARSE, format!("{arg:?} is neither a file nor a graph name ({e})")))
}

/// Host and target from the flags, falling back to the ones named in a
/// model file.
fn resolve(inst: &Instance, file: Option<(&ModelFile, &Path)>) -> Result<(Graph, Graph), Failure> {
    let base = file.and_then(|(_, p)| p.parent());
    let pick = |flag: &Option<String>, inner: Option<&String>, what: &str| -> Result<Graph, Failure> {
        match (flag, inner) {
            (Some(s), _) => load_graph(s, None),
            (None, Some(s)) => load_graph(s, base),
            (None, None) => Err(fail(PARSE, format!("no {what} given"))),
        }
    };
    let host = pick(&inst.graph, file.and_then(|(m, _)| m.host.as_ref()), "host graph (-g)")?;
    let target = pick(&inst.target, file.and_then(|(m, _)| m.target.as_ref()), "target graph (-H)")?;
    Ok((host, target))
}

fn load_model(path: &Path) -> Result<ModelFile, Failure> {
    ModelFile::parse(&read(path)?).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))
}

fn opts(inst: &Instance) -> EnumOptions {
    EnumOptions { budget: inst.budget, ..Default::default() }
}

fn validate(inst: &Instance, model: &Path) -> Outcome {
    let file = load_model(model)?;
    let (g, h) = resolve(inst, Some((&file, model)))?;
    let m = HModel::new(&g, &h, file.labels)?;
    match m.validate() {
        Ok(()) => {
            println!("valid");
            Ok(OK)
        }
        Err(v) => {
            println!("invalid: {v}");
            Ok(NEGATIVE)
        }
    }
}

fn reconstats(inst: &Instance, dot: Option<&Path>, json: Option<&Path>) -> Outcome {
    let (g, h) = resolve(inst, None)?;
    let rg = build_recon_graph(&g, &h, opts(inst))?;
    let s = rg.summary();
    println!("nodes {}", s.nodes);
    println!("edges {}", s.edges);
    println!("components {}", s.components);
    println!("diameter {}", s.diameter);
    println!("frozen {}", s.frozen);
    if let Some(p) = dot {
        write(p, &rg.to_dot())?;
    }
    if let Some(p) = json {
        write(p, &serde_json::to_string_pretty(&s).expect("summaries serialize"))?;
    }
    Ok(OK)
}

fn hostcheck(inst: &Instance) -> Outcome {
    let (g, h) = resolve(inst, None)?;
    let rg = build_recon_graph(&g, &h, opts(inst))?;
    if rg.is_empty() {
        return Err(Error::NotAMinor.into());
    }
    if rg.is_connected() {
        println!("member: {} models, one component", rg.len());
        Ok(OK)
    } else {
        let mut sizes = rg.component_sizes();
        sizes.sort_unstable();
        let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
        println!("non-member: {} models in components of sizes {}", rg.len(), sizes.join(","));
        Ok(NEGATIVE)
    }
}

/// The constructive planner suited to the instance, if any.
fn auto_strategy(from: &HModel) -> Strategy {
    let (g, h) = (from.host(), from.target());
    if h.n() == 2 && h.is_complete() {
        Strategy::K2
    } else if h.is_complete() && g.is_complete() && g.n() > h.n() {
        Strategy::Clique
    } else if h.n() >= 3 && h.is_complete() && GeneralizedWheel::recognize(g, h.n() - 2).is_ok() {
        Strategy::Genwheel
    } else {
        Strategy::Bfs
    }
}

fn run_strategy<'g>(s: Strategy, from: &HModel<'g>, to: &HModel<'g>, budget: u64) -> recon_minors::Result<Option<ReconSequence<'g>>> {
    match s {
        Strategy::Bfs | Strategy::Auto => shortest_sequence(from, to, budget),
        Strategy::K2 => plan_k2(from, to).map(Some),
        Strategy::Clique => plan_clique(from, to).map(Some),
        Strategy::Genwheel => plan_genwheel(from, to).map(Some),
    }
}

fn plan(inst: &Instance, from: &Path, to: &Path, strategy: Strategy, out: Option<&Path>) -> Outcome {
    let (ff, tf) = (load_model(from)?, load_model(to)?);
    let (g, h) = resolve(inst, Some((&ff, from)))?;
    let a = HModel::new(&g, &h, ff.labels)?;
    let b = HModel::new(&g, &h, tf.labels)?;
    for m in [&a, &b] {
        m.validate().map_err(Error::InvalidModel)?;
    }
    let chosen = if strategy == Strategy::Auto { auto_strategy(&a) } else { strategy };
    let result = match run_strategy(chosen, &a, &b, inst.budget) {
        // A constructive planner whose hypotheses fail hands over to search.
        Err(e) if strategy == Strategy::Auto && Failure::from(e.clone()).code == PRECONDITION => {
            eprintln!("{e}; falling back to breadth-first search");
            shortest_sequence(&a, &b, inst.budget)
        }
        r => r,
    }?;
    let Some(seq) = result else {
        eprintln!("{b} is unreachable from {a}");
        return Ok(UNREACHABLE);
    };
    match out {
        Some(p) => write(p, &seq.to_text())?,
        None => print!("{}", seq.to_text()),
    }
    eprintln!("{} steps", seq.len());
    Ok(OK)
}

fn replay(inst: &Instance, model: &Path, seq: &Path) -> Outcome {
    let file = load_model(model)?;
    let (g, h) = resolve(inst, Some((&file, model)))?;
    let start = HModel::new(&g, &h, file.labels)?;
    let seq = ReconSequence::parse_text(start, &read(seq)?)?;
    match seq.replay() {
        Ok(end) => {
            println!("{end}");
            Ok(OK)
        }
        Err(e @ (Error::IllegalStep { .. } | Error::InvalidModel(_))) => {
            println!("rejected: {e}");
            Ok(NEGATIVE)
        }
        Err(e) => Err(e.into()),
    }
}

fn campaign(name: &str, params: CampaignParams, json: Option<&Path>) -> Outcome {
    if name == "list" {
        for c in recon_minors::CAMPAIGNS {
            println!("{c}");
        }
        return Ok(OK);
    }
    let report = run_campaign(name, &params)?;
    print!("{}", report.to_text());
    if let Some(p) = json {
        write(p, &report.to_json())?;
    }
    Ok(if report.passed() { OK } else { NEGATIVE })
}

fn gen(spec: &str, graph6: bool, seed: Option<u64>) -> Outcome {
    let spec = match seed {
        Some(s) if spec.starts_with("rand3:") && !spec.contains("seed=") => format!("{spec},seed={s}"),
        _ => spec.to_string(),
    };
    let g = named_graph(&spec)?;
    if graph6 {
        println!("{}", g.to_graph6());
    } else {
        print!("{}", g.to_edge_list());
    }
    Ok(OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { inst, model } => validate(inst, model),
        Command::Reconstats { inst, dot, json } => reconstats(inst, dot.as_deref(), json.as_deref()),
        Command::Hostcheck { inst } => hostcheck(inst),
        Command::Plan { inst, from, to, strategy, out } => plan(inst, from, to, *strategy, out.as_deref()),
        Command::Replay { inst, model, seq } => replay(inst, model, seq),
        Command::Campaign { name, seed, budget, n_max, runs, json } => {
            let params = CampaignParams { seed: *seed, budget: *budget, n_max: *n_max, runs: *runs };
            campaign(name, params, json.as_deref())
        }
        Command::Gen { spec, graph6, seed } => gen(spec, *graph6, *seed),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
