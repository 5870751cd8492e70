use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use scds::certify;
use scds::chain;
use scds::classes::{self, EliminationOrdering, TreeKind, TreeWitness};
use scds::exact::{ExactSolver, DEFAULT_BUDGET};
use scds::generate;
use scds::io;
use scds::reductions::{self, ReductionArtifact};
use scds::{approx, Error, Graph, VertexSet};

#[derive(Parser, Debug)]
#[command(name = "scds", version, about = "Secure connected domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a problem exactly.
    Solve {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Run the two-stage SCDS approximation.
    Approx {
        #[arg(long)]
        input: PathBuf,
    },
    /// Certify a vertex set.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex indices.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value_t = Property::Scds)]
        problem: Property,
    },
    /// Build a hardness gadget; writes `<out>.graph` and `<out>.json`.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        what: GenKind,
    },
    /// Validate a structural witness.
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Exact and approximate SCDS sizes on seeded random connected graphs, as CSV.
    Bench {
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Ds,
    Cds,
    Scds,
    Vc,
    Setcover,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Ds,
    Cds,
    Scds,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReduceKind {
    Setcover,
    StarConvex,
    CombConvex,
    ChordalBipartite,
    InapproxGeneral,
    InapproxBipartite,
    Apx,
    Gc,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random chain graph with left side `p` and right side `q`.
    Chain {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random connected graph: random tree plus independent extra edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// GC graph built from an input graph.
    Gc {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    /// Perfect elimination ordering.
    Peo {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        order: String,
    },
    /// Doubly perfect elimination ordering.
    Dpeo {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        order: String,
    },
    /// Tree-convexity of the input against a tree on one side.
    TreeConvex {
        #[arg(long)]
        input: PathBuf,
        /// Graph file on the same vertex count whose edges form the tree.
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
    },
    /// Chordless cycles of length 6..=max_len.
    ChordalBipartite {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Chain ordering and the four-vertex construction.
    Chain {
        #[arg(long)]
        input: PathBuf,
    },
}

enum Failed {
    Negative(String),
    Code(u8, String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => 2,
            Error::BudgetExceeded { .. } => 3,
            _ => 4,
        };
        Failed::Code(code, e.to_string())
    }
}

type CmdResult = Result<String, Failed>;

fn read(path: &Path) -> Result<String, Failed> {
    fs::read_to_string(path).map_err(|e| Failed::Code(2, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failed> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn write(path: &Path, contents: &str) -> Result<(), Failed> {
    fs::write(path, contents).map_err(|e| Failed::Code(4, format!("{}: {e}", path.display())))
}

fn parse_list(text: &str) -> Result<Vec<usize>, Failed> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failed::Code(2, format!("bad vertex index {s:?}")))
        })
        .collect()
}

/// Round-trips through `Value` so every object, tagged enums included,
/// prints with sorted keys.
fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string(&v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct Solved<'a, W: Serialize> {
    explored: u128,
    problem: &'a str,
    size: usize,
    witness: W,
}

fn cmd_solve(problem: Problem, input: &Path, budget: u128) -> CmdResult {
    let solver = ExactSolver::with_budget(budget);
    let text = read(input)?;
    let (name, r) = match problem {
        Problem::Setcover => {
            let file = io::parse_set_cover(&text)?;
            let r = solver.min_set_cover(&file.instance)?;
            return Ok(json(&Solved {
                explored: r.explored,
                problem: "setcover",
                size: r.size,
                witness: r.witness,
            }));
        }
        Problem::Ds => ("ds", solver.min_ds(&io::parse_graph(&text)?)?),
        Problem::Cds => ("cds", solver.min_cds(&io::parse_graph(&text)?)?),
        Problem::Scds => ("scds", solver.gamma_sc(&io::parse_graph(&text)?)?),
        Problem::Vc => ("vc", solver.min_vertex_cover(&io::parse_graph(&text)?)?),
    };
    Ok(json(&Solved {
        explored: r.explored,
        problem: name,
        size: r.size,
        witness: r.witness,
    }))
}

fn cmd_verify(input: &Path, set: &str, property: Property) -> CmdResult {
    let g = read_graph(input)?;
    let s = VertexSet::from_vertices(g.n(), parse_list(set)?)?;
    let failure = match property {
        Property::Ds => certify::ds_failure(&g, &s),
        Property::Cds => certify::cds_failure(&g, &s),
        Property::Scds => certify::scds_failure(&g, &s),
    };
    if let Some(f) = failure {
        return Err(Failed::Negative(json(&f)));
    }
    match property {
        Property::Scds => {
            let cert = certify::is_scds(&g, &s).expect("no failure means secure");
            Ok(json(&cert))
        }
        _ => {
            #[derive(Serialize)]
            struct Plain<'a> {
                set: &'a VertexSet,
            }
            Ok(json(&Plain { set: &s }))
        }
    }
}

fn build_gadget(kind: ReduceKind, text: &str) -> Result<ReductionArtifact, Failed> {
    if let ReduceKind::Setcover = kind {
        let file = io::parse_set_cover(text)?;
        return Ok(reductions::setcover_to_doubly_chordal(&file.instance)?);
    }
    let g = io::parse_graph(text)?;
    let parts = || g.bipartition().ok_or(Error::NotBipartite);
    Ok(match kind {
        ReduceKind::Setcover => unreachable!(),
        ReduceKind::StarConvex => reductions::dom_to_star_convex(&g, &parts()?)?,
        ReduceKind::CombConvex => reductions::dom_to_comb_convex(&g, &parts()?)?,
        ReduceKind::ChordalBipartite => reductions::vc_to_chordal_bipartite(&g)?,
        ReduceKind::InapproxGeneral => reductions::dom_to_mscds_general(&g)?,
        ReduceKind::InapproxBipartite => reductions::dom_to_mscds_bipartite(&g, &parts()?)?,
        ReduceKind::Apx => reductions::dom3_to_mscds_apx(&g)?,
        ReduceKind::Gc => reductions::gc_graph(&g)?,
    })
}

fn with_extension(out: &Path, ext: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn cmd_reduce(kind: ReduceKind, input: &Path, out: &Path) -> CmdResult {
    let art = build_gadget(kind, &read(input)?)?;
    let graph_path = with_extension(out, ".graph");
    let json_path = with_extension(out, ".json");
    write(&graph_path, &io::write_graph(&art.graph))?;
    write(&json_path, &json(&art.sidecar()))?;
    Ok(format!(
        "{} {} {}\n",
        art.layout.name(),
        graph_path.display(),
        json_path.display()
    ))
}

fn emit_graph(g: &Graph, out: Option<&Path>) -> CmdResult {
    let text = io::write_graph(g);
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_gen(what: &GenKind) -> CmdResult {
    match what {
        GenKind::Chain { p, q, seed, out } => {
            if *p == 0 || *q == 0 {
                return Err(Error::Precondition("both sides need at least one vertex".into()).into());
            }
            emit_graph(&generate::random_chain(*p, *q, *seed), out.as_deref())
        }
        GenKind::Random { n, p, seed, out } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::Precondition(format!("edge probability {p} outside [0, 1]")).into());
            }
            emit_graph(&generate::random_connected(*n, *p, *seed), out.as_deref())
        }
        GenKind::Gc { input, out } => {
            let art = reductions::gc_graph(&read_graph(input)?)?;
            emit_graph(&art.graph, out.as_deref())
        }
    }
}

#[derive(Serialize)]
struct Verdict {
    valid: bool,
}

fn cmd_check(what: &CheckKind) -> CmdResult {
    let verdict = |valid: bool| {
        if valid {
            Ok(json(&Verdict { valid }))
        } else {
            Err(Failed::Negative(json(&Verdict { valid })))
        }
    };
    match what {
        CheckKind::Peo { input, order } | CheckKind::Dpeo { input, order } => {
            let g = read_graph(input)?;
            let ord = EliminationOrdering::new(g.n(), parse_list(order)?)
                .map_err(|e| Failed::Code(2, e.to_string()))?;
            let ok = match what {
                CheckKind::Peo { .. } => classes::check_peo(&g, &ord)?,
                _ => classes::check_dpeo(&g, &ord)?,
            };
            verdict(ok)
        }
        CheckKind::TreeConvex { input, tree, side } => {
            let g = read_graph(input)?;
            let t = read_graph(tree)?;
            if t.n() != g.n() {
                return Err(Error::Invalid(format!("tree has {} vertices, graph has {}", t.n(), g.n())).into());
            }
            let mut parts = g.bipartition().ok_or(Error::NotBipartite)?;
            if let Side::Right = side {
                parts = parts.swap_sides();
            }
            let edges: Vec<(usize, usize)> = t.edges().collect();
            let w = TreeWitness::new(g.n(), parts.left.clone(), &edges, TreeKind::General)?;
            verdict(classes::validate_tree_convex(&g, &parts, &w)?)
        }
        CheckKind::ChordalBipartite { input, max_len } => {
            let g = read_graph(input)?;
            let v = classes::chordal_bipartite_check_bounded(&g, *max_len)?;
            if v.passed() {
                Ok(json(&v))
            } else {
                Err(Failed::Negative(json(&v)))
            }
        }
        CheckKind::Chain { input } => {
            let g = read_graph(input)?;
            let parts = g.bipartition().ok_or(Error::NotBipartite)?;
            let Some(ord) = chain::chain_ordering(&g, &parts) else {
                return verdict(false);
            };
            #[derive(Serialize)]
            struct ChainCheck {
                ordering: chain::ChainOrdering,
                set: VertexSet,
                valid: bool,
            }
            let set = chain::chain_construction_scds(&g, &ord)?;
            Ok(json(&ChainCheck {
                ordering: ord,
                set,
                valid: true,
            }))
        }
    }
}

#[derive(Clone, Debug)]
struct BenchRow {
    seed: u64,
    n: usize,
    m: usize,
    delta: usize,
    gamma_sc: Option<usize>,
    approx_size: usize,
    bound: usize,
}

fn bench_row(seed: u64, n: usize, p: f64, solver: &ExactSolver) -> Result<BenchRow, Error> {
    let g = generate::random_connected(n, p, seed);
    let approx = approx::approx_scds(&g)?;
    let gamma_sc = match solver.gamma_sc(&g) {
        Ok(r) => Some(r.size),
        Err(Error::BudgetExceeded { .. } | Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(BenchRow {
        seed,
        n: g.n(),
        m: g.m(),
        delta: g.max_degree(),
        gamma_sc,
        approx_size: approx.d_sc.len(),
        bound: approx.bound,
    })
}

fn cmd_bench(count: u64, n: usize, p: f64, seed: u64, threads: usize, budget: u128) -> CmdResult {
    if n == 0 || !(0.0..=1.0).contains(&p) || threads == 0 {
        return Err(Error::Precondition("need n ≥ 1, p in [0, 1] and at least one thread".into()).into());
    }
    let solver = ExactSolver::with_budget(budget);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failed::Code(4, e.to_string()))?;
    let mut rows = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| bench_row(seed + i, n, p, &solver))
            .collect::<Result<Vec<_>, _>>()
    })?;
    rows.sort_by_key(|r| r.seed);
    let mut out = String::from("seed,n,m,delta,gamma_sc,approx_size,bound\n");
    for r in rows {
        let gamma = r.gamma_sc.map(|g| g.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.seed, r.n, r.m, r.delta, gamma, r.approx_size, r.bound
        ));
    }
    Ok(out)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Solve { problem, input, budget } => cmd_solve(problem, &input, budget),
        Command::Approx { input } => {
            let g = read_graph(&input)?;
            Ok(json(&approx::approx_scds(&g)?))
        }
        Command::Verify { input, set, problem } => cmd_verify(&input, &set, problem),
        Command::Reduce { kind, input, out } => cmd_reduce(kind, &input, &out),
        Command::Gen { what } => cmd_gen(&what),
        Command::Check { what } => cmd_check(&what),
        Command::Bench {
            count,
            n,
            p,
            seed,
            threads,
            budget,
        } => cmd_bench(count, n, p, seed, threads, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(cli) {
        Ok(text) => {
            let _ = stdout.lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failed::Negative(text)) => {
            let _ = stdout.lock().write_all(text.as_bytes());
            ExitCode::from(1)
        }
        Err(Failed::Code(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
