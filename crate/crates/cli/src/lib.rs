//! The `arl` command line. [`run`] does all the work and returns what the
//! binary should print, so tests can drive it without spawning processes.
//!
//! Exit codes: 0 on success, 2 for usage or input errors, 3 when a solver
//! limit (edge cap, node budget, construction size) stops the run.

mod record;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use arl_core::reductions::{
    audit_reduced_coloring, extract_independent_set, mis_to_3partite, mis_to_pk, sat_to_precolored, Annotation, Cnf,
    ReducedMisInstance, ReductionError,
};
use arl_core::{
    ar_exact, ar_precolored, bipartite_star, carnit, find_rainbow_path, greedy_bounded_degree, parse_graph,
    write_graph, ApproxError, Bipartition, EdgeColoring, Graph, GraphFile, PrecoloredInstance, SearchLimits,
    SolveError, SolveResult, SolveStatus, TreeError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use record::{coloring_map, ResultRecord, Stats};

/// Environment variable that sets the search node budget when `--node-budget`
/// is not given.
pub const NODE_BUDGET_ENV: &str = "ARL_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "arl", version, about = "Anti-Ramsey numbers of paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact ar(G, P_k) by exhaustive search.
    Exact {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Include the optimal coloring in the record.
        #[arg(long)]
        emit_coloring: bool,
        graph: PathBuf,
    },
    /// Exact optimum over extensions of the tokens already in the file.
    Precolored {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
        graph: PathBuf,
    },
    /// ar(T, P_3) of a forest.
    Tree { graph: PathBuf },
    /// P_3-free coloring by an approximation algorithm.
    Approx {
        #[arg(long, value_enum)]
        method: Method,
        graph: PathBuf,
    },
    /// Build a hardness instance and its annotation sidecar.
    Reduce {
        #[command(subcommand)]
        kind: Reduce,
    },
    /// Check a fully colored graph for rainbow paths of length k.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        graph: PathBuf,
    },
    /// Recover an independent set from a coloring of a reduced instance.
    ExtractIs { annotation: PathBuf, graph: PathBuf },
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Most free edges the search accepts.
    #[arg(long, default_value_t = SearchLimits::default().max_uncolored_edges)]
    max_edges: usize,
    /// Search on several threads.
    #[arg(long)]
    parallel: bool,
    /// Thread count for --parallel (defaults to the available cores).
    #[arg(long, requires = "parallel")]
    workers: Option<usize>,
    /// Stop after this many search nodes and report the best coloring found.
    #[arg(long)]
    node_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Greedy,
    Bipartite,
}

#[derive(Debug, Subcommand)]
enum Reduce {
    /// 3-CNF in DIMACS to a precolored P_3 instance.
    Sat {
        cnf: PathBuf,
        /// Output prefix; writes <prefix>.graph and <prefix>.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Independent set to P_k-free coloring, for odd k >= 3.
    Mis {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Independent set to P_3-free coloring of a 3-partite graph.
    Mis3 {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad input; nothing on stdout.
    Input(String),
    /// A limit stopped the run; the record explains what is known.
    Limit(String, Box<ResultRecord>),
}

type Handled = Result<ResultRecord, Failure>;

/// Parses `args` (without the program name) and runs the subcommand.
/// `env_budget` is the value of [`NODE_BUDGET_ENV`], if set.
pub fn run<I, S>(args: I, env_budget: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("arl".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let record = ResultRecord::new(args);
    let handled = match cli.command {
        Command::Exact {
            k,
            search,
            emit_coloring,
            graph,
        } => search_limits(&search, env_budget).and_then(|limits| exact(record, k, &limits, emit_coloring, &graph)),
        Command::Precolored { k, search, graph } => {
            search_limits(&search, env_budget).and_then(|limits| precolored(record, k, &limits, &graph))
        }
        Command::Tree { graph } => tree(record, &graph),
        Command::Approx { method, graph } => approx(record, method, &graph),
        Command::Reduce { kind } => reduce(record, kind),
        Command::Verify { k, graph } => verify(record, k as usize, &graph),
        Command::ExtractIs { annotation, graph } => extract(record, &annotation, &graph),
    };
    match handled {
        Ok(record) => Outcome {
            code: 0,
            stdout: record.to_json(),
            stderr: String::new(),
        },
        Err(Failure::Input(message)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
        Err(Failure::Limit(message, record)) => Outcome {
            code: 3,
            stdout: record.to_json(),
            stderr: format!("error: {message}\n"),
        },
    }
}

fn search_limits(args: &SearchArgs, env_budget: Option<&str>) -> Result<SearchLimits, Failure> {
    let node_budget = match (args.node_budget, env_budget) {
        (Some(b), _) => Some(b),
        (None, Some(text)) => Some(
            text.trim()
                .parse()
                .map_err(|_| Failure::Input(format!("{NODE_BUDGET_ENV}={text:?} is not a node count")))?,
        ),
        (None, None) => None,
    };
    Ok(SearchLimits {
        max_uncolored_edges: args.max_edges,
        node_budget,
        parallel: args.parallel,
        workers: args.workers,
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Re-verifies `witness` and attaches it. Returns false if verification
/// failed, in which case nothing is attached.
fn attach_witness(record: &mut ResultRecord, g: &Graph, k: usize, witness: &EdgeColoring, emit: bool) -> bool {
    let ok = witness.is_total_on(g) && find_rainbow_path(g, witness, k).is_none();
    record.valid = ok;
    if !ok {
        record.warnings.push("witness failed re-verification and was withheld".into());
    } else if emit {
        record.coloring = Some(coloring_map(witness));
    }
    ok
}

fn solved(mut record: ResultRecord, g: &Graph, k: usize, r: SolveResult, emit: bool, parallel: bool) -> Handled {
    record.value = Some(r.value);
    record.stats = Stats {
        status: Some(r.status),
        // node counts depend on thread timing when parallel
        search: (!parallel).then_some(r.stats),
    };
    if !attach_witness(&mut record, g, k, &r.witness, emit) {
        record.value = None;
        return Err(Failure::Limit("internal verification failure".into(), Box::new(record)));
    }
    if r.status == SolveStatus::BudgetExhausted {
        record
            .warnings
            .push("node budget exhausted; value is the best coloring found, not a proven optimum".into());
        return Err(Failure::Limit("node budget exhausted".into(), Box::new(record)));
    }
    Ok(record)
}

fn solve_error(mut record: ResultRecord, e: SolveError) -> Handled {
    match e {
        SolveError::InstanceTooLarge { .. } | SolveError::BudgetExhausted => {
            record.warnings.push(e.to_string());
            Err(Failure::Limit(e.to_string(), Box::new(record)))
        }
        SolveError::Infeasible => {
            record.valid = false;
            record.warnings.push(e.to_string());
            Ok(record)
        }
        SolveError::InvalidPathLength(_) | SolveError::ColoringLength { .. } => Err(Failure::Input(e.to_string())),
    }
}

fn exact(mut record: ResultRecord, k: usize, limits: &SearchLimits, emit: bool, path: &Path) -> Handled {
    let file = read_graph(path)?;
    if file.coloring.colored_edges().next().is_some() {
        record
            .warnings
            .push("edge tokens in the input are ignored; use `precolored` to keep them".into());
    }
    match ar_exact(&file.graph, k, limits) {
        Ok(r) => solved(record, &file.graph, k, r, emit, limits.parallel),
        Err(e) => solve_error(record, e),
    }
}

fn precolored(record: ResultRecord, k: usize, limits: &SearchLimits, path: &Path) -> Handled {
    let file = read_graph(path)?;
    let inst = PrecoloredInstance::new(file.graph.clone(), file.coloring).map_err(|e| Failure::Input(e.to_string()))?;
    match ar_precolored(&inst, k, limits) {
        Ok(r) => solved(record, &file.graph, k, r, true, limits.parallel),
        Err(e) => solve_error(record, e),
    }
}

fn tree(record: ResultRecord, path: &Path) -> Handled {
    let file = read_graph(path)?;
    match carnit(&file.graph) {
        Ok(r) => solved(record, &file.graph, 3, r, true, false),
        Err(e @ (TreeError::NotAForest | TreeError::BadRoot(_) | TreeError::InvalidInputColoring(_))) => {
            Err(Failure::Input(e.to_string()))
        }
    }
}

fn approx(record: ResultRecord, method: Method, path: &Path) -> Handled {
    let file = read_graph(path)?;
    let g = &file.graph;
    let result = match method {
        Method::Greedy => greedy_bounded_degree(g),
        Method::Bipartite => Bipartition::of(g).and_then(|bp| bipartite_star(g, &bp)),
    };
    match result {
        Ok(r) => solved(record, g, 3, r, true, false),
        Err(e @ (ApproxError::EmptyGraph | ApproxError::NotBipartite(..) | ApproxError::SizeMismatch { .. })) => {
            Err(Failure::Input(e.to_string()))
        }
    }
}

fn verify(mut record: ResultRecord, k: usize, path: &Path) -> Handled {
    let file = read_graph(path)?;
    let coloring = match file.coloring.to_total() {
        Some(c) => c,
        None => {
            let missing = file.coloring.uncolored_edges().next().expect("some edge lacks a token");
            return Err(Failure::Input(format!(
                "edge {missing} has no token; `verify` needs every edge colored (use `precolored` for partial inputs)"
            )));
        }
    };
    record.value = Some(coloring.distinct_count());
    match find_rainbow_path(&file.graph, &coloring, k) {
        None => record.valid = true,
        Some(p) => {
            record.valid = false;
            record.detail("rainbow_path", json!(p.vertices()));
        }
    }
    Ok(record)
}

fn out_prefix(out: Option<PathBuf>, input: &Path, suffix: &str) -> PathBuf {
    out.unwrap_or_else(|| {
        let mut s = input.as_os_str().to_owned();
        s.push(suffix);
        PathBuf::from(s)
    })
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn reduction_error(mut record: ResultRecord, e: ReductionError) -> Handled {
    match e {
        ReductionError::InstanceTooLarge { .. } => {
            record.warnings.push(e.to_string());
            Err(Failure::Limit(e.to_string(), Box::new(record)))
        }
        _ => Err(Failure::Input(e.to_string())),
    }
}

fn emit_instance(
    mut record: ResultRecord,
    prefix: &Path,
    graph_text: String,
    annotation: &Annotation,
    g: &Graph,
) -> Handled {
    let graph_path = with_extension(prefix, ".graph");
    let annotation_path = with_extension(prefix, ".json");
    write(&graph_path, &graph_text)?;
    let mut json = serde_json::to_string(annotation).expect("annotation serializes");
    json.push('\n');
    write(&annotation_path, &json)?;
    record.valid = true;
    record.detail("vertices", g.vertex_count());
    record.detail("edges", g.edge_count());
    record.detail("graph_file", graph_path.display().to_string());
    record.detail("annotation_file", annotation_path.display().to_string());
    Ok(record)
}

fn mis_details(record: &mut ResultRecord, inst: &ReducedMisInstance) {
    record.detail("paths_per_vertex", inst.paths_per_vertex());
    record.detail("path_length", inst.path_length());
    record.detail("f_k", inst.params.f_k);
    record.detail("c_k", inst.params.c_k);
}

fn reduce(mut record: ResultRecord, kind: Reduce) -> Handled {
    match kind {
        Reduce::Sat { cnf, out } => {
            let phi = match Cnf::parse_dimacs(&read(&cnf)?) {
                Ok(phi) => phi,
                Err(e) => return reduction_error(record, e),
            };
            match sat_to_precolored(&phi) {
                Ok(inst) => {
                    record.value = None;
                    record.detail("clauses", inst.formula.clauses.len());
                    record.detail("variables", inst.variable_count());
                    record.detail("target", inst.target());
                    let text = write_graph(&inst.graph, Some(&inst.precoloring));
                    let g = inst.graph.clone();
                    let prefix = out_prefix(out, &cnf, ".sat");
                    emit_instance(record, &prefix, text, &Annotation::Sat(inst), &g)
                }
                Err(ReductionError::TriviallySat) => {
                    record.valid = true;
                    record.detail("satisfiable", true);
                    record
                        .warnings
                        .push("pure-literal elimination satisfies every clause; no instance written".into());
                    Ok(record)
                }
                Err(e) => reduction_error(record, e),
            }
        }
        Reduce::Mis { k, graph, out } => {
            let file = read_graph(&graph)?;
            match mis_to_pk(&file.graph, k) {
                Ok(inst) => {
                    mis_details(&mut record, &inst);
                    let text = write_graph(&inst.graph, None);
                    let g = inst.graph.clone();
                    let prefix = out_prefix(out, &graph, &format!(".mis{k}"));
                    emit_instance(record, &prefix, text, &Annotation::Mis(inst), &g)
                }
                Err(e) => reduction_error(record, e),
            }
        }
        Reduce::Mis3 { graph, out } => {
            let file = read_graph(&graph)?;
            let inst = mis_to_3partite(&file.graph);
            mis_details(&mut record, &inst);
            let text = write_graph(&inst.graph, None);
            let g = inst.graph.clone();
            let prefix = out_prefix(out, &graph, ".mis3");
            emit_instance(record, &prefix, text, &Annotation::Mis(inst), &g)
        }
    }
}

fn extract(mut record: ResultRecord, annotation: &Path, graph: &Path) -> Handled {
    let inst = match serde_json::from_str::<Annotation>(&read(annotation)?) {
        Ok(Annotation::Mis(inst)) => inst,
        Ok(Annotation::Sat(_)) => {
            return Err(Failure::Input(format!(
                "{}: annotation describes a SAT reduction, not an independent set one",
                annotation.display()
            )))
        }
        Err(e) => return Err(Failure::Input(format!("{}: {e}", annotation.display()))),
    };
    let file = read_graph(graph)?;
    if file.graph != inst.graph {
        return Err(Failure::Input(format!(
            "{} is not the graph described by {}",
            graph.display(),
            annotation.display()
        )));
    }
    let coloring = file
        .coloring
        .to_total()
        .ok_or_else(|| Failure::Input(format!("{}: every edge needs a token", graph.display())))?;
    let set: BTreeSet<usize> = extract_independent_set(&inst, &coloring).map_err(|e| Failure::Input(e.to_string()))?;
    let audit = audit_reduced_coloring(&inst, &coloring);
    record.value = Some(set.len());
    record.valid = true;
    record.detail("independent_set", json!(set));
    record.detail("audit", serde_json::to_value(&audit).expect("audit serializes"));
    Ok(record)
}
