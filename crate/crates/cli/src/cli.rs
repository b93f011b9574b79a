//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bredux_core::classes::{gen_caterpillar, gen_spider, is_member, CaterpillarSpec, SpiderSpec};
use bredux_core::enumerate::enumerate_graphs;
use bredux_core::reductions::{SweepConfig, VerificationReport};
use bredux_core::solvers::{Certificate, SolveResult};
use bredux_core::transforms::{complement, k_complete, line_graph, r_expand};
use bredux_core::{AnyGraph, ClassId, Instance, Problem, ReductionId};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::io::{parse_any, parse_weight, serialize_any, to_dot, ParseError};
use crate::report::{emit_report, exit_code, render, report_json, summary};
use crate::sweep::{parallel_sweep, pool, resolve_jobs};

#[derive(Debug, Parser)]
#[command(name = "bredux", version, about = "Exact solvers, graph transforms and checked bi-reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a problem instance exactly.
    Solve {
        /// Problem token, e.g. clique, vertex-cover, tsp.
        problem: Problem,
        /// Graph file (weighted for tsp).
        file: PathBuf,
        /// Parameter k (rational budget for tsp).
        #[arg(long)]
        k: Option<String>,
        /// Pattern graph file for subgraph-isomorphism.
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Apply a transform and print the result.
    Transform {
        transform: TransformKind,
        file: PathBuf,
        /// Print Graphviz instead of the graph file format.
        #[arg(long)]
        dot: bool,
    },
    /// Print whether a graph belongs to a class.
    Recognize { class: ClassId, file: PathBuf },
    /// Generate a class member.
    Generate {
        #[command(subcommand)]
        shape: Shape,
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Run the verification sweep of one reduction.
    Verify {
        reduction: ReductionId,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run all six sweeps with one seed.
    VerifyAll {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Write all reports as one JSON array here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write one `<reduction>.json` per sweep into this directory.
        #[arg(long)]
        report_dir: Option<PathBuf>,
    },
    /// List graphs on n vertices, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TransformKind {
    L,
    R,
    Co,
    K,
}

#[derive(Debug, Subcommand)]
enum Shape {
    /// Spider T_{i,j,k}.
    Spider { i: usize, j: usize, k: usize },
    /// Caterpillar: one hair length per spine vertex.
    Caterpillar {
        #[arg(required = true)]
        hairs: Vec<usize>,
    },
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Largest sampled vertex count (default 12 for is2vc/is2clique, else 10).
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Member budget for every closure check (default: per class).
    #[arg(long)]
    closure_budget: Option<usize>,
    /// Worker threads; falls back to BREDUX_JOBS.
    #[arg(long)]
    jobs: Option<usize>,
    /// Record wall-clock time in reports (makes them run-dependent).
    #[arg(long)]
    timings: bool,
}

impl SweepArgs {
    fn config(&self, id: ReductionId) -> SweepConfig {
        let mut c = SweepConfig::for_reduction(id);
        if let Some(n) = self.max_n {
            c.max_n = n;
        }
        c.samples = self.samples;
        c.seed = self.seed;
        c.closure_budget = self.closure_budget;
        c
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Core(#[from] bredux_core::Error),
    #[error("{0}")]
    Usage(String),
}

fn read(path: &Path) -> Result<AnyGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse_any(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn read_plain(path: &Path) -> Result<bredux_core::Graph, CliError> {
    match read(path)? {
        AnyGraph::Plain(g) => Ok(g),
        AnyGraph::Weighted(_) => Err(CliError::Usage(format!("{}: expected a plain graph", path.display()))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 success, 1 violations found, 2 usage,
/// parse or I/O errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io { path: "<stdout>".into(), source: e };
    match command {
        Command::Solve { problem, file, k, pattern } => {
            let instance = build_instance(problem, &file, k.as_deref(), pattern.as_deref())?;
            let result = problem.solve(&instance)?;
            write!(out, "{}", describe(problem, &result)).map_err(io)?;
        }
        Command::Transform { transform, file, dot } => {
            let x = read(&file)?;
            let g = match x {
                AnyGraph::Plain(g) => g,
                AnyGraph::Weighted(_) => {
                    return Err(CliError::Usage("transforms take plain graphs".into()));
                }
            };
            let y = match transform {
                TransformKind::L => AnyGraph::Plain(line_graph(&g)?.graph),
                TransformKind::R => AnyGraph::Plain(r_expand(&g)?),
                TransformKind::Co => AnyGraph::Plain(complement(&g)),
                TransformKind::K => AnyGraph::Weighted(k_complete(&g)),
            };
            print_graph(out, &y, dot).map_err(io)?;
        }
        Command::Recognize { class, file } => {
            let x = read(&file)?;
            writeln!(out, "{}", is_member(class, &x)?).map_err(io)?;
        }
        Command::Generate { shape, dot } => {
            let g = match shape {
                Shape::Spider { i, j, k } => gen_spider(SpiderSpec::new(i, j, k)),
                Shape::Caterpillar { hairs } => gen_caterpillar(&CaterpillarSpec::new(hairs))?,
            };
            print_graph(out, &AnyGraph::Plain(g), dot).map_err(io)?;
        }
        Command::Verify { reduction, sweep, report } => {
            let reports = run_sweeps(&[reduction], &sweep)?;
            let (r, elapsed) = &reports[0];
            if let Some(path) = report {
                emit_report(&report_json(r, *elapsed), &path).map_err(|source| CliError::Io { path, source })?;
            }
            return finish(out, &reports);
        }
        Command::VerifyAll { sweep, report, report_dir } => {
            let reports = run_sweeps(&ReductionId::ALL, &sweep)?;
            if let Some(path) = report {
                let all = serde_json::Value::Array(reports.iter().map(|(r, t)| report_json(r, *t)).collect());
                write_file(&path, &render(&all))?;
            }
            if let Some(dir) = report_dir {
                std::fs::create_dir_all(&dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
                for (r, t) in &reports {
                    let path = dir.join(format!("{}.json", r.reduction.token()));
                    write_file(&path, &render(&report_json(r, *t)))?;
                }
            }
            return finish(out, &reports);
        }
        Command::Enumerate { n, dedup, count } => {
            let graphs = enumerate_graphs(n, dedup)?;
            if count {
                writeln!(out, "{}", graphs.count()).map_err(io)?;
            } else {
                for g in graphs {
                    writeln!(out, "{g}").map_err(io)?;
                }
            }
        }
    }
    Ok(0)
}

fn run_sweeps(ids: &[ReductionId], args: &SweepArgs) -> Result<Vec<(VerificationReport, Option<u128>)>, CliError> {
    let jobs = resolve_jobs(args.jobs).map_err(CliError::Usage)?;
    let pool = pool(jobs);
    Ok(ids
        .iter()
        .map(|&id| {
            let start = Instant::now();
            let report = parallel_sweep(&pool, &id.reduction(), &args.config(id));
            (report, args.timings.then(|| start.elapsed().as_millis()))
        })
        .collect())
}

fn finish(out: &mut dyn Write, reports: &[(VerificationReport, Option<u128>)]) -> Result<i32, CliError> {
    let plain: Vec<VerificationReport> = reports.iter().map(|(r, _)| r.clone()).collect();
    write!(out, "{}", summary(&plain)).map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
    Ok(exit_code(&plain))
}

fn print_graph(out: &mut dyn Write, x: &AnyGraph, dot: bool) -> std::io::Result<()> {
    if dot {
        write!(out, "{}", to_dot(x))
    } else {
        writeln!(out, "{}", serialize_any(x))
    }
}

fn build_instance(problem: Problem, file: &Path, k: Option<&str>, pattern: Option<&Path>) -> Result<Instance, CliError> {
    let need_k = || k.ok_or_else(|| CliError::Usage(format!("{problem} needs --k")));
    let int_k = || -> Result<usize, CliError> {
        let k = need_k()?;
        k.parse().map_err(|_| CliError::Usage(format!("--k must be a non-negative integer, got '{k}'")))
    };
    Ok(match problem {
        Problem::HamiltonianPath | Problem::HamiltonianCycle => Instance::Graph(read_plain(file)?),
        Problem::SubgraphIsomorphism => {
            let pattern = pattern.ok_or_else(|| CliError::Usage(format!("{problem} needs --pattern")))?;
            Instance::GraphPair(read_plain(file)?, read_plain(pattern)?)
        }
        Problem::TravellingSalesperson => {
            let w = match read(file)? {
                AnyGraph::Weighted(w) => w,
                AnyGraph::Plain(_) => {
                    return Err(CliError::Usage(format!("{}: tsp needs a weighted graph", file.display())));
                }
            };
            let k = need_k()?;
            let budget = parse_weight(k).ok_or_else(|| CliError::Usage(format!("--k must be a number, got '{k}'")))?;
            Instance::WeightedBudget(w, budget)
        }
        _ => Instance::GraphInt(read_plain(file)?, int_k()?),
    })
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn describe(problem: Problem, r: &SolveResult) -> String {
    let mut s = format!("problem: {problem}\ndecision: {}\n", r.decision);
    if let Some(opt) = &r.optimum {
        s += &format!("optimum: {opt}\n");
    }
    if let Some(c) = &r.certificate {
        let text = match c {
            Certificate::Vertices(v) => format!("vertices {}", join(v)),
            Certificate::Coloring(c) => format!("coloring {}", join(c)),
            Certificate::Cliques(cs) => {
                format!("cliques {}", cs.iter().map(|c| format!("{{{}}}", join(c))).collect::<Vec<_>>().join(" "))
            }
            Certificate::Order(o) => format!("order {}", join(o)),
            Certificate::Tree(es) => {
                format!("tree {}", es.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "))
            }
            Certificate::Embedding(e) => format!("embedding {}", join(e)),
            Certificate::Tour(t) => format!("tour {}", join(t)),
        };
        s += &format!("certificate: {}\n", text.trim_end());
    }
    s
}
