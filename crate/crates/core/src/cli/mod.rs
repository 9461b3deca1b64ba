//! Command-line front end.
//!
//! Exit codes: 0 success or affirmative answer, 1 negative answer, 2 usage or
//! parse error, 3 guard or parameter-regime error, 4 timeout.

pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::berge::{contains_berge, PatternGraph};
use crate::builders;
use crate::error::Error;
use crate::formulas::{self, Family};
use crate::hypergraph::Hypergraph;
use crate::oracle;
use crate::satcheck::{is_berge_saturated_with, CheckOptions, Violation};

use format::{parse_hypergraph, parse_pattern_file, parse_pattern_spec, write_hypergraph, PatternSpec};
use report::{saturation_document, ReportDocument};

/// Environment variable holding the default `check --workers` value.
pub const WORKERS_ENV: &str = "BERGESAT_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "bergesat", version, about = "Berge-saturated hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction and write it as a hypergraph file.
    Gen {
        family: GenFamily,
        #[command(flatten)]
        params: Params,
        /// Output file (stdout if omitted).
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a hypergraph contains a Berge copy of a pattern.
    Contains {
        #[arg(short = 'f', long)]
        file: PathBuf,
        #[arg(long)]
        pattern: String,
        /// Require the copy to use this edge (comma-separated vertices).
        #[arg(long, value_delimiter = ',')]
        required: Option<Vec<usize>>,
        /// Print the witness embedding as JSON.
        #[arg(long)]
        witness: bool,
    },
    /// Check Berge saturation by scanning every non-edge.
    Check {
        #[arg(short = 'f', long)]
        file: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        workers: Option<usize>,
        /// Timeout in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate a closed-form count or bound.
    Formula {
        name: FormulaName,
        #[command(flatten)]
        params: Params,
    },
    /// Brute-force searches on small instances.
    Oracle {
        #[command(subcommand)]
        search: OracleCommand,
    },
}

#[derive(Args, Debug, Default)]
struct Params {
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(short = 'm')]
    m: Option<usize>,
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(short = 'l')]
    l: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Linear trees with t edges, one per isomorphism class.
    Trees {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 't')]
        t: usize,
    },
    /// Smallest Berge-P_m-saturated linear tree.
    MinTree {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, default_value_t = oracle::MAX_TREE_EDGES)]
        max_edges: usize,
    },
    /// Saturation number by exhaustive search.
    Sat {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenFamily {
    PathTree,
    PathSaturated,
    TriangleStar,
    CycleBook,
    CycleCliquesKeq,
    CycleCliques,
    StarTightcycle,
    StarCliques,
    Matching,
    FigureOne,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaName {
    /// Minimum edge count of a saturated linear tree (-k -m).
    Akm,
    /// Edge count of the tree construction (-k -m).
    TreeCount,
    /// Vertex count of the tree construction (-k -m).
    TreeOrder,
    /// Edge count of H(k, m, n) (-k -m -n).
    HCount,
    /// Path saturation bounds (-k -m -n).
    PathBounds,
    /// Matching with l edges (-k -l -n).
    Matching,
    Triangle,
    /// Star K_{1,k+1} (-k -n).
    StarExact,
    /// Star K_{1,m} upper bound (-k -m -n).
    StarUpper,
    /// Cycle C_m upper bound (-k -m -n).
    CycleUpper,
    /// The k = m - 2 cycle bound as an unreduced fraction (-m -n).
    CycleRatio,
}

/// Everything that ends a command early.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Timeout(Duration),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Lib(e) if e.is_guard() => EXIT_GUARD,
            Failure::Lib(_) => EXIT_USAGE,
            Failure::Timeout(_) => EXIT_TIMEOUT,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Timeout(d) => write!(f, "timed out after {:.3}s", d.as_secs_f64()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            failure.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen { family, params, output } => gen(family, &params, output.as_deref(), out),
        Command::Contains {
            file,
            pattern,
            required,
            witness,
        } => {
            let h = read_hypergraph(&file)?;
            let f = resolve_pattern(&pattern)?;
            if let Some(r) = &required {
                let mut r = r.clone();
                r.sort_unstable();
                if !h.contains_edge(&r) {
                    return Err(Failure::Usage(format!("required edge {r:?} is not an edge")));
                }
            }
            let found = contains_berge(&h, &f, required.as_deref().map(sorted).as_deref());
            emit(out, if found.is_some() { "YES" } else { "NO" })?;
            if let (true, Some(emb)) = (witness, &found) {
                emit(out, &serde_json::to_string(emb).expect("plain data"))?;
            }
            Ok(if found.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Check {
            file,
            pattern,
            workers,
            timeout,
            report,
        } => {
            let h = read_hypergraph(&file)?;
            let f = resolve_pattern(&pattern)?;
            let timeout = match timeout {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(Failure::Usage(format!("bad timeout {s}")));
                }
                t => t.map(Duration::from_secs_f64),
            };
            let options = CheckOptions {
                workers: workers.unwrap_or_else(default_workers).max(1),
                timeout,
            };
            let result = is_berge_saturated_with(&h, &f, &options).map_err(|t| Failure::Timeout(t.elapsed))?;
            let verdict = match (&result.violation, result.saturated) {
                (_, true) => "SATURATED".to_string(),
                (Some(Violation::Contains(_)), _) => "NOT FREE".to_string(),
                (Some(Violation::NonEdge(e)), _) => format!("NOT SATURATED {}", join(e)),
                (None, false) => unreachable!("an unsaturated report names a violation"),
            };
            emit(out, &verdict)?;
            if let Some(path) = report {
                write_file(&path, &saturation_document(&h, &f, &result).to_json())?;
            }
            Ok(if result.saturated { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Formula { name, params } => formula(name, &params, out),
        Command::Oracle { search } => run_oracle(search, out),
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    let text = read_text(path)?;
    parse_hypergraph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn resolve_pattern(spec: &str) -> Result<PatternGraph, Failure> {
    match parse_pattern_spec(spec).map_err(Failure::Usage)? {
        PatternSpec::Graph(g) => Ok(g),
        PatternSpec::File(path) => {
            let text = read_text(Path::new(&path))?;
            parse_pattern_file(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
        }
    }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing -{flag}")))
}

fn gen(family: GenFamily, p: &Params, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    use GenFamily::*;
    let k = || need(p.k, "k");
    let m = || need(p.m, "m");
    let n = || need(p.n, "n");
    let h = match family {
        PathTree => builders::build_path_tree(k()?, m()?)?,
        PathSaturated => builders::build_path_saturated(k()?, m()?, n()?)?,
        TriangleStar => builders::build_triangle_star(k()?, n()?)?,
        CycleBook => builders::build_cycle_book(k()?, m()?, n()?)?,
        CycleCliquesKeq => builders::build_cycle_cliques_keq(m()?, n()?)?,
        CycleCliques => builders::build_cycle_cliques(k()?, m()?, n()?)?,
        StarTightcycle => builders::build_star_tightcycle(k()?, n()?)?,
        StarCliques => builders::build_star_cliques(k()?, m()?, n()?)?,
        Matching => builders::build_matching(k()?, need(p.l, "l")?, n()?)?,
        FigureOne => builders::figure_one_fixture(),
    };
    let text = write_hypergraph(&h);
    match output {
        Some(path) => write_file(path, &text)?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?,
    }
    Ok(EXIT_OK)
}

fn formula(name: FormulaName, p: &Params, out: &mut dyn Write) -> Outcome {
    use FormulaName::*;
    let k = || need(p.k, "k").map(|v| v as u64);
    let m = || need(p.m, "m").map(|v| v as u64);
    let n = || need(p.n, "n").map(|v| v as u64);
    let result = match name {
        Akm => json!(formulas::a_km(k()?, m()?)?),
        TreeCount => json!(formulas::construction_edge_count(k()?, m()?)?),
        TreeOrder => json!(formulas::tree_order(k()?, m()?)?),
        HCount => json!(formulas::h_edge_count(k()?, m()?, n()?)?),
        PathBounds => json!(formulas::sat_path_bounds(k()?, m()?, n()?)?),
        Matching => {
            let l = need(p.l, "l")? as u64;
            json!(formulas::closed_form(Family::Matching(l), k()?, n()?)?)
        }
        Triangle => json!(formulas::closed_form(Family::Triangle, k()?, n()?)?),
        StarExact => json!(formulas::closed_form(Family::StarExact, k()?, n()?)?),
        StarUpper => json!(formulas::closed_form(Family::StarUpper(m()?), k()?, n()?)?),
        CycleUpper => json!(formulas::closed_form(Family::CycleUpper(m()?), k()?, n()?)?),
        CycleRatio => json!(formulas::cycle_keq_rational(m()?, n()?)?),
    };
    let name = name.to_possible_value().expect("no skipped variants").get_name().to_string();
    let doc = ReportDocument::new("formula", json!({ "name": name, "k": p.k, "m": p.m, "n": p.n, "l": p.l }), result);
    out.write_all(doc.to_json().as_bytes())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn run_oracle(search: OracleCommand, out: &mut dyn Write) -> Outcome {
    let (doc, found) = match search {
        OracleCommand::Trees { k, t } => {
            let trees = oracle::enumerate_linear_trees(k, t)?;
            let doc = ReportDocument::new(
                "oracle trees",
                json!({ "k": k, "t": t }),
                json!({ "classes": trees.len(), "trees": trees }),
            );
            (doc, true)
        }
        OracleCommand::MinTree { k, m, max_edges } => {
            let r = oracle::min_saturated_tree(k, m, max_edges)?;
            let found = r.minimum.is_some();
            let doc = ReportDocument::new(
                "oracle min-tree",
                json!({ "k": k, "m": m, "max_edges": max_edges }),
                json!(r),
            );
            (doc, found)
        }
        OracleCommand::Sat { k, n, pattern } => {
            let f = resolve_pattern(&pattern)?;
            let r = oracle::sat_exhaustive(k, n, &f)?;
            let found = r.minimum.is_some();
            let doc = ReportDocument::new("oracle sat", json!({ "k": k, "n": n, "pattern": f }), json!(r));
            (doc, found)
        }
    };
    out.write_all(doc.to_json().as_bytes())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?;
    Ok(if found { EXIT_OK } else { EXIT_NEGATIVE })
}
