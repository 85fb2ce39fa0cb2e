//! Command-line front end. Output is deterministic: the same arguments give
//! byte-identical output whatever the thread count.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::compat::PairRecord;
use crate::endo::{endo_tree, is_star, star_tilting, GroupKind};
use crate::error::{Error, Result};
use crate::oracle::{Oracle, DEFAULT_PRIME};
use crate::quiver::{BrauerQuiver, CycleId};
use crate::sweep::{sweep, verify_tree};
use crate::tilting::{enumerate_tiltings, CompatibilityGraph, TiltingComplex};
use crate::tree::{enumerate_trees_bounded, BrauerTree, DEFAULT_MAX_EDGES};
use crate::two_term::enumerate_indecomposables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sources,
    Sinks,
}

impl From<Mode> for GroupKind {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sources => GroupKind::Sources,
            Mode::Sinks => GroupKind::Sinks,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "brauer-tilt",
    version,
    about = "Two-term tilting complexes over Brauer tree algebras with multiplicity one"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Cross-check results with the homological oracle.
    #[arg(long, global = true)]
    pub verify: bool,

    /// Prime field for the oracle.
    #[arg(long, global = true)]
    pub prime: Option<u64>,

    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TreeSource {
    /// Tree description as JSON; `-` reads standard input.
    #[arg(long, value_name = "FILE", conflicts_with = "tree_json")]
    pub tree: Option<PathBuf>,

    /// Tree description given inline.
    #[arg(long, value_name = "JSON")]
    pub tree_json: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all indecomposable two-term partial tilting complexes.
    EnumIndec {
        #[command(flatten)]
        source: TreeSource,
        /// Print the pairwise classification as JSON lines instead.
        #[arg(long)]
        pairs: bool,
    },
    /// List all basic two-term tilting complexes.
    EnumTilting {
        #[command(flatten)]
        source: TreeSource,
    },
    /// Brauer tree of the endomorphism ring of one tilting complex.
    Endo {
        #[command(flatten)]
        source: TreeSource,
        /// Position in the `enum-tilting` listing.
        #[arg(long)]
        index: usize,
    },
    /// The tilting complex with star endomorphism ring built on one A-cycle.
    StarTilting {
        #[command(flatten)]
        source: TreeSource,
        /// A-cycle id, i.e. a vertex of the tree.
        #[arg(long)]
        cycle: usize,
        #[arg(long, value_enum, default_value = "sources")]
        mode: Mode,
    },
    /// Count tilting complexes whose endomorphism ring is a Brauer star.
    Stars {
        #[command(flatten)]
        source: TreeSource,
        /// Count over all trees with this many edges instead of one tree.
        #[arg(long)]
        edges: Option<usize>,
        /// Print counts only.
        #[arg(long)]
        count: bool,
    },
    /// Check every prediction for one tree against the oracle.
    Verify {
        #[command(flatten)]
        source: TreeSource,
    },
    /// Check all trees up to an edge bound.
    Sweep {
        #[arg(long, default_value_t = 4)]
        edges: usize,
    },
    /// List one tree per isomorphism class.
    GenTrees {
        #[arg(long)]
        edges: usize,
    },
}

/// Settings shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub oracle: bool,
    pub prime: Option<u64>,
    pub jobs: Option<usize>,
}

/// Why a run failed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

impl TreeSource {
    fn load(&self) -> Result<BrauerTree> {
        let text = match (&self.tree, &self.tree_json) {
            (_, Some(inline)) => inline.clone(),
            (Some(p), None) if p.as_os_str() == "-" => std::io::read_to_string(std::io::stdin())?,
            (Some(p), None) => std::fs::read_to_string(p)?,
            (None, None) => {
                return Err(Error::Config("pass --tree FILE or --tree-json JSON".into()))
            }
        };
        BrauerTree::from_json(&text)
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn oracle_for<'a>(q: &'a BrauerQuiver, cfg: &RunConfig) -> Result<Oracle<'a>> {
    match cfg.prime {
        Some(p) => Oracle::with_prime(q, p),
        None => Ok(Oracle::new(q)),
    }
}

fn tilting_json(t: &TiltingComplex, index: usize) -> Value {
    let mut v = t.to_json_value();
    v["index"] = json!(index);
    v
}

/// Oracle verdict for a tilting complex: every shifted Hom between summands
/// vanishes.
fn verdict(oracle: &Oracle, t: &TiltingComplex) -> Value {
    let reports = oracle.verify_tilting(t.summands());
    let failures: Vec<_> = reports.iter().filter(|r| !r.orthogonal).collect();
    json!({ "verified": failures.is_empty(), "failures": failures })
}

fn cmd_enum_indec(tree: &BrauerTree, pairs: bool, cfg: &RunConfig) -> Outcome {
    let q = BrauerQuiver::new(tree);
    let objects = enumerate_indecomposables(&q);
    if pairs {
        let graph = CompatibilityGraph::new(objects.clone(), &q)?;
        let oracle = if cfg.oracle {
            Some(oracle_for(&q, cfg)?)
        } else {
            None
        };
        let mut out = String::new();
        for i in 0..objects.len() {
            for j in i + 1..objects.len() {
                let label = graph.label(i, j);
                let mut line =
                    serde_json::to_value(PairRecord::new(&objects[i], &objects[j], label))
                        .expect("records serialize");
                if let Some(o) = &oracle {
                    let truth = o.compatible(&objects[i], &objects[j]);
                    if truth != label.is_compatible() {
                        return Err(Failure::Internal(format!(
                            "oracle disagrees on {} / {}",
                            objects[i], objects[j]
                        )));
                    }
                    line["oracle"] = json!(truth);
                }
                let _ = writeln!(out, "{line}");
            }
        }
        return Ok(out);
    }
    if cfg.oracle {
        let o = oracle_for(&q, cfg)?;
        for obj in &objects {
            if !o.verify_partial_tilting(&obj.realize(&q)) {
                return Err(Failure::Internal(format!("{obj} has self-extensions")));
            }
        }
    }
    Ok(match cfg.format {
        Format::Table => {
            let mut s = format!("{} indecomposables\n", objects.len());
            for (i, o) in objects.iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  {o}");
            }
            s
        }
        _ => to_json(&json!({ "count": objects.len(), "objects": objects })),
    })
}

fn cmd_enum_tilting(tree: &BrauerTree, cfg: &RunConfig) -> Outcome {
    let q = BrauerQuiver::new(tree);
    let tiltings = enumerate_tiltings(&q)?;
    let oracle = if cfg.oracle {
        Some(oracle_for(&q, cfg)?)
    } else {
        None
    };
    let mut items = Vec::new();
    for (i, t) in tiltings.iter().enumerate() {
        let mut v = tilting_json(t, i);
        if let Some(o) = &oracle {
            let verdict = verdict(o, t);
            if verdict["verified"] != json!(true) {
                return Err(Failure::Internal(format!(
                    "oracle rejects tilting {i}: {verdict}"
                )));
            }
            v["oracle"] = verdict;
        }
        items.push(v);
    }
    Ok(match cfg.format {
        Format::Table => {
            let mut s = format!("{} tilting complexes\n", tiltings.len());
            for (i, t) in tiltings.iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  {}", t.label());
            }
            s
        }
        _ => to_json(&Value::Array(items)),
    })
}

fn endo_output(
    q: &BrauerQuiver,
    t: &TiltingComplex,
    index: Option<usize>,
    cfg: &RunConfig,
) -> Outcome {
    let e = endo_tree(t, q)?;
    if cfg.oracle {
        let o = oracle_for(q, cfg)?;
        let v = verdict(&o, t);
        if v["verified"] != json!(true) {
            return Err(Failure::Internal(format!(
                "oracle rejects {}: {v}",
                t.label()
            )));
        }
    }
    Ok(match cfg.format {
        Format::Dot => e.tree.to_dot(),
        Format::Table => {
            let mut s = format!("tilting {}\n", t.label());
            for (g, order) in e.groups.iter().zip(&e.cyclic_orders) {
                let _ = writeln!(s, "  cycle {:>2} {:<7?} {order:?}", g.cycle.0, g.kind);
            }
            let _ = writeln!(s, "star: {}", is_star(&e.tree));
            s
        }
        Format::Json => {
            let mut tilting = t.to_json_value();
            if let Some(i) = index {
                tilting["index"] = json!(i);
            }
            to_json(&json!({
                "tilting": tilting,
                "endo": e.to_json_value(),
                "dot": e.tree.to_dot(),
            }))
        }
    })
}

fn cmd_endo(tree: &BrauerTree, index: usize, cfg: &RunConfig) -> Outcome {
    let q = BrauerQuiver::new(tree);
    let tiltings = enumerate_tiltings(&q)?;
    let t = tiltings.get(index).ok_or(Error::IndexOutOfRange {
        index,
        len: tiltings.len(),
    })?;
    endo_output(&q, t, Some(index), cfg)
}

fn cmd_star_tilting(tree: &BrauerTree, cycle: usize, mode: Mode, cfg: &RunConfig) -> Outcome {
    let q = BrauerQuiver::new(tree);
    let t = star_tilting(&q, CycleId(cycle), mode.into())?;
    endo_output(&q, &t, None, cfg)
}

fn star_count(tree: &BrauerTree) -> Result<(usize, usize)> {
    let q = BrauerQuiver::new(tree);
    let tiltings = enumerate_tiltings(&q)?;
    let mut stars = 0;
    for t in &tiltings {
        stars += usize::from(is_star(&endo_tree(t, &q)?.tree));
    }
    Ok((stars, tiltings.len()))
}

fn cmd_stars(trees: &[BrauerTree], count_only: bool, cfg: &RunConfig) -> Outcome {
    let mut rows = Vec::new();
    for t in trees {
        let (stars, total) = star_count(t)?;
        let n = t.edge_count();
        rows.push(json!({
            "code": t.canonical_code(),
            "edges": n,
            "star_tiltings": stars,
            "expected": 2 * (n + 1),
            "tiltings": total,
        }));
    }
    Ok(match (cfg.format, count_only) {
        (Format::Table, _) | (_, true) => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}",
                    r["code"].as_str().unwrap(),
                    r["edges"],
                    r["star_tiltings"]
                );
            }
            s
        }
        _ => to_json(&Value::Array(rows)),
    })
}

fn cmd_verify(tree: &BrauerTree, cfg: &RunConfig) -> Outcome {
    let q = BrauerQuiver::new(tree);
    let prime = oracle_for(&q, cfg)?.prime();
    let report = verify_tree(tree, prime)?;
    let text = to_json(&json!({
        "summary": report.summary,
        "discrepancies": report.discrepancies,
    }));
    if report.discrepancies.is_empty() {
        Ok(text)
    } else {
        Err(Failure::Internal(text))
    }
}

fn cmd_sweep(bound: usize, cfg: &RunConfig) -> Outcome {
    let prime = cfg.prime.unwrap_or(DEFAULT_PRIME);
    if let Some(p) = cfg.prime {
        // the star with `bound` edges has the longest A-cycle
        let star = BrauerQuiver::new(&BrauerTree::star(bound.clamp(1, DEFAULT_MAX_EDGES)));
        Oracle::with_prime(&star, p)?;
    }
    let report = sweep(bound, Some(prime))?;
    let text = match cfg.format {
        Format::Table => {
            let mut s = String::new();
            for t in &report.trees {
                let _ = writeln!(
                    s,
                    "{:<16} n={} indec={} pairs={} compatible={} tiltings={} stars={}",
                    t.code,
                    t.edges,
                    t.indecomposables,
                    t.pairs,
                    t.compatible_pairs,
                    t.tiltings,
                    t.star_tiltings
                );
            }
            let _ = writeln!(s, "discrepancies: {}", report.discrepancies.len());
            s
        }
        _ => to_json(&serde_json::to_value(&report).expect("report serializes")),
    };
    if report.is_clean() {
        Ok(text)
    } else {
        Err(Failure::Internal(text))
    }
}

fn cmd_gen_trees(edges: usize, cfg: &RunConfig) -> Outcome {
    let trees = enumerate_trees_bounded(edges, DEFAULT_MAX_EDGES)?;
    Ok(match cfg.format {
        Format::Dot => trees.iter().map(BrauerTree::to_dot).collect(),
        Format::Table => trees
            .iter()
            .map(|t| format!("{}\n", t.canonical_code()))
            .collect(),
        Format::Json => {
            let values: Vec<Value> = trees
                .iter()
                .map(|t| serde_json::to_value(t).expect("trees serialize"))
                .collect();
            to_json(&Value::Array(values))
        }
    })
}

fn dispatch(cli: Cli) -> Outcome {
    let cfg = RunConfig {
        format: cli.format,
        oracle: cli.verify,
        prime: cli.prime,
        jobs: cli.jobs,
    };
    if let Some(p) = cfg.prime {
        if !crate::oracle::is_prime(p) {
            return Err(Failure::Usage(format!("--prime {p} is not prime")));
        }
    }
    let run = || match &cli.command {
        Command::EnumIndec { source, pairs } => cmd_enum_indec(&source.load()?, *pairs, &cfg),
        Command::EnumTilting { source } => cmd_enum_tilting(&source.load()?, &cfg),
        Command::Endo { source, index } => cmd_endo(&source.load()?, *index, &cfg),
        Command::StarTilting {
            source,
            cycle,
            mode,
        } => cmd_star_tilting(&source.load()?, *cycle, *mode, &cfg),
        Command::Stars {
            source,
            edges,
            count,
        } => {
            let trees = match edges {
                Some(n) => enumerate_trees_bounded(*n, DEFAULT_MAX_EDGES)?,
                None => vec![source.load()?],
            };
            cmd_stars(&trees, *count, &cfg)
        }
        Command::Verify { source } => cmd_verify(&source.load()?, &cfg),
        Command::Sweep { edges } => cmd_sweep(*edges, &cfg),
        Command::GenTrees { edges } => cmd_gen_trees(*edges, &cfg),
    };
    match cfg.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Parses `args` (program name first), runs the command, writes the result
/// to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = out.write_all(msg.as_bytes());
            let _ = writeln!(err, "error: internal consistency failure");
            EXIT_INTERNAL
        }
    }
}
