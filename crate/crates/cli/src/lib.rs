//! Command implementations behind the `dissoc` binary.
//!
//! Every command writes its result to the given writer and reports failures
//! as a [`CliError`], which carries the process exit code.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use dissoc::bench;
use dissoc::oracle::{enumerate_labeled_trees, MAX_ENUMERATION_ORDER, MAX_LABELED_TREE_ORDER};
use dissoc::pruning::prune;
use dissoc::verify::{three_way, Mismatch};
use dissoc::{
    classify_all, classify_all_parallel, classify_vertex, dissociation_number, random_tree, Tree,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ARGUMENT: i32 = 3;

/// Largest tree order the exhaustive part of `oracle-check` enumerates.
const EXHAUSTIVE_MAX: usize = 8;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Argument(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Argument(_) => EXIT_ARGUMENT,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Argument(m) | CliError::Mismatch(m) => m,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dissoc",
    version,
    about = "Classify tree vertices by membership in maximum dissociation sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Edge-list file, or `-` for standard input.
    pub file: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the dissociation number of a tree.
    Psi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Classify one vertex as ALL, SOME or NONE.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classify every vertex; one `vertex<TAB>class` line each.
    ClassifyAll {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Dump the pruned tree for a root as a relabeled edge list.
    Prune {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the classifier against the DP and exhaustive oracles.
    OracleCheck {
        /// Largest tree order; the exhaustive sweep stops at 8.
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Random trees with 1..=n_max vertices to check.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Time single-vertex and all-vertex classification on random trees.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![10_000, 100_000, 1_000_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = bench::DEFAULT_REPS)]
        reps: usize,
        /// Skip the quadratic all-vertex timing above this size.
        #[arg(long, default_value_t = 5_000)]
        all_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a uniformly random labeled tree.
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Summary of one invocation, logged to standard error at info level.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub payload: serde_json::Value,
    pub duration_ms: f64,
}

fn read_tree(input: &Input) -> Result<Tree, CliError> {
    let text = if input.file == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(Path::new(&input.file))
            .map_err(|e| CliError::Input(format!("{}: {e}", input.file)))?
    };
    dissoc::parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", input.file)))
}

fn check_vertex(tree: &Tree, v: usize) -> Result<(), CliError> {
    tree.check_vertex(v)
        .map_err(|e| CliError::Argument(e.to_string()))
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    if threads == Some(0) {
        return Err(CliError::Argument("--threads must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Argument(e.to_string()))
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{value}")?;
    Ok(())
}

/// Runs one command, writing its normal output to `out`.
pub fn run(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let start = Instant::now();
    let (name, digest, payload) = dispatch(command, out)?;
    let report = RunReport {
        command: name,
        n: digest.map(|(n, _)| n),
        edges: digest.map(|(_, e)| e),
        payload,
        duration_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    log::info!("{}", serde_json::to_string(&report).unwrap());
    Ok(())
}

type Dispatched = (&'static str, Option<(usize, usize)>, serde_json::Value);

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Dispatched, CliError> {
    match command {
        Command::Psi { input, json } => {
            let tree = read_tree(&input)?;
            let psi = dissociation_number(&tree);
            let payload = json!({ "n": tree.n(), "psi": psi });
            if json {
                write_json(out, &payload)?;
            } else {
                writeln!(out, "{psi}")?;
            }
            Ok(("psi", Some((tree.n(), tree.edge_count())), payload))
        }
        Command::Classify {
            input,
            vertex,
            json,
        } => {
            let tree = read_tree(&input)?;
            check_vertex(&tree, vertex)?;
            let class = classify_vertex(&tree, vertex).unwrap();
            let payload = json!({
                "vertex": vertex,
                "class": class.as_str(),
                "psi": dissociation_number(&tree),
            });
            if json {
                write_json(out, &payload)?;
            } else {
                writeln!(out, "{class}")?;
            }
            Ok(("classify", Some((tree.n(), tree.edge_count())), payload))
        }
        Command::ClassifyAll {
            input,
            json,
            threads,
        } => {
            let tree = read_tree(&input)?;
            let classes = match threads {
                Some(1) => classify_all(&tree),
                _ => pool(threads)?.install(|| classify_all_parallel(&tree)),
            };
            let payload: serde_json::Value = classes
                .iter()
                .enumerate()
                .map(|(v, c)| json!({ "vertex": v, "class": c.as_str() }))
                .collect();
            if json {
                write_json(out, &payload)?;
            } else {
                for (v, c) in classes.iter().enumerate() {
                    writeln!(out, "{v}\t{c}")?;
                }
            }
            Ok(("classify-all", Some((tree.n(), tree.edge_count())), payload))
        }
        Command::Prune {
            input,
            vertex,
            json,
        } => {
            let tree = read_tree(&input)?;
            check_vertex(&tree, vertex)?;
            let rooted = tree.root_at(vertex).unwrap();
            let pruned = prune(&rooted);
            let counts = pruned.child_classes(vertex).unwrap();
            let m = pruned.materialize();
            let edges: Vec<(usize, usize)> = m.tree.edges().collect();
            let payload = json!({
                "root": vertex,
                "vertices": m.original,
                "edges": edges,
                "steps": pruned.steps().len(),
                "root_counts": { "c0": counts.c0, "c1": counts.c1, "c2": counts.c2 },
                "class": dissoc::classifier::class_from_root_counts(&counts).as_str(),
            });
            if json {
                write_json(out, &payload)?;
            } else {
                writeln!(out, "# pruning of the tree rooted at {vertex}")?;
                writeln!(
                    out,
                    "# root counts c0={} c1={} c2={}",
                    counts.c0, counts.c1, counts.c2
                )?;
                for (i, v) in m.original.iter().enumerate() {
                    writeln!(out, "# {i} = original {v}")?;
                }
                write!(out, "{}", m.tree.to_edge_list())?;
            }
            Ok(("prune", Some((tree.n(), tree.edge_count())), payload))
        }
        Command::OracleCheck {
            n_max,
            samples,
            seed,
            threads,
            json,
        } => {
            let payload = oracle_check(&pool(threads)?, n_max, samples, seed, json, out)?;
            Ok(("oracle-check", None, payload))
        }
        Command::Bench {
            sizes,
            seed,
            reps,
            all_max,
            json,
        } => {
            let rows = bench::run(&sizes, seed, reps, all_max);
            let payload: serde_json::Value = rows
                .iter()
                .map(|r| json!({ "n": r.n, "single_ms": r.single_ms, "all_ms": r.all_ms }))
                .collect();
            if json {
                write_json(out, &payload)?;
            } else {
                writeln!(out, "n\tsingle_ms\tall_ms")?;
                for r in &rows {
                    let all = r.all_ms.map_or("-".to_string(), |ms| format!("{ms:.3}"));
                    writeln!(out, "{}\t{:.3}\t{all}", r.n, r.single_ms)?;
                }
            }
            Ok(("bench", None, payload))
        }
        Command::Gen { n, seed } => {
            if n == 0 {
                return Err(CliError::Argument("n must be at least 1".into()));
            }
            let tree = random_tree(n, seed);
            write!(out, "{}", tree.to_edge_list())?;
            Ok((
                "gen",
                Some((tree.n(), tree.edge_count())),
                json!({ "seed": seed }),
            ))
        }
    }
}

#[derive(Debug, Default, Clone, Copy, Serialize)]
struct Tally {
    trees: usize,
    vertices: usize,
    mismatches: usize,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.trees += other.trees;
        self.vertices += other.vertices;
        self.mismatches += other.mismatches;
    }
}

/// Offending trees kept for the report.
const MAX_REPORTED: usize = 5;

fn check_trees<I>(trees: I) -> (Tally, Vec<(Tree, Vec<Mismatch>)>)
where
    I: ParallelIterator<Item = Tree>,
{
    trees
        .map(|t| {
            let bad = three_way(&t).expect("orders are within the exhaustive limit");
            let tally = Tally {
                trees: 1,
                vertices: t.n(),
                mismatches: bad.len(),
            };
            let kept = if bad.is_empty() {
                Vec::new()
            } else {
                vec![(t, bad)]
            };
            (tally, kept)
        })
        .reduce(
            || (Tally::default(), Vec::new()),
            |(mut a, mut ka), (b, kb)| {
                a.add(b);
                ka.extend(kb);
                ka.truncate(MAX_REPORTED);
                (a, ka)
            },
        )
}

fn oracle_check(
    pool: &rayon::ThreadPool,
    n_max: usize,
    samples: usize,
    seed: u64,
    json: bool,
    out: &mut dyn Write,
) -> Result<serde_json::Value, CliError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n_max) {
        return Err(CliError::Argument(format!(
            "--n-max must be between 1 and {MAX_ENUMERATION_ORDER}"
        )));
    }
    let mut sections = Vec::new();
    let mut total = Tally::default();
    let mut offenders = Vec::new();

    let top = n_max.min(EXHAUSTIVE_MAX).min(MAX_LABELED_TREE_ORDER);
    for n in 1..=top {
        let (tally, bad) =
            pool.install(|| check_trees(enumerate_labeled_trees(n).unwrap().par_bridge()));
        if !json {
            writeln!(
                out,
                "exhaustive n={n} trees={} vertices={} mismatches={}",
                tally.trees, tally.vertices, tally.mismatches
            )?;
        }
        sections.push(json!({ "mode": "exhaustive", "n": n, "tally": tally }));
        total.add(tally);
        offenders.extend(bad);
    }

    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draws: Vec<(usize, u64)> = (0..samples)
            .map(|_| (rng.gen_range(1..=n_max), rng.gen()))
            .collect();
        let (tally, bad) =
            pool.install(|| check_trees(draws.into_par_iter().map(|(n, s)| random_tree(n, s))));
        if !json {
            writeln!(
                out,
                "random n_max={n_max} seed={seed} trees={} vertices={} mismatches={}",
                tally.trees, tally.vertices, tally.mismatches
            )?;
        }
        sections.push(json!({ "mode": "random", "n_max": n_max, "seed": seed, "tally": tally }));
        total.add(tally);
        offenders.extend(bad);
    }

    offenders.truncate(MAX_REPORTED);
    let payload = json!({ "sections": sections, "total": total });
    if json {
        write_json(out, &payload)?;
    } else {
        writeln!(
            out,
            "total trees={} vertices={} mismatches={}",
            total.trees, total.vertices, total.mismatches
        )?;
    }
    if total.mismatches > 0 {
        let mut msg = String::new();
        for (tree, bad) in &offenders {
            msg.push_str("mismatch on tree:\n");
            msg.push_str(&tree.to_edge_list());
            for m in bad {
                msg.push_str(&format!(
                    "  vertex {}: pruning={} dp={} exhaustive={}\n",
                    m.vertex, m.pruning, m.dp, m.exhaustive
                ));
            }
        }
        return Err(CliError::Mismatch(msg));
    }
    Ok(payload)
}
