//! Command-line front end.
//!
//! Every subcommand renders one JSON object (or `key=value` lines with
//! `--format text`). Exact quantities are always strings. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, family valid, all checks passed |
//! | 1 | condition violated or a proof check failed |
//! | 2 | usage, parse or parameter error |
//! | 3 | a construction failed its own verification |
//! | 4 | compatibility graph above the size ceiling |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bounds::{
    bounds_m, check_chain_t2, check_t1_upper, class_size, count_matchings, factorial,
    gilbert_bound, gilbert_parts,
};
use crate::constructions::{
    build_construction, check_matching_classes, check_skeleton_classes, distinct_path_matchings,
    enumerate_skeleton_class, gv_family, ClassCheck, CLASS_CHECK_MAX_N,
};
use crate::error::Error;
use crate::paths::text::{parse_paths, render_code, render_family};
use crate::paths::{enumerate_paths, path_count, PathFamily};
use crate::predicates::{
    degree4_counterexample, verify_code_triangles, verify_family, PairwiseCondition,
};
use crate::search::{
    exact_optimum, greedy_lower, ResultsCache, SearchOptions, SearchRecord, MAX_GRAPH_N,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SELF_CHECK: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;

/// Largest `n` for which `count` cross-checks the matching count by
/// enumerating paths.
const COUNT_ENUMERATION_MAX_N: usize = CLASS_CHECK_MAX_N;
/// Matching classes are checked exhaustively up to this `n`.
const MATCHING_CLASS_MAX_N: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "lasting-sep",
    version,
    about = "Hamilton path families with lasting separation"
)]
pub struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for verification and search (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed for randomized procedures.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Exhaustive branch and bound over all canonical paths.
    Exact,
    /// Seeded greedy restarts; a lower bound only.
    Greedy,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact lower and upper bounds on M(n,k).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Build the explicit family for (n,k), verify it, optionally write it.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every pair of a path file against a condition.
    Verify {
        #[arg(long)]
        paths: PathBuf,
        /// Condition name; defaults to the file header.
        #[arg(long)]
        condition: Option<String>,
        /// Level; defaults to the file header.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Largest family under a condition, via maximum clique search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "private-subpath")]
        condition: String,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 300)]
        budget: u64,
        /// Results cache (JSON lines); overrides $LASTING_SEP_CACHE.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Greedy restarts (greedy method only).
        #[arg(long, default_value_t = 16)]
        restarts: usize,
    },
    /// Number of Hamilton paths and of (near-)perfect matchings of K_n.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Greedy lexicode of vertex subsets and its triangle separation.
    Gv {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        min_weight: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run the exact checks behind the bounds.
    CheckProofs {
        #[arg(long, default_value_t = 40)]
        t1_max_n: usize,
        #[arg(long, default_value_t = 40)]
        chain_max_n: usize,
        #[arg(long, default_value_t = 6)]
        degree4_max_n: usize,
    },
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => EXIT_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// What a command produced: the document to print and the exit code.
struct Report {
    doc: Value,
    code: i32,
}

impl Report {
    fn ok(doc: Value) -> Self {
        Report { doc, code: EXIT_OK }
    }
}

struct Context {
    workers: Option<usize>,
    seed: u64,
    /// Diagnostics for stderr, written after the command finishes.
    notes: Vec<String>,
}

/// Binary entry point.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
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
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if cli.workers == Some(0) {
        let _ = writeln!(err, "error: --workers must be at least 1");
        return EXIT_USAGE;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        builder = builder.num_threads(w);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Context {
        workers: cli.workers,
        seed: cli.seed,
        notes: Vec::new(),
    };
    let result = pool.install(|| dispatch(&cli.command, &mut ctx));
    for note in &ctx.notes {
        let _ = writeln!(err, "{note}");
    }
    match result {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&report.doc).expect("json values serialize") + "\n"
                }
                Format::Text => render_text(&report.doc),
            };
            let _ = out.write_all(rendered.as_bytes());
            report.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: &Command, ctx: &mut Context) -> Result<Report, Failure> {
    match command {
        Command::Bounds { n, k } => cmd_bounds(*n, *k),
        Command::Construct { n, k, out } => cmd_construct(*n, *k, out.as_deref(), ctx),
        Command::Verify {
            paths,
            condition,
            k,
        } => cmd_verify(paths, condition.as_deref(), *k),
        Command::Search {
            n,
            k,
            condition,
            budget,
            cache,
            method,
            restarts,
        } => {
            let condition = PairwiseCondition::from_name(condition, *k)?;
            match method {
                Method::Exact => cmd_search(
                    *n,
                    condition,
                    Duration::from_secs(*budget),
                    cache.as_deref(),
                    ctx,
                ),
                Method::Greedy => cmd_greedy(*n, condition, *restarts, ctx.seed),
            }
        }
        Command::Count { n } => cmd_count(*n),
        Command::Gv {
            n,
            d,
            min_weight,
            out,
        } => cmd_gv(*n, *d, *min_weight, out.as_deref()),
        Command::CheckProofs {
            t1_max_n,
            chain_max_n,
            degree4_max_n,
        } => cmd_check_proofs(*t1_max_n, *chain_max_n, *degree4_max_n),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|source| {
        Error::Io {
            path: path.to_path_buf(),
            source,
        }
        .into()
    })
}

fn path_strings(family: &PathFamily) -> Vec<String> {
    family.members().iter().map(|p| p.to_string()).collect()
}

fn cmd_bounds(n: usize, k: usize) -> Result<Report, Failure> {
    if n < 2 || k == 0 {
        return Err(usage("bounds need n >= 2 and k >= 1"));
    }
    let report = bounds_m(n, k);
    Ok(Report::ok(
        serde_json::to_value(&report).expect("bound reports serialize"),
    ))
}

fn cmd_construct(
    n: usize,
    k: usize,
    out: Option<&Path>,
    ctx: &mut Context,
) -> Result<Report, Failure> {
    let family = build_construction(n, k)?;
    let violations = verify_family(&family);
    if !violations.is_valid() {
        let (i, j) = violations.pairs[0];
        ctx.notes.push(format!(
            "construction self-check failed: {} violating pairs, first {} vs {}",
            violations.pairs.len(),
            family.members()[i],
            family.members()[j]
        ));
        return Ok(Report {
            doc: json!({ "n": n, "k": k, "valid": false }),
            code: EXIT_SELF_CHECK,
        });
    }
    let theorem = bounds_m(n, k).theorem;
    let mut doc = json!({
        "n": n,
        "k": k,
        "condition": family.condition().name(),
        "theorem": theorem,
        "size": family.len(),
        "valid": true,
    });
    match out {
        Some(path) => {
            write_file(path, &render_family(&family))?;
            doc["file"] = json!(path.display().to_string());
        }
        None => doc["paths"] = json!(path_strings(&family)),
    }
    Ok(Report::ok(doc))
}

fn cmd_verify(file: &Path, condition: Option<&str>, k: Option<usize>) -> Result<Report, Failure> {
    let text = std::fs::read_to_string(file).map_err(|source| Error::Io {
        path: file.to_path_buf(),
        source,
    })?;
    let parsed = parse_paths(&text)?;
    let header = parsed.header.clone();
    let name = condition
        .map(str::to_string)
        .or_else(|| header.as_ref().map(|h| h.condition.clone()))
        .ok_or_else(|| usage("no condition given and the file has no header"))?;
    let k = k.or(header.as_ref().map(|h| h.k));
    let condition = PairwiseCondition::from_name(&name, k)?;
    let family = parsed.into_family(condition)?;
    let report = verify_family(&family);
    let m = family.len();
    let violations: Vec<Value> = report
        .pairs
        .iter()
        .map(|&(i, j)| {
            json!({
                "first": i + 1,
                "second": j + 1,
                "paths": [family.members()[i].to_string(), family.members()[j].to_string()],
            })
        })
        .collect();
    let doc = json!({
        "n": family.n(),
        "condition": condition.to_string(),
        "members": m,
        "pairs_checked": m * m.saturating_sub(1) / 2,
        "valid": report.is_valid(),
        "violations": violations,
    });
    let code = if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Report { doc, code })
}

fn search_doc(record: &SearchRecord, cache: &Path) -> Value {
    let mut doc = json!({
        "n": record.n,
        "k": record.k,
        "condition": record.condition,
        "optimum": record.optimum,
        "exhaustive": record.exhaustive,
        "witness": record.witness,
        "cache": cache.display().to_string(),
    });
    if record.condition == PairwiseCondition::PrivateSubpath(1).name() {
        let bounds = bounds_m(record.n, record.k);
        if let Some(within) = bounds.admits(record.optimum) {
            doc["within_bounds"] = json!(within);
        }
    }
    doc
}

fn cmd_search(
    n: usize,
    condition: PairwiseCondition,
    budget: Duration,
    cache: Option<&Path>,
    ctx: &mut Context,
) -> Result<Report, Failure> {
    condition.validate_for_paths(n)?;
    if n > MAX_GRAPH_N {
        return Err(Error::TooLarge {
            vertices: path_count(n),
            max_n: MAX_GRAPH_N,
        }
        .into());
    }
    let cache = ResultsCache::locate(cache);
    let k = condition.header_k();
    if let Some(record) = cache.lookup(n, k, condition.name())? {
        ctx.notes
            .push(format!("cache hit: {}", cache.path().display()));
        return Ok(Report::ok(search_doc(&record, cache.path())));
    }
    let options = SearchOptions {
        budget: Some(budget),
        workers: ctx.workers,
    };
    let result = exact_optimum(n, condition, &options)?;
    let record = SearchRecord::from_result(&result);
    cache.append(&record)?;
    ctx.notes.push(format!(
        "searched {} nodes in {}s; appended to {}",
        record.nodes,
        record.seconds,
        cache.path().display()
    ));
    Ok(Report::ok(search_doc(&record, cache.path())))
}

fn cmd_greedy(
    n: usize,
    condition: PairwiseCondition,
    restarts: usize,
    seed: u64,
) -> Result<Report, Failure> {
    let result = greedy_lower(n, condition, restarts, seed)?;
    Ok(Report::ok(json!({
        "n": n,
        "k": condition.header_k(),
        "condition": condition.name(),
        "lower_bound": result.optimum,
        "exhaustive": false,
        "seed": seed.to_string(),
        "restarts": restarts,
        "witness": path_strings(&result.witness),
    })))
}

fn cmd_count(n: usize) -> Result<Report, Failure> {
    if n < 2 {
        return Err(usage("count needs n >= 2"));
    }
    let paths = factorial(n) / 2u32;
    let matchings = count_matchings(n);
    let mut doc = json!({
        "n": n,
        "paths": paths.to_string(),
        "matchings": matchings.to_string(),
    });
    let mut code = EXIT_OK;
    if n <= COUNT_ENUMERATION_MAX_N {
        let enumerated_paths = enumerate_paths(n).count();
        let enumerated_matchings = distinct_path_matchings(n)?;
        let agrees = paths == enumerated_paths.into() && matchings == enumerated_matchings.into();
        doc["enumerated_paths"] = json!(enumerated_paths.to_string());
        doc["enumerated_matchings"] = json!(enumerated_matchings.to_string());
        doc["agrees"] = json!(agrees);
        if !agrees {
            code = EXIT_VIOLATION;
        }
    }
    Ok(Report { doc, code })
}

fn cmd_gv(n: usize, d: usize, min_weight: usize, out: Option<&Path>) -> Result<Report, Failure> {
    let code = gv_family(n, d, min_weight)?;
    let (num, den) = gilbert_parts(n, d)?;
    let bound = gilbert_bound(n, d)?;
    let size = code.len();
    let triangles = verify_code_triangles(&code);
    let mut doc = json!({
        "n": n,
        "d": d,
        "min_weight": min_weight,
        "size": size,
        "gilbert_bound": format!("{num}/{den}"),
        "meets_gilbert_bound": num_rational::BigRational::from_integer(size.into()) >= bound,
        "triangle_violations": triangles.pairs.len(),
        "triangle_separated": triangles.is_valid(),
    });
    if let Some(path) = out {
        write_file(path, &render_code(&code))?;
        doc["file"] = json!(path.display().to_string());
    }
    Ok(Report::ok(doc))
}

fn class_item(name: &str, params: String, check: &ClassCheck) -> Value {
    json!({
        "item": name,
        "range": params,
        "passed": check.passed(),
        "detail": format!("{} classes, {} same-class pairs", check.classes, check.pairs_checked),
        "counterexample": check.counterexample.as_ref().map(|(p, q)| vec![p.to_string(), q.to_string()]),
    })
}

fn cmd_check_proofs(
    t1_max_n: usize,
    chain_max_n: usize,
    degree4_max_n: usize,
) -> Result<Report, Failure> {
    if t1_max_n < 2 {
        return Err(usage("--t1-max-n must be at least 2"));
    }
    if chain_max_n < 4 {
        return Err(usage("--chain-max-n must be at least 4"));
    }
    if degree4_max_n < 4 {
        return Err(usage("--degree4-max-n must be at least 4"));
    }
    if degree4_max_n > CLASS_CHECK_MAX_N {
        return Err(usage(format!(
            "--degree4-max-n is limited to {CLASS_CHECK_MAX_N}"
        )));
    }
    let mut items = Vec::new();

    let t1_failure = (2..=t1_max_n).find(|&n| !check_t1_upper(n));
    items.push(json!({
        "item": "t1-upper",
        "range": format!("n=2..={t1_max_n}"),
        "passed": t1_failure.is_none(),
        "detail": format!("{} values of n", t1_max_n - 1),
        "counterexample": t1_failure.map(|n| format!("n={n}")),
    }));

    let mut chain_checked = 0;
    let mut chain_failure = None;
    'chain: for n in 4..=chain_max_n {
        for k in (4..=n).step_by(2).filter(|k| n % k == 0) {
            chain_checked += 1;
            if !check_chain_t2(n, k)? {
                chain_failure = Some(format!("n={n} k={k}"));
                break 'chain;
            }
        }
    }
    items.push(json!({
        "item": "t2-chain",
        "range": format!("n=4..={chain_max_n}"),
        "passed": chain_failure.is_none(),
        "detail": format!("{chain_checked} applicable (n,k)"),
        "counterexample": chain_failure,
    }));

    for n in (4..=t1_max_n.min(MATCHING_CLASS_MAX_N)).step_by(2) {
        let check = check_matching_classes(n)?;
        items.push(class_item("matching-class", format!("n={n}"), &check));
        let expected = count_matchings(n);
        let found = check.classes;
        items.push(json!({
            "item": "matching-count",
            "range": format!("n={n}"),
            "passed": expected == found.into(),
            "detail": format!("{found} distinct matchings, formula {expected}"),
            "counterexample": null,
        }));
    }

    let check = check_skeleton_classes(8, 4)?;
    items.push(class_item("skeleton-class", "n=8 k=4".into(), &check));
    for (n, k) in [(4, 2), (6, 2), (6, 3), (8, 4)] {
        let counted = enumerate_skeleton_class(n, k)?;
        let formula = class_size(n, k)?;
        items.push(json!({
            "item": "skeleton-class-size",
            "range": format!("n={n} k={k}"),
            "passed": formula == counted.into(),
            "detail": format!("{counted} orders enumerated, formula {formula}"),
            "counterexample": null,
        }));
    }

    for n in 4..=degree4_max_n {
        let (checked, counterexample) = degree4_counterexample(n);
        items.push(json!({
            "item": "degree4-private2",
            "range": format!("n={n}"),
            "passed": counterexample.is_none(),
            "detail": format!("{checked} pairs"),
            "counterexample": counterexample.map(|(p, q)| vec![p.to_string(), q.to_string()]),
        }));
    }

    let all_passed = items.iter().all(|item| item["passed"] == json!(true));
    let code = if all_passed { EXIT_OK } else { EXIT_VIOLATION };
    Ok(Report {
        doc: json!({ "all_passed": all_passed, "items": items }),
        code,
    })
}

/// Flattens a JSON document into `key=value` lines; nested keys are joined
/// with `.`, array elements get `[i]`.
fn render_text(doc: &Value) -> String {
    fn walk(prefix: &str, value: &Value, out: &mut String) {
        match value {
            Value::Object(map) => walk_map(prefix, map, out),
            Value::Array(items) => {
                if items.is_empty() {
                    out.push_str(&format!("{prefix}=\n"));
                }
                for (i, item) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), item, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}={s}\n")),
            Value::Null => out.push_str(&format!("{prefix}=\n")),
            other => out.push_str(&format!("{prefix}={other}\n")),
        }
    }
    fn walk_map(prefix: &str, map: &Map<String, Value>, out: &mut String) {
        for (key, value) in map {
            let key = if prefix.is_empty() {
                key.clone()
            } else {
                format!("{prefix}.{key}")
            };
            walk(&key, value, out);
        }
    }
    let mut out = String::new();
    walk("", doc, &mut out);
    out
}
