//! `ncm`: solve, check, generate and draw non-crossing matching instances.
//!
//! Stdout carries only the JSON or SVG payload. Exit codes: 0 ok, 1 check
//! failed, 2 unsupported request, 3 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ncm_core::dispatch::{solve, Strategy, Support, CAPABILITIES};
use ncm_core::generate::{generate, Family, GenSpec};
use ncm_core::io::{mode_name, outcome_json, parse_instance, parse_matching, parse_mode, serialize_instance};
use ncm_core::oracle::{oracle_edge_feasible, DEFAULT_CAP};
use ncm_core::render::render_svg;
use ncm_core::scalar::{format_scalar, parse_scalar};
use ncm_core::scaling::{measure, Suite};
use ncm_core::{objective_value, validate_matching, Error, Instance, Kind, Matching, Variant};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ncm", version, about = "Optimal perfect non-crossing matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one variant on an instance file.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = variant)]
        variant: Variant,
        /// auto, dp, oracle or specialized.
        #[arg(long, default_value = "auto", value_parser = strategy)]
        algorithm: Strategy,
        #[arg(long)]
        emit_matching: bool,
        /// Largest point count the oracle accepts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exhaustive enumeration: the optimum of a variant, or feasibility of one edge.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = variant, required_unless_present = "edge")]
        variant: Option<Variant>,
        /// Edge `i,j` whose feasibility to decide.
        #[arg(long, value_parser = edge, conflicts_with = "variant")]
        edge: Option<(usize, usize)>,
        #[arg(long)]
        emit_matching: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Validate a matching, optionally against a claimed objective value.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        matching: PathBuf,
        #[arg(long, value_parser = variant, requires = "claim")]
        variant: Option<Variant>,
        /// Exact value `p/q` (squared length, or span on a circle).
        #[arg(long, requires = "variant")]
        claim: Option<String>,
    },
    /// Write a seeded random instance.
    Generate {
        /// general, convex, circle or doubly_collinear.
        #[arg(long, value_parser = kind)]
        kind: Kind,
        /// Half the number of points.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "mono")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = family)]
        family: Option<Family>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance and optionally a matching as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        /// A matching file or a solve output containing a matching.
        #[arg(long)]
        matching: Option<PathBuf>,
        /// Highlights the edge realizing this variant's value.
        #[arg(long, value_parser = variant, requires = "matching")]
        variant: Option<Variant>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Median running time per size and the fitted log-log slope.
    Bench {
        #[arg(long, value_parser = suite)]
        suite: Suite,
        /// Point counts, comma separated; `2^k` is accepted.
        #[arg(long, value_parser = size, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the dispatch table.
    Capabilities,
}

fn variant(s: &str) -> Result<Variant, String> {
    Variant::from_name(s).ok_or_else(|| format!("unknown variant {s:?}"))
}

fn strategy(s: &str) -> Result<Strategy, String> {
    Strategy::from_name(s).ok_or_else(|| format!("unknown algorithm {s:?}"))
}

fn kind(s: &str) -> Result<Kind, String> {
    Kind::from_name(s).ok_or_else(|| format!("unknown kind {s:?}"))
}

fn family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| format!("unknown family {s:?}"))
}

fn suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| format!("unknown suite {s:?}"))
}

fn edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn size(s: &str) -> Result<usize, String> {
    let t = s.trim();
    match t.strip_prefix("2^") {
        Some(k) => k.parse::<u32>().map(|k| 1usize << k),
        None => t.parse::<usize>(),
    }
    .map_err(|e| format!("{t:?}: {e}"))
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    tag: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_input_error() { 3 } else { 2 }, tag: e.code(), message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: 3, tag: "E_IO", message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    Ok(parse_instance(&read(path)?)?)
}

/// Reads a matching file, or the `matching` member of a solve output.
fn read_matching(path: &Path) -> Result<Matching, Failure> {
    let text = read(path)?;
    if let Ok(Value::Object(obj)) = serde_json::from_str::<Value>(&text) {
        if !obj.contains_key("pairs") {
            if let Some(m) = obj.get("matching") {
                return Ok(parse_matching(&m.to_string())?);
            }
        }
    }
    Ok(parse_matching(&text)?)
}

fn emit(payload: String, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, payload).map_err(|e| io_failure(p, e)),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Solve { input, variant, algorithm, emit_matching, cap } => {
            let inst = read_instance(&input)?;
            let out = solve(&inst, variant, algorithm, cap)?;
            emit(pretty(&outcome_json(&out, variant, emit_matching)), None)?;
        }
        Command::Oracle { input, variant, edge, emit_matching, cap } => {
            let inst = read_instance(&input)?;
            if let Some(e) = edge {
                let feasible = oracle_edge_feasible(inst.geometry(), e, cap)?;
                emit(pretty(&json!({ "edge": [e.0, e.1], "feasible": feasible })), None)?;
            } else {
                let v = variant.expect("clap enforces one of variant and edge");
                let out = solve(&inst, v, Strategy::Oracle, cap)?;
                emit(pretty(&outcome_json(&out, v, emit_matching)), None)?;
            }
        }
        Command::Verify { input, matching, variant, claim } => {
            let inst = read_instance(&input)?;
            let m = read_matching(&matching)?;
            let report = validate_matching(inst.geometry(), &m)?;
            let mut doc = json!({
                "perfect": report.perfect,
                "non_crossing": report.non_crossing,
                "color_respecting": report.color_respecting,
            });
            let mut ok = report.ok();
            if let (Some(v), Some(claim)) = (variant, claim) {
                let claimed = parse_scalar(&claim)?;
                let value = report.ok().then(|| objective_value(inst.geometry(), &m, v.inner)).transpose()?;
                if let Some((value, _)) = &value {
                    doc["value"] = json!(format_scalar(value));
                }
                let matches = value.is_some_and(|(value, _)| value == claimed);
                doc["value_match"] = json!(matches);
                ok &= matches;
            }
            emit(pretty(&doc), None)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Generate { kind, n, mode, seed, family, out } => {
            let mode = parse_mode(&mode)?;
            let mut spec = GenSpec::new(kind, n, mode, seed);
            spec.family = family;
            let (inst, header) = generate(&spec)?;
            emit(serialize_instance(&inst, Some(&header)), out.as_deref())?;
        }
        Command::Render { input, matching, variant, out } => {
            let inst = read_instance(&input)?;
            let m = matching.as_deref().map(read_matching).transpose()?;
            let witness = match (&m, variant) {
                (Some(m), Some(v)) => Some(objective_value(inst.geometry(), m, v.inner)?.1),
                _ => None,
            };
            emit(render_svg(&inst, m.as_ref(), witness), out.as_deref())?;
        }
        Command::Bench { suite, sizes, repeats, seed } => {
            let sizes = sizes.unwrap_or_else(|| suite.default_sizes());
            if sizes.len() < 2 {
                return Err(Failure { code: 3, tag: "E_ARGS", message: "need at least two sizes".into() });
            }
            let r = measure(suite, &sizes, repeats, seed)?;
            let (lo, hi) = suite.band();
            let rows: Vec<Value> =
                r.samples.iter().map(|s| json!({ "size": s.size, "median_s": s.median.as_secs_f64() })).collect();
            emit(
                pretty(&json!({
                    "suite": suite.name(),
                    "repeats": repeats,
                    "seed": seed,
                    "samples": rows,
                    "slope": r.slope,
                    "band": [lo, hi],
                    "within_band": r.within_band(),
                })),
                None,
            )?;
        }
        Command::Capabilities => {
            let rows: Vec<Value> = CAPABILITIES
                .iter()
                .map(|c| {
                    let (status, note) = match c.support {
                        Support::Solved => ("solved", None),
                        Support::Conditional(s) => ("conditional", Some(s)),
                        Support::Refused(s) => ("refused", Some(s)),
                    };
                    json!({
                        "kind": c.kind.name(),
                        "mode": mode_name(c.mode),
                        "variant": c.variant.name(),
                        "bound": c.bound,
                        "status": status,
                        "note": note,
                        "algorithms": c.algorithms,
                    })
                })
                .collect();
            emit(pretty(&Value::Array(rows)), None)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error[{}]: {}", f.tag, f.message);
            ExitCode::from(f.code)
        }
    }
}
