//! Acceptance criteria. Prints one PASS or FAIL line per criterion and exits
//! with a nonzero status if any criterion fails.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use ncm_core::circle::*;
use ncm_core::convex::*;
use ncm_core::dc::*;
use ncm_core::dispatch::{solve, Strategy};
use ncm_core::general::*;
use ncm_core::generate::{generate, Family, GenSpec};
use ncm_core::io::{float_points, parse_instance, parse_instance_with_header, serialize_instance};
use ncm_core::oracle::{enumerate_ncpm, feasible_edges, oracle_filtered, oracle_solve, DEFAULT_CAP};
use ncm_core::scalar::{int, parse_scalar, ratio};
use ncm_core::scaling::{measure, Suite};
use ncm_core::{
    objective_value, validate_matching, Error, Extremum, Instance, Kind, Matching, MatchingGeometry, Mode,
    Scalar, SolveOutcome, Variant,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const SEEDS: u64 = 200;

struct Config {
    name: &'static str,
    kind: Kind,
    mode: Mode,
    family: Option<Family>,
}

const CONFIGS: [Config; 11] = [
    Config { name: "general-mono", kind: Kind::General, mode: Mode::Mono, family: Some(Family::Grid) },
    Config { name: "convex-ellipse-mono", kind: Kind::Convex, mode: Mode::Mono, family: Some(Family::Ellipse) },
    Config { name: "convex-concyclic-mono", kind: Kind::Convex, mode: Mode::Mono, family: Some(Family::Concyclic) },
    Config { name: "convex-ellipse-bi", kind: Kind::Convex, mode: Mode::Bi, family: Some(Family::Ellipse) },
    Config { name: "convex-concyclic-bi", kind: Kind::Convex, mode: Mode::Bi, family: Some(Family::Concyclic) },
    Config { name: "circle-mono", kind: Kind::Circle, mode: Mode::Mono, family: None },
    Config { name: "circle-bi", kind: Kind::Circle, mode: Mode::Bi, family: None },
    Config { name: "dc-any", kind: Kind::DoublyCollinear, mode: Mode::Bi, family: Some(Family::Any) },
    Config { name: "dc-orthogonal", kind: Kind::DoublyCollinear, mode: Mode::Bi, family: Some(Family::Orthogonal) },
    Config { name: "dc-small-angle", kind: Kind::DoublyCollinear, mode: Mode::Bi, family: Some(Family::SmallAngle) },
    Config { name: "dc-one-sided", kind: Kind::DoublyCollinear, mode: Mode::Bi, family: Some(Family::OneSided) },
];

fn instance(kind: Kind, family: Option<Family>, n: usize, mode: Mode, seed: u64) -> Instance {
    let mut spec = GenSpec::new(kind, n, mode, seed);
    spec.family = family;
    generate(&spec).expect("generator").0
}

/// Seeded small instances with 2n <= 12.
fn corpus(c: &Config) -> impl Iterator<Item = (u64, Instance)> + '_ {
    (0..SEEDS).map(move |s| (s, instance(c.kind, c.family, 1 + s as usize % 6, c.mode, s)))
}

fn dc_of(inst: &Instance) -> &ncm_core::DcInstance {
    match inst {
        Instance::DoublyCollinear(d) => d,
        _ => unreachable!(),
    }
}

fn oracle_value(g: &dyn MatchingGeometry, v: Variant) -> Scalar {
    oracle_solve(g, v, DEFAULT_CAP).expect("oracle").value
}

// ---------------------------------------------------------------- criterion 1

fn feasibility() -> Check {
    let mut pairs = 0usize;
    for c in &CONFIGS {
        for (seed, inst) in corpus(c) {
            let g = inst.geometry();
            let table = feasible_edges(g, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let m = g.point_count();
            let predicate: Box<dyn Fn(usize, usize) -> bool> = match &inst {
                Instance::Planar(p) if p.kind() == Kind::General => {
                    let hull = hull_data(p).map_err(|e| e.to_string())?;
                    Box::new(move |i, j| edge_feasible_mono_general(p, &hull, i, j))
                }
                Instance::DoublyCollinear(d) => Box::new(move |i, j| dc_pair_feasible(d, (i, j))),
                _ => Box::new(|i, j| edge_feasible_convex(g, i, j)),
            };
            for i in 0..m {
                for j in i + 1..m {
                    if g.color(i).is_some() && g.color(i) == g.color(j) {
                        ensure!(!table[i][j], "{} seed {seed}: same-colored ({i},{j}) feasible", c.name);
                        continue;
                    }
                    pairs += 1;
                    ensure!(predicate(i, j) == table[i][j], "{} seed {seed}: edge ({i},{j})", c.name);
                }
            }
            if c.mode == Mode::Bi && c.kind != Kind::DoublyCollinear {
                let orbits = compute_orbits(g).map_err(|e| e.to_string())?;
                for i in 0..m {
                    for j in i + 1..m {
                        if g.color(i) != g.color(j) {
                            let co = orbits.orbit_of[i] == orbits.orbit_of[j];
                            ensure!(co == table[i][j], "{} seed {seed}: orbit test on ({i},{j})", c.name);
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} configurations x {SEEDS} instances, {pairs} candidate pairs", CONFIGS.len()))
}

// ---------------------------------------------------------------- criterion 2

/// Every implemented solver applicable to `inst`, with the variant it solves.
fn solver_outcomes(inst: &Instance) -> Result<Vec<(String, Variant, SolveOutcome)>, String> {
    use Variant as V;
    let mut runs: Vec<(&str, Variant, ncm_core::Result<SolveOutcome>)> = Vec::new();
    match inst {
        Instance::Planar(p) if p.kind() == Kind::General => {
            if p.colors().is_none() {
                runs.push(("minmin1_general", V::MIN_MIN, minmin1_general(p)));
                runs.push(("maxmax1_general", V::MAX_MAX, maxmax1_general(p)));
            }
        }
        Instance::Planar(p) => {
            for v in V::ALL {
                runs.push(("dp_solve_convex", v, dp_solve_convex(p, v)));
            }
            if p.colors().is_none() {
                runs.push(("minmin1_convex", V::MIN_MIN, minmin1_convex(p)));
                runs.push(("maxmax1_convex", V::MAX_MAX, maxmax1_convex(p)));
            } else {
                runs.push(("minmin2_convex", V::MIN_MIN, minmin2_convex(p)));
                runs.push(("maxmax2_convex", V::MAX_MAX, maxmax2_convex(p)));
            }
        }
        Instance::Circle(c) => {
            for v in V::ALL {
                runs.push(("dp_solve_convex", v, dp_solve_convex(c, v)));
            }
            runs.push(("minmin_circle", V::MIN_MIN, minmin_circle(c)));
            runs.push(("maxmax_circle", V::MAX_MAX, maxmax_circle(c)));
            if c.colors().is_none() {
                runs.push(("maxmin1_circle", V::MAX_MIN, maxmin1_circle(c)));
                runs.push(("minmax1_circle", V::MIN_MAX, minmax1_circle(c)));
            }
        }
        Instance::DoublyCollinear(d) => {
            runs.push(("minmin2_dc", V::MIN_MIN, minmin2_dc(d)));
            runs.push(("maxmax2_dc", V::MAX_MAX, maxmax2_dc(d)));
            runs.push(("minmax2_dc", V::MIN_MAX, minmax2_dc(d)));
            if is_one_sided(d) {
                for v in V::ALL {
                    runs.push(("onesided_dp", v, onesided_dp(d, v)));
                }
                runs.push(("onesided_minmax_fast", V::MIN_MAX, onesided_minmax_fast(d)));
            }
            if d.cos_alpha() == &int(0) {
                runs.push(("minmax2_orthogonal", V::MIN_MAX, minmax2_orthogonal(d)));
                runs.push(("maxmin2_orthogonal", V::MAX_MIN, maxmin2_orthogonal(d)));
            }
            let c = d.cos_alpha();
            if c > &int(0) && c * c >= ratio(1, 2) {
                runs.push(("minmax2_small_angle", V::MIN_MAX, minmax2_small_angle(d)));
            }
        }
    }
    for v in V::ALL {
        match solve(inst, v, Strategy::Auto, DEFAULT_CAP) {
            Err(Error::Unsupported(_)) => {}
            r => runs.push(("auto", v, r)),
        }
    }
    runs.into_iter()
        .map(|(name, v, r)| r.map(|o| (name.to_string(), v, o)).map_err(|e| format!("{name} {v}: {e}")))
        .collect()
}

fn values() -> Check {
    let mut compared = 0usize;
    for c in &CONFIGS {
        for (seed, inst) in corpus(c) {
            let g = inst.geometry();
            let best: Vec<Scalar> = Variant::ALL.iter().map(|&v| oracle_value(g, v)).collect();
            for (name, v, out) in solver_outcomes(&inst).map_err(|e| format!("{} seed {seed}: {e}", c.name))? {
                let want = &best[Variant::ALL.iter().position(|&x| x == v).unwrap()];
                ensure!(&out.value == want, "{} seed {seed}: {name} {v} gave {} want {want}", c.name, out.value);
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} solver values equal the oracle"))
}

// ---------------------------------------------------------------- criterion 3

fn mid_scale() -> Check {
    let mut convex = 0;
    for seed in 0..11u64 {
        let n = 10 + 9 * seed as usize;
        for mode in [Mode::Mono, Mode::Bi] {
            let Instance::Planar(p) = instance(Kind::Convex, None, n, mode, seed) else { unreachable!() };
            let (min, max) = match mode {
                Mode::Mono => (minmin1_convex(&p), maxmax1_convex(&p)),
                Mode::Bi => (minmin2_convex(&p), maxmax2_convex(&p)),
            };
            let dp = |v| dp_solve_convex(&p, v).map(|o| o.value).map_err(|e| e.to_string());
            ensure!(min.map_err(|e| e.to_string())?.value == dp(Variant::MIN_MIN)?, "convex minmin {mode:?} n {n}");
            ensure!(max.map_err(|e| e.to_string())?.value == dp(Variant::MAX_MAX)?, "convex maxmax {mode:?} n {n}");
            convex += 1;
        }
    }
    let mut onesided = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed as usize * 37) % 200;
        let inst = instance(Kind::DoublyCollinear, Some(Family::OneSided), n, Mode::Bi, seed);
        let d = dc_of(&inst);
        let fast = onesided_minmax_fast(d).map_err(|e| e.to_string())?.value;
        let dp = onesided_dp(d, Variant::MIN_MAX).map_err(|e| e.to_string())?.value;
        ensure!(fast == dp, "one-sided minmax seed {seed} n {n}");
        onesided += 1;
    }
    let mut special = 0;
    for seed in 0..24u64 {
        let n = 40 - (seed as usize * 3) % 39;
        for (family, solver) in [
            (Family::Orthogonal, minmax2_orthogonal as fn(&ncm_core::DcInstance) -> ncm_core::Result<SolveOutcome>),
            (Family::SmallAngle, minmax2_small_angle),
        ] {
            let inst = instance(Kind::DoublyCollinear, Some(family), n, Mode::Bi, seed);
            let d = dc_of(&inst);
            let fast = solver(d).map_err(|e| e.to_string())?.value;
            let slow = minmax2_dc(d).map_err(|e| e.to_string())?.value;
            ensure!(fast == slow, "{family:?} minmax seed {seed} n {n}");
            special += 1;
        }
    }
    Ok(format!(
        "convex fast vs DP on {convex} instances up to 2n=200, one-sided {onesided} seeds up to n=200, \
         special angles {special} instances up to n=40"
    ))
}

// ---------------------------------------------------------------- criterion 4

fn circle_lemmas(seed: u64, c: &ncm_core::CircleInstance) -> Result<usize, String> {
    let m = c.point_count();
    let all = enumerate_ncpm(c, DEFAULT_CAP).map_err(|e| e.to_string())?;
    for mm in &all {
        let shortest = mm.pairs().iter().map(|&(a, b)| c.span(a, b)).min().unwrap();
        ensure!(
            mm.pairs().iter().any(|&e| c.span(e.0, e.1) == shortest && is_boundary(m, e)),
            "circle seed {seed}: shortest edge of {:?} is not a boundary edge",
            mm.pairs()
        );
    }
    if c.colors().is_some() {
        return Ok(all.len());
    }
    let mut masks: Vec<Vec<bool>> = boundary_lengths(c).iter().map(|mu| forbidden_mask(c, mu)).collect();
    for k in 0..4u64 {
        let bits = (seed.wrapping_mul(0x9e37_79b9) >> (k * 5)) as usize;
        masks.push((0..m).map(|t| bits >> t & 1 == 1).collect());
    }
    for mask in &masks {
        let forbidden = |a: usize, b: usize| (0..m).any(|t| mask[t] && [(t, (t + 1) % m), ((t + 1) % m, t)].contains(&(a, b)));
        let exists = all.iter().any(|mm| mm.pairs().iter().all(|&(a, b)| !forbidden(a, b)));
        ensure!(has_matching_avoiding(mask) == exists, "circle seed {seed}: forbidden chain criterion, mask {mask:?}");
        ensure!(exists == (max_forbidden_chain(mask) < m / 2), "circle seed {seed}: chain length rule, mask {mask:?}");
    }
    Ok(all.len())
}

fn general_lemma(seed: u64, p: &ncm_core::PlanarInstance) -> Result<(), String> {
    let hull = hull_data(p).map_err(|e| e.to_string())?;
    let table = feasible_edges(p, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let m = p.point_count();
    let edges = || (0..m).flat_map(move |v| (v + 1..m).map(move |w| (v, w))).filter(|&(v, w)| table[v][w]);
    let longest = edges().map(|(v, w)| p.edge_length(v, w)).max().unwrap();
    ensure!(
        edges().any(|(v, w)| p.edge_length(v, w) == longest && (hull.on_hull(v) || hull.on_hull(w))),
        "general seed {seed}: no longest feasible edge touches the hull"
    );
    Ok(())
}

fn rank_of(lay: &Layout, red: bool, i: usize) -> (usize, usize) {
    let halves = if red { &lay.red } else { &lay.blue };
    (0..2).find_map(|h| halves[h].idx.iter().position(|&x| x == i).map(|rank| (h, rank))).unwrap()
}

// Ranks of the points on half-line `h` (red side or blue side) whose edges
// go to half-line `partner` of the other color.
fn ranks_to(lay: &Layout, pairs: &[(usize, usize)], red_side: bool, h: usize, partner: usize) -> Vec<usize> {
    let mut v: Vec<usize> = pairs
        .iter()
        .filter_map(|&(a, b)| {
            let (rh, ri) = rank_of(lay, true, a);
            let (bh, bi) = rank_of(lay, false, b);
            match red_side {
                true if rh == h && bh == partner => Some(ri),
                false if bh == h && rh == partner => Some(bi),
                _ => None,
            }
        })
        .collect();
    v.sort_unstable();
    v
}

fn dc_lemmas(seed: u64, d: &ncm_core::DcInstance) -> Result<(), String> {
    let lay = Layout::new(d);
    let optima = |v: Variant| -> Result<Vec<Matching>, String> {
        let best = oracle_value(d, v);
        let all = oracle_filtered(d, v.inner, DEFAULT_CAP, |_| true).map_err(|e| e.to_string())?;
        Ok(all.into_iter().filter(|(x, _)| *x == best).map(|(_, m)| m).collect())
    };
    let consecutive = |v: &[usize]| v.windows(2).all(|w| w[1] == w[0] + 1);
    let minmax = optima(Variant::MIN_MAX)?;
    ensure!(
        minmax.iter().any(|m| (0..2).all(|h| {
            let s = lay.small_partner(h);
            consecutive(&ranks_to(&lay, m.pairs(), true, h, s)) && consecutive(&ranks_to(&lay, m.pairs(), false, h, s))
        })),
        "dc seed {seed}: no MinMax optimum with consecutive small-sector runs"
    );
    if d.cos_alpha() == &int(0) {
        for v in [Variant::MIN_MAX, Variant::MAX_MIN] {
            let two_part = |side: bool, h: usize, pairs: &[(usize, usize)]| {
                let a = ranks_to(&lay, pairs, side, h, 0);
                let b = ranks_to(&lay, pairs, side, h, 1);
                let len = a.len() + b.len();
                let prefix = |x: &[usize]| x.iter().enumerate().all(|(i, &r)| r == i);
                let suffix = |x: &[usize]| x.iter().enumerate().all(|(i, &r)| r == len - x.len() + i);
                (prefix(&a) && suffix(&b)) || (prefix(&b) && suffix(&a))
            };
            ensure!(
                optima(v)?.iter().any(|m| (0..2).all(|h| two_part(true, h, m.pairs()) && two_part(false, h, m.pairs()))),
                "dc seed {seed}: no orthogonal {v} optimum splits into two parts per half-line"
            );
        }
    }
    let c = d.cos_alpha();
    if c > &int(0) && c * c >= ratio(1, 2) {
        let inner_big = |pairs: &[(usize, usize)]| {
            (0..2).all(|h| {
                [true, false].iter().all(|&side| {
                    let big = ranks_to(&lay, pairs, side, h, 1 - lay.small_partner(h));
                    big.iter().enumerate().all(|(i, &r)| r == i)
                })
            })
        };
        ensure!(minmax.iter().any(|m| inner_big(m.pairs())), "dc seed {seed}: no small-angle optimum with inner big edges");
    }
    Ok(())
}

fn lemmas() -> Check {
    let (mut circles, mut matchings, mut general, mut dcs) = (0, 0, 0, 0);
    for c in &CONFIGS {
        for (seed, inst) in corpus(c) {
            match &inst {
                Instance::Circle(ci) => {
                    matchings += circle_lemmas(seed, ci)?;
                    circles += 1;
                }
                Instance::Planar(p) if p.kind() == Kind::General => {
                    general_lemma(seed, p)?;
                    general += 1;
                }
                Instance::DoublyCollinear(d) => {
                    dc_lemmas(seed, d)?;
                    dcs += 1;
                }
                Instance::Planar(_) => {}
            }
        }
    }
    Ok(format!(
        "{circles} circle instances ({matchings} matchings), {general} general instances, {dcs} doubly collinear instances"
    ))
}

// ---------------------------------------------------------------- criterion 5

fn attains(g: &dyn MatchingGeometry, m: &Matching, inner: Extremum, value: Option<&Scalar>) -> Result<(), String> {
    let report = validate_matching(g, m).map_err(|e| e.to_string())?;
    ensure!(report.ok(), "invalid matching {:?}: {report:?}", m.pairs());
    if let Some(value) = value {
        let (got, _) = objective_value(g, m, inner).map_err(|e| e.to_string())?;
        ensure!(&got == value, "matching {:?} has value {got}, reported {value}", m.pairs());
    }
    Ok(())
}

fn constructions() -> Check {
    let mut checked = 0usize;
    for c in &CONFIGS {
        for (seed, inst) in corpus(c) {
            let g = inst.geometry();
            let ctx = |e: String| format!("{} seed {seed}: {e}", c.name);
            for (name, v, out) in solver_outcomes(&inst).map_err(ctx)? {
                let m = out.matching.as_ref().ok_or_else(|| ctx(format!("{name} {v} attached no matching")))?;
                attains(g, m, v.inner, Some(&out.value)).map_err(|e| ctx(format!("{name} {v}: {e}")))?;
                ensure!(g.edge_length(out.witness.0, out.witness.1) == out.value, "{}", ctx(format!("{name} witness")));
                checked += 1;
            }
            let table = feasible_edges(g, DEFAULT_CAP).map_err(|e| e.to_string())?;
            let m = g.point_count();
            for i in 0..m {
                for j in i + 1..m {
                    if !table[i][j] {
                        continue;
                    }
                    let built = match &inst {
                        Instance::Planar(p) if p.kind() == Kind::General => complete_matching_general(p, (i, j)),
                        Instance::DoublyCollinear(d) => dc_extend_edge(d, (i, j)),
                        _ => extend_edge_to_matching_convex(g, (i, j)),
                    }
                    .map_err(|e| ctx(format!("extending ({i},{j}): {e}")))?;
                    ensure!(built.contains(i, j), "{}", ctx(format!("extension of ({i},{j}) drops the edge")));
                    attains(g, &built, Extremum::Min, None).map_err(ctx)?;
                    checked += 1;
                }
            }
            match &inst {
                Instance::Circle(ci) if ci.colors().is_none() => {
                    for mu in boundary_lengths(ci) {
                        let possible = has_matching_avoiding(&forbidden_mask(ci, &mu));
                        match construct_matching_with_threshold(ci, &mu) {
                            Ok(mm) => {
                                ensure!(possible, "{}", ctx(format!("threshold {mu} built an impossible matching")));
                                attains(g, &mm, Extremum::Min, None).map_err(ctx)?;
                                ensure!(
                                    mm.pairs().iter().all(|&(a, b)| ci.span(a, b) >= mu),
                                    "{}",
                                    ctx(format!("threshold {mu} violated"))
                                );
                                checked += 1;
                            }
                            Err(e) => ensure!(!possible, "{}", ctx(format!("threshold {mu}: {e}"))),
                        }
                    }
                }
                Instance::Planar(p) if p.kind() == Kind::Convex => {
                    attains(g, &arbitrary_matching_convex(p).map_err(|e| e.to_string())?, Extremum::Min, None).map_err(ctx)?;
                }
                Instance::DoublyCollinear(d) => {
                    attains(g, &dc_arbitrary_matching(d).map_err(|e| e.to_string())?, Extremum::Min, None).map_err(ctx)?;
                }
                _ => {}
            }
        }
    }
    Ok(format!("{checked} constructed matchings valid"))
}

// ---------------------------------------------------------------- criterion 6

fn scaling() -> Check {
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    for suite in Suite::ALL {
        let t = Instant::now();
        let sizes = suite.default_sizes();
        let r = measure(suite, &sizes, 5, 0).map_err(|e| e.to_string())?;
        let elapsed = t.elapsed();
        let (lo, hi) = suite.band();
        let medians: Vec<String> = r.samples.iter().map(|s| format!("{}:{:.3}s", s.size, s.median.as_secs_f64())).collect();
        let line = format!(
            "{} slope {:.3} in [{lo}, {hi}] ({}) wall {:.0}s",
            suite.name(),
            r.slope,
            medians.join(" "),
            elapsed.as_secs_f64()
        );
        eprintln!("    {line}");
        if !r.within_band() || elapsed > Duration::from_secs(600) {
            failed.push(line.clone());
        }
        lines.push(line);
    }
    ensure!(failed.is_empty(), "{}", failed.join("; "));
    Ok(lines.join("; "))
}

// ---------------------------------------------------------------- criterion 7

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

fn ncm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncm")).args(args).output().expect("run ncm")
}

fn determinism() -> Check {
    let files = corpus_files();
    ensure!(!files.is_empty(), "no corpus files");
    let mut runs = 0;
    for f in &files {
        let text = fs::read_to_string(f).map_err(|e| e.to_string())?;
        let (inst, header) = parse_instance_with_header(&text).map_err(|e| format!("{}: {e}", f.display()))?;
        let again = serialize_instance(&inst, header.as_ref());
        ensure!(again == text, "{}: serialization is not byte-identical", f.display());
        ensure!(parse_instance(&again).map_err(|e| e.to_string())? == inst, "{}: parse(serialize) differs", f.display());
        let path = f.to_str().unwrap();
        for v in Variant::ALL {
            let args = ["solve", "--in", path, "--variant", v.name(), "--emit-matching"];
            let (a, b) = (ncm(&args), ncm(&args));
            ensure!(a.status.code().is_some_and(|c| c == 0 || c == 2), "{path} {v}: status {:?}", a.status);
            ensure!(
                a.status == b.status && a.stdout == b.stdout && a.stderr == b.stderr,
                "{path} {v}: outputs differ between runs"
            );
            runs += 1;
        }
    }
    for (kind, mode) in [("general", "mono"), ("convex", "bi"), ("circle", "bi"), ("doubly_collinear", "bi")] {
        let args = ["generate", "--kind", kind, "--n", "20", "--mode", mode, "--seed", "99"];
        let (a, b) = (ncm(&args), ncm(&args));
        ensure!(a.status.success() && a.stdout == b.stdout, "generate {kind} is not deterministic");
    }
    Ok(format!("{} corpus files round-trip, {runs} solve runs byte-identical", files.len()))
}

// ---------------------------------------------------------------- criterion 8

fn figure() -> Check {
    let demo = corpus_dir().join("demo.json");
    let demo_path = demo.to_str().unwrap();
    let inst = parse_instance(&fs::read_to_string(&demo).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let pts = float_points(&inst);
    let out_dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("figure");
    fs::create_dir_all(&out_dir).map_err(|e| e.to_string())?;
    let mut values = Vec::new();
    for v in Variant::ALL {
        let solve_file = out_dir.join(format!("{}.json", v.name()));
        let svg_file = out_dir.join(format!("{}.svg", v.name()));
        let mut o = ncm(&["solve", "--in", demo_path, "--variant", v.name(), "--emit-matching"]);
        if o.status.code() == Some(2) {
            o = ncm(&["solve", "--in", demo_path, "--variant", v.name(), "--algorithm", "oracle", "--emit-matching"]);
        }
        ensure!(o.status.success(), "solve {v}: {}", String::from_utf8_lossy(&o.stderr));
        fs::write(&solve_file, &o.stdout).map_err(|e| e.to_string())?;
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
        let value = parse_scalar(doc["value_sq"].as_str().unwrap_or_default()).map_err(|e| e.to_string())?;
        let w = [doc["witness"][0].as_u64().unwrap() as usize, doc["witness"][1].as_u64().unwrap() as usize];

        let r = ncm(&[
            "render",
            "--in",
            demo_path,
            "--matching",
            solve_file.to_str().unwrap(),
            "--variant",
            v.name(),
            "--out",
            svg_file.to_str().unwrap(),
        ]);
        ensure!(r.status.success(), "render {v}: {}", String::from_utf8_lossy(&r.stderr));
        let svg = fs::read_to_string(&svg_file).map_err(|e| format!("{}: {e}", svg_file.display()))?;
        let xml = roxmltree::Document::parse(&svg).map_err(|e| format!("{v}: malformed SVG: {e}"))?;
        let root = xml.root_element();
        ensure!(root.tag_name().name() == "svg", "{v}: root is not svg");
        let circles = root.descendants().filter(|n| n.has_tag_name("circle")).count();
        let lines: Vec<_> = root.descendants().filter(|n| n.has_tag_name("line")).collect();
        let witnesses: Vec<_> = lines.iter().filter(|n| n.attribute("class") == Some("witness")).collect();
        ensure!(circles == pts.len(), "{v}: {circles} point glyphs for {} points", pts.len());
        ensure!(lines.len() == pts.len() / 2, "{v}: {} edges drawn", lines.len());
        ensure!(witnesses.len() == 1, "{v}: {} witness edges", witnesses.len());
        let coord = |name: &str| witnesses[0].attribute(name).and_then(|s| s.parse::<f64>().ok()).unwrap_or(f64::NAN);
        let ends = [(coord("x1"), -coord("y1")), (coord("x2"), -coord("y2"))];
        let near = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).abs() < 1e-5 && (a.1 - b.1).abs() < 1e-5;
        ensure!(
            (near(ends[0], pts[w[0]]) && near(ends[1], pts[w[1]])) || (near(ends[0], pts[w[1]]) && near(ends[1], pts[w[0]])),
            "{v}: highlighted edge is not the witness {w:?}"
        );
        values.push(value);
    }
    let [minmin, maxmax, minmax, maxmin] = [&values[0], &values[1], &values[2], &values[3]];
    ensure!(minmin <= maxmin && maxmin <= maxmax, "MinMin <= MaxMin <= MaxMax fails: {minmin} {maxmin} {maxmax}");
    ensure!(minmin <= minmax && minmax <= maxmax, "MinMin <= MinMax <= MaxMax fails: {minmin} {minmax} {maxmax}");
    Ok(format!(
        "values minmin={minmin} maxmin={maxmin} minmax={minmax} maxmax={maxmax}, SVGs in {}",
        out_dir.display()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("feasibility equals the oracle", feasibility),
        ("solver values equal the oracle", values),
        ("mid-scale cross-validation", mid_scale),
        ("structural lemmas", lemmas),
        ("constructed matchings are valid", constructions),
        ("scaling slopes", scaling),
        ("determinism and round-trip", determinism),
        ("figure reproduction", figure),
    ];
    let only: Option<usize> = std::env::var("NCM_ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failures = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let k = k + 1;
        if only.is_some_and(|o| o != k) {
            continue;
        }
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {k}: {title} [{secs:.1}s] {detail}"),
            Err(reason) => {
                failures += 1;
                println!("FAIL criterion {k}: {title} [{secs:.1}s] {reason}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
