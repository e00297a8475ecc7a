//! Seeded instance generators.
//!
//! Output is a deterministic function of `(kind, family, n, mode, seed)`.
//! The random stream is `ChaCha8Rng::seed_from_u64(seed)` from
//! `rand_chacha` 0.3; that name and a format version go into the header of
//! every generated file.

use std::collections::HashSet;

use num_integer::Integer;
use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{orientation, Orientation, Point2};
use crate::instance::{CircleInstance, DcInstance, Instance, Kind, PlanarInstance};
use crate::io::{mode_name, GeneratorHeader};
use crate::model::{Color, Mode};
use crate::scalar::{int, ratio, Scalar};

pub const PRNG_NAME: &str = "ChaCha8Rng/rand_chacha-0.3/seed_from_u64";
pub const FORMAT_VERSION: u32 = 1;

const ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// General position: rejection sampling on a small integer grid.
    Grid,
    /// General position: points `(x, x² mod p)` inside four corner points,
    /// so the hull has exactly four vertices.
    Framed,
    /// Convex position: rational points on a random ellipse.
    Ellipse,
    /// Convex position: rational points on the unit circle.
    Concyclic,
    /// Circle: distinct angles `k / D`.
    Uniform,
    /// Doubly collinear with any angle.
    Any,
    Orthogonal,
    /// Doubly collinear with `cos α ≥ 4/5`.
    SmallAngle,
    /// Doubly collinear with all red points on one side of the blue line.
    OneSided,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Grid,
        Family::Framed,
        Family::Ellipse,
        Family::Concyclic,
        Family::Uniform,
        Family::Any,
        Family::Orthogonal,
        Family::SmallAngle,
        Family::OneSided,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Grid => "grid",
            Family::Framed => "framed",
            Family::Ellipse => "ellipse",
            Family::Concyclic => "concyclic",
            Family::Uniform => "uniform",
            Family::Any => "any",
            Family::Orthogonal => "orthogonal",
            Family::SmallAngle => "small_angle",
            Family::OneSided => "one_sided",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn kind(self) -> Kind {
        match self {
            Family::Grid | Family::Framed => Kind::General,
            Family::Ellipse | Family::Concyclic => Kind::Convex,
            Family::Uniform => Kind::Circle,
            _ => Kind::DoublyCollinear,
        }
    }

    /// Family used when none is requested.
    pub fn default_for(kind: Kind, n: usize) -> Family {
        match kind {
            Kind::General if n > 32 => Family::Framed,
            Kind::General => Family::Grid,
            Kind::Convex => Family::Ellipse,
            Kind::Circle => Family::Uniform,
            Kind::DoublyCollinear => Family::Any,
        }
    }
}

/// What to generate; `n` is half the number of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: Kind,
    pub family: Option<Family>,
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: Kind, n: usize, mode: Mode, seed: u64) -> GenSpec {
        GenSpec { kind, family: None, n, mode, seed }
    }

    pub fn family(mut self, f: Family) -> GenSpec {
        self.family = Some(f);
        self
    }
}

pub fn generate(spec: &GenSpec) -> Result<(Instance, GeneratorHeader)> {
    if spec.n == 0 {
        return Err(Error::OddCount(0));
    }
    let family = spec.family.unwrap_or_else(|| Family::default_for(spec.kind, spec.n));
    if family.kind() != spec.kind {
        return Err(Error::Schema(format!("family {} does not generate {} instances", family.name(), spec.kind.name())));
    }
    if spec.kind == Kind::DoublyCollinear && spec.mode != Mode::Bi {
        return Err(Error::ColorMode);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = 2 * spec.n;
    let inst: Instance = match family {
        Family::Grid => {
            let pts = grid_points(&mut rng, m)?;
            PlanarInstance::new(Kind::General, pts, colors(&mut rng, m, spec.mode))?.into()
        }
        Family::Framed => {
            let pts = framed_points(&mut rng, m)?;
            PlanarInstance::new_trusted(Kind::General, pts, colors(&mut rng, m, spec.mode)).into()
        }
        Family::Ellipse | Family::Concyclic => {
            let pts = conic_points(&mut rng, m, family == Family::Concyclic)?;
            PlanarInstance::new(Kind::Convex, pts, colors(&mut rng, m, spec.mode))?.into()
        }
        Family::Uniform => {
            let d = (8 * m).max(16);
            let mut ks: Vec<usize> = index::sample(&mut rng, d, m).into_vec();
            ks.sort_unstable();
            let turns = ks.into_iter().map(|k| ratio(k as i64, d as i64)).collect();
            CircleInstance::new(turns, colors(&mut rng, m, spec.mode))?.into()
        }
        _ => dc_instance(&mut rng, spec.n, family)?.into(),
    };
    let header = GeneratorHeader {
        prng: PRNG_NAME.into(),
        version: FORMAT_VERSION,
        config: spec.kind.name().into(),
        family: family.name().into(),
        n: spec.n,
        mode: mode_name(spec.mode).into(),
        seed: spec.seed,
    };
    Ok((inst, header))
}

/// Shorthand for the default family.
pub fn generate_instance(kind: Kind, n: usize, mode: Mode, seed: u64) -> Result<Instance> {
    generate(&GenSpec::new(kind, n, mode, seed)).map(|(i, _)| i)
}

fn colors(rng: &mut ChaCha8Rng, m: usize, mode: Mode) -> Option<Vec<Color>> {
    if mode == Mode::Mono {
        return None;
    }
    let mut c: Vec<Color> = (0..m).map(|i| if i < m / 2 { Color::Blue } else { Color::Red }).collect();
    c.shuffle(rng);
    Some(c)
}

fn grid_points(rng: &mut ChaCha8Rng, m: usize) -> Result<Vec<Point2>> {
    let side = (4 * m as i64).max(16);
    let mut pts: Vec<Point2> = Vec::with_capacity(m);
    let mut tries = 0;
    while pts.len() < m {
        tries += 1;
        if tries > ATTEMPTS * m {
            return Err(Error::RejectionBudget(tries));
        }
        let p = Point2::from_ints(rng.gen_range(0..side), rng.gen_range(0..side));
        let clash = pts.contains(&p)
            || (0..pts.len()).any(|i| {
                (i + 1..pts.len()).any(|j| orientation(&pts[i], &pts[j], &p) == Orientation::Collinear)
            });
        if !clash {
            pts.push(p);
        }
    }
    Ok(pts)
}

fn next_prime(mut p: u64) -> u64 {
    let is_prime = |v: u64| v >= 2 && (2..).take_while(|d| d * d <= v).all(|d| !v.is_multiple_of(d));
    while !is_prime(p) {
        p += 1;
    }
    p
}

// Canonical primitive direction, equal for opposite vectors.
fn direction(dx: i64, dy: i64) -> (i64, i64) {
    let g = dx.gcd(&dy).max(1);
    let (a, b) = (dx / g, dy / g);
    if a < 0 || (a == 0 && b < 0) {
        (-a, -b)
    } else {
        (a, b)
    }
}

fn framed_points(rng: &mut ChaCha8Rng, m: usize) -> Result<Vec<Point2>> {
    if m < 6 {
        return grid_points(rng, m);
    }
    let inner = m - 4;
    let p = next_prime(4 * m as u64) as i64;
    let xs: Vec<i64> = index::sample(rng, p as usize, inner).into_iter().map(|x| x as i64).collect();
    let body: Vec<(i64, i64)> = xs.iter().map(|&x| (x, x * x % p)).collect();
    for _ in 0..ATTEMPTS {
        let mut off = || rng.gen_range(1..=p);
        let corners = [(-off(), -off()), (p + off(), -off()), (p + off(), p + off()), (-off(), p + off())];
        let cp: Vec<Point2> = corners.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect();
        let convex = (0..4).all(|i| orientation(&cp[i], &cp[(i + 1) % 4], &cp[(i + 2) % 4]) == Orientation::Ccw);
        let box_inside = [(0, 0), (p, 0), (p, p), (0, p)].iter().all(|&(x, y)| {
            let q = Point2::from_ints(x, y);
            (0..4).all(|i| orientation(&cp[i], &cp[(i + 1) % 4], &q) == Orientation::Ccw)
        });
        if !convex || !box_inside {
            continue;
        }
        // Any collinear triple passes through a corner, so distinct
        // directions from every corner rule them all out.
        let clean = corners.iter().all(|&(cx, cy)| {
            let mut seen = HashSet::with_capacity(m);
            body.iter()
                .chain(corners.iter())
                .filter(|&&q| q != (cx, cy))
                .all(|&(x, y)| seen.insert(direction(x - cx, y - cy)))
        });
        if clean {
            let mut pts: Vec<Point2> = cp;
            pts.extend(body.iter().map(|&(x, y)| Point2::from_ints(x, y)));
            pts.shuffle(rng);
            return Ok(pts);
        }
    }
    Err(Error::RejectionBudget(ATTEMPTS))
}

fn conic_points(rng: &mut ChaCha8Rng, m: usize, circle: bool) -> Result<Vec<Point2>> {
    let den = (1024 * m) as i64;
    let (a, b, cx, cy) = if circle {
        (int(1), int(1), int(0), int(0))
    } else {
        (
            int(rng.gen_range(1..=10)),
            int(rng.gen_range(1..=10)),
            int(rng.gen_range(-5..=5)),
            int(rng.gen_range(-5..=5)),
        )
    };
    for _ in 0..ATTEMPTS {
        // t = tan(θ / 2) for angles θ in (-π, π), rounded to a rational.
        let mut ts: Vec<i64> = (0..m)
            .map(|_| {
                let theta: f64 = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
                ((theta / 2.0).tan() * den as f64).round().clamp(-1e12, 1e12) as i64
            })
            .collect();
        ts.sort_unstable();
        ts.dedup();
        if ts.len() < m {
            continue;
        }
        let one = int(1);
        let two = int(2);
        return Ok(ts
            .into_iter()
            .map(|k| {
                let t = ratio(k, den);
                let tt = &t * &t;
                let q = &one + &tt;
                Point2::new(&cx + &a * (&one - &tt) / &q, &cy + &b * &two * &t / &q)
            })
            .collect());
    }
    Err(Error::RejectionBudget(ATTEMPTS))
}

const UNITS: [(i64, i64, i64); 9] =
    [(1, 0, 1), (3, 4, 5), (4, 3, 5), (5, 12, 13), (12, 5, 13), (8, 15, 17), (15, 8, 17), (7, 24, 25), (24, 7, 25)];

fn unit(rng: &mut ChaCha8Rng, from: &[(i64, i64, i64)]) -> [Scalar; 2] {
    let (a, b, c) = from[rng.gen_range(0..from.len())];
    let sx = if rng.gen_bool(0.5) { -1 } else { 1 };
    let sy = if rng.gen_bool(0.5) { -1 } else { 1 };
    [ratio(sx * a, c), ratio(sy * b, c)]
}

fn rotate(v: &[Scalar; 2], r: &[Scalar; 2]) -> [Scalar; 2] {
    [&v[0] * &r[0] - &v[1] * &r[1], &v[0] * &r[1] + &v[1] * &r[0]]
}

fn coordinates(rng: &mut ChaCha8Rng, n: usize, one_sided: bool, den: i64) -> Vec<Scalar> {
    let range = (3 * n).max(4);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    let span = if one_sided { range } else { 2 * range };
    index::sample(rng, span, n)
        .into_iter()
        .map(|k| {
            let v = if one_sided {
                sign * (k as i64 + 1)
            } else if k < range {
                -(k as i64 + 1)
            } else {
                (k - range) as i64 + 1
            };
            ratio(v, den)
        })
        .collect()
}

fn dc_instance(rng: &mut ChaCha8Rng, n: usize, family: Family) -> Result<DcInstance> {
    let frame = unit(rng, &UNITS);
    let relative = match family {
        Family::Orthogonal => [int(0), int(if rng.gen_bool(0.5) { 1 } else { -1 })],
        Family::SmallAngle => {
            let (a, b, c) = [(4, 3, 5), (12, 5, 13), (15, 8, 17), (24, 7, 25)][rng.gen_range(0..4)];
            [ratio(a, c), ratio(if rng.gen_bool(0.5) { b } else { -b }, c)]
        }
        _ => unit(rng, &UNITS[1..]),
    };
    let dir_red = frame.clone();
    let dir_blue = rotate(&relative, &frame);
    let den = rng.gen_range(1..=3);
    let red = coordinates(rng, n, family == Family::OneSided, den);
    let blue = coordinates(rng, n, false, den);
    DcInstance::new(dir_red, dir_blue, red, blue)
}
