//! Empirical running-time measurement: median wall time per size and the
//! least-squares slope of log time against log size.

use std::time::{Duration, Instant};

use crate::circle::maxmin1_circle;
use crate::convex::dp_solve_convex;
use crate::dc::minmin2_dc;
use crate::error::{Error, Result};
use crate::general::minmin1_general;
use crate::generate::{generate, Family, GenSpec};
use crate::instance::{Instance, Kind};
use crate::model::{Mode, SolveOutcome, Variant};

/// A timed solver on a generated family. Sizes are point counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    CircleMaxMin,
    DcMinMin,
    ConvexDpMaxMin,
    GeneralMinMin,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::CircleMaxMin, Suite::DcMinMin, Suite::ConvexDpMaxMin, Suite::GeneralMinMin];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CircleMaxMin => "circle-maxmin",
            Suite::DcMinMin => "dc-minmin",
            Suite::ConvexDpMaxMin => "convex-dp-maxmin",
            Suite::GeneralMinMin => "general-minmin",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Suite::CircleMaxMin | Suite::DcMinMin => (17..=20).map(|k| 1 << k).collect(),
            Suite::ConvexDpMaxMin => vec![100, 200, 400, 800],
            Suite::GeneralMinMin => (15..=18).map(|k| 1 << k).collect(),
        }
    }

    /// Accepted slope range.
    pub fn band(self) -> (f64, f64) {
        match self {
            Suite::CircleMaxMin | Suite::DcMinMin => (0.8, 1.3),
            Suite::ConvexDpMaxMin => (2.5, 3.5),
            Suite::GeneralMinMin => (0.8, 1.4),
        }
    }

    fn spec(self, size: usize, seed: u64) -> GenSpec {
        let n = size / 2;
        match self {
            Suite::CircleMaxMin => GenSpec::new(Kind::Circle, n, Mode::Mono, seed),
            Suite::DcMinMin => GenSpec::new(Kind::DoublyCollinear, n, Mode::Bi, seed),
            Suite::ConvexDpMaxMin => GenSpec::new(Kind::Convex, n, Mode::Mono, seed),
            Suite::GeneralMinMin => GenSpec::new(Kind::General, n, Mode::Mono, seed).family(Family::Framed),
        }
    }

    pub fn instance(self, size: usize, seed: u64) -> Result<Instance> {
        if size < 2 || size % 2 == 1 {
            return Err(Error::OddCount(size));
        }
        Ok(generate(&self.spec(size, seed))?.0)
    }

    pub fn run(self, inst: &Instance) -> Result<SolveOutcome> {
        match (self, inst) {
            (Suite::CircleMaxMin, Instance::Circle(c)) => maxmin1_circle(c),
            (Suite::DcMinMin, Instance::DoublyCollinear(d)) => minmin2_dc(d),
            (Suite::ConvexDpMaxMin, Instance::Planar(p)) => dp_solve_convex(p, Variant::MAX_MIN),
            (Suite::GeneralMinMin, Instance::Planar(p)) => minmin1_general(p),
            _ => Err(Error::Precondition(format!("suite {} got a {} instance", self.name(), inst.kind().name()))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub size: usize,
    pub median: Duration,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub samples: Vec<Sample>,
    pub slope: f64,
}

impl Report {
    pub fn within_band(&self) -> bool {
        let (lo, hi) = self.suite.band();
        (lo..=hi).contains(&self.slope)
    }
}

/// Median of `repeats` timed runs per size, after one untimed warmup run.
/// Instance generation is not timed.
pub fn measure(suite: Suite, sizes: &[usize], repeats: usize, seed: u64) -> Result<Report> {
    let repeats = repeats.max(1);
    let mut samples = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let inst = suite.instance(size, seed)?;
        suite.run(&inst)?;
        let mut times: Vec<Duration> = (0..repeats)
            .map(|_| {
                let t = Instant::now();
                let out = suite.run(&inst);
                let elapsed = t.elapsed();
                std::hint::black_box(out).map(|_| elapsed)
            })
            .collect::<Result<_>>()?;
        times.sort_unstable();
        samples.push(Sample { size, median: times[times.len() / 2] });
    }
    let points: Vec<(f64, f64)> = samples.iter().map(|s| (s.size as f64, s.median.as_secs_f64())).collect();
    Ok(Report { suite, slope: log_log_slope(&points), samples })
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.max(1e-12).ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}
