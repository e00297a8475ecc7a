//! MinMax and MaxMin on doubly collinear sets.
//!
//! A matching is fixed by telling, for every point, which of its two
//! incident sectors its edge crosses: inside a sector the assigned points of
//! the two bounding half-lines pair up by rank. The solvers enumerate
//! structured assignments.

use num_traits::{Signed, Zero};

use super::onesided::{minmax_core, OneSided};
use super::{require_cos_zero, Layout};
use crate::error::{Error, Result};
use crate::instance::DcInstance;
use crate::model::{Extremum, Matching, Pair, SolveOutcome};
use crate::scalar::Scalar;

// Edge counts per sector `[red half][blue half]` when `t` edges use sector
// (0, 0); `None` if some count is negative.
fn sector_counts(lay: &Layout, t: usize) -> Option<[[usize; 2]; 2]> {
    let (r0, r1, b0) = (lay.red[0].len() as i64, lay.red[1].len() as i64, lay.blue[0].len() as i64);
    let t = t as i64;
    let x = [[t, r0 - t], [b0 - t, r1 - b0 + t]];
    if x.iter().flatten().any(|&v| v < 0) {
        return None;
    }
    Some(x.map(|row| row.map(|v| v as usize)))
}

/// MinMax in general: for every split of blue half-line 0 and every
/// placement of the consecutive small-sector runs on both blue half-lines,
/// the two red half-lines become independent one-sided subproblems.
pub fn minmax2_dc(inst: &DcInstance) -> Result<SolveOutcome> {
    let lay = Layout::new(inst);
    // Red half bounding the small sector of blue half 0, and the other one.
    let rs = lay.small_partner(0);
    let rg = 1 - rs;
    let (nb0, nb1) = (lay.blue[0].len(), lay.blue[1].len());
    let mut best: Option<(Scalar, Vec<Pair>)> = None;
    for k0 in 0..=nb0.min(lay.red[rs].len()) {
        let Some(k1) = (lay.red[rg].len() + k0).checked_sub(nb0) else { continue };
        if k1 > nb1 || k0 > lay.red[rs].len() || nb0 - k0 > lay.red[rg].len() {
            continue;
        }
        for s0 in 0..=nb0 - k0 {
            for s1 in 0..=nb1 - k1 {
                let run0 = s0..s0 + k0;
                let run1 = s1..s1 + k1;
                let sub_s = OneSided {
                    lay: &lay,
                    rh: rs,
                    red: (0..lay.red[rs].len()).collect(),
                    small_half: 0,
                    small: run0.clone().collect(),
                    big: (0..nb1).filter(|b| !run1.contains(b)).collect(),
                };
                let sub_g = OneSided {
                    lay: &lay,
                    rh: rg,
                    red: (0..lay.red[rg].len()).collect(),
                    small_half: 1,
                    small: run1.clone().collect(),
                    big: (0..nb0).filter(|b| !run0.contains(b)).collect(),
                };
                let mut value: Option<Scalar> = None;
                let mut pairs = Vec::with_capacity(inst.n());
                for sub in [&sub_s, &sub_g] {
                    if let Some((v, p)) = minmax_core(sub) {
                        if value.as_ref().is_none_or(|cur| v > *cur) {
                            value = Some(v);
                        }
                        pairs.extend(p);
                    }
                }
                let value = value.ok_or(Error::NoMatching)?;
                if best.as_ref().is_none_or(|(b, _)| value < *b) {
                    best = Some((value, pairs));
                }
            }
        }
    }
    let (_, pairs) = best.ok_or(Error::NoMatching)?;
    SolveOutcome::from_matching(inst, Matching::new(pairs)?, Extremum::Max, "dc-run-enumeration")
}

// Inclusive-exclusive rank block of `count` points on a half-line of `len`
// points: the innermost ones or the outermost ones.
fn block(len: usize, count: usize, inner: bool) -> usize {
    if inner {
        0
    } else {
        len - count
    }
}

/// A two-part assignment: `t` edges in sector (0, 0) and, per half-line,
/// which partner receives its inner part.
#[derive(Debug, Clone, Copy)]
struct TwoPart {
    x: [[usize; 2]; 2],
    red_inner: [usize; 2],
    blue_inner: [usize; 2],
}

impl TwoPart {
    // Rank of the first red and blue point used in sector (rh, bh).
    fn starts(&self, lay: &Layout, rh: usize, bh: usize) -> (usize, usize) {
        let c = self.x[rh][bh];
        (
            block(lay.red[rh].len(), c, self.red_inner[rh] == bh),
            block(lay.blue[bh].len(), c, self.blue_inner[bh] == rh),
        )
    }

    fn pairs(&self, lay: &Layout) -> Vec<Pair> {
        let mut out = Vec::new();
        for rh in 0..2 {
            for bh in 0..2 {
                let (a, b) = self.starts(lay, rh, bh);
                for i in 0..self.x[rh][bh] {
                    out.push((lay.red[rh].idx[a + i], lay.blue[bh].idx[b + i]));
                }
            }
        }
        out
    }

    // With every sector at least a right angle, lengths grow outward, so
    // the innermost edge of a sector is its shortest and the outermost its
    // longest.
    fn value_right_angles(&self, lay: &Layout, dir: Extremum) -> Option<Scalar> {
        let mut value: Option<Scalar> = None;
        for rh in 0..2 {
            for bh in 0..2 {
                let c = self.x[rh][bh];
                if c == 0 {
                    continue;
                }
                let (a, b) = self.starts(lay, rh, bh);
                let i = match dir {
                    Extremum::Min => 0,
                    Extremum::Max => c - 1,
                };
                let d = lay.length(rh, a + i, bh, b + i);
                if value.as_ref().is_none_or(|v| dir.better(&d, v)) {
                    value = Some(d);
                }
            }
        }
        value
    }
}

fn orthogonal(inst: &DcInstance, inner: Extremum, algorithm: &'static str) -> Result<SolveOutcome> {
    require_cos_zero(inst)?;
    let lay = Layout::new(inst);
    let outer = match inner {
        Extremum::Max => Extremum::Min,
        Extremum::Min => Extremum::Max,
    };
    let mut best: Option<(Scalar, TwoPart)> = None;
    for t in 0..=inst.n() {
        let Some(x) = sector_counts(&lay, t) else { continue };
        for pattern in 0..16u8 {
            let bit = |s: u8| ((pattern >> s) & 1) as usize;
            let tp = TwoPart { x, red_inner: [bit(0), bit(1)], blue_inner: [bit(2), bit(3)] };
            let Some(v) = tp.value_right_angles(&lay, inner) else { continue };
            if best.as_ref().is_none_or(|(b, _)| outer.better(&v, b)) {
                best = Some((v, tp));
            }
        }
    }
    let (_, tp) = best.ok_or(Error::NoMatching)?;
    SolveOutcome::from_matching(inst, Matching::new(tp.pairs(&lay))?, inner, algorithm)
}

/// MinMax with perpendicular lines: each half-line splits into an inner and
/// an outer part, each matched to one half-line of the other color.
pub fn minmax2_orthogonal(inst: &DcInstance) -> Result<SolveOutcome> {
    orthogonal(inst, Extremum::Max, "dc-orthogonal")
}

pub fn maxmin2_orthogonal(inst: &DcInstance) -> Result<SolveOutcome> {
    orthogonal(inst, Extremum::Min, "dc-orthogonal")
}

/// MinMax when the lines cross at an angle of at most 45 degrees: inner
/// parts go through the big sectors and outer parts through the small ones.
pub fn minmax2_small_angle(inst: &DcInstance) -> Result<SolveOutcome> {
    let c = inst.cos_alpha();
    let half = Scalar::new(1.into(), 2.into());
    if !c.is_positive() || c * c < half {
        return Err(Error::Precondition("the lines must cross at an angle of at most 45 degrees".into()));
    }
    let lay = Layout::new(inst);
    // prefix[h][k]: longest of the k outermost rank-paired edges of small
    // sector (h, h).
    let prefix: Vec<Vec<Scalar>> = (0..2)
        .map(|h| {
            let (nr, nb) = (lay.red[h].len(), lay.blue[h].len());
            let mut m = vec![Scalar::zero()];
            for i in 0..nr.min(nb) {
                let d = lay.length(h, nr - 1 - i, h, nb - 1 - i);
                let top = if d > m[i] { d } else { m[i].clone() };
                m.push(top);
            }
            m
        })
        .collect();
    let mut best: Option<(Scalar, TwoPart)> = None;
    for t in 0..=inst.n() {
        let Some(x) = sector_counts(&lay, t) else { continue };
        let tp = TwoPart { x, red_inner: [1, 0], blue_inner: [1, 0] };
        let mut v = prefix[0][x[0][0]].clone().max(prefix[1][x[1][1]].clone());
        for (rh, bh) in [(0, 1), (1, 0)] {
            if x[rh][bh] > 0 {
                let i = x[rh][bh] - 1;
                v = v.max(lay.length(rh, i, bh, i));
            }
        }
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, tp));
        }
    }
    let (_, tp) = best.ok_or(Error::NoMatching)?;
    SolveOutcome::from_matching(inst, Matching::new(tp.pairs(&lay))?, Extremum::Max, "dc-small-angle")
}
