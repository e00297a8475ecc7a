//! Monochromatic matchings of points in general position: edge feasibility
//! from side parities, weak radial orderings around hull vertices, MinMin
//! and MaxMax, and completion of a feasible edge into a matching.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geom::{convex_hull, orientation, squared_distance, Orientation, Point2};
use crate::instance::PlanarInstance;
use crate::model::{norm_pair, Best, Extremum, Matching, MatchingGeometry, Mode, Pair, SolveOutcome};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullData {
    /// Counterclockwise hull vertices.
    pub hull: Vec<usize>,
    pub interior: Vec<usize>,
    /// Position on the hull of each point, if any.
    pub position: Vec<Option<usize>>,
}

impl HullData {
    pub fn h(&self) -> usize {
        self.hull.len()
    }

    pub fn on_hull(&self, i: usize) -> bool {
        self.position[i].is_some()
    }
}

pub fn hull_data(inst: &PlanarInstance) -> Result<HullData> {
    let pts = inst.points();
    let hull = if pts.len() < 3 { (0..pts.len()).collect() } else { convex_hull(pts)? };
    let mut position = vec![None; pts.len()];
    for (k, &i) in hull.iter().enumerate() {
        position[i] = Some(k);
    }
    let interior = (0..pts.len()).filter(|&i| position[i].is_none()).collect();
    Ok(HullData { hull, interior, position })
}

fn require_mono(inst: &PlanarInstance) -> Result<()> {
    if inst.mode() != Mode::Mono {
        return Err(Error::Precondition("general-position solvers are monochromatic".into()));
    }
    Ok(())
}

/// Number of points strictly left of the directed line `v -> w`.
fn count_left(pts: &[Point2], v: usize, w: usize) -> usize {
    pts.iter()
        .filter(|p| orientation(&pts[v], &pts[w], p) == Orientation::Ccw)
        .count()
}

/// An edge is infeasible exactly when both endpoints are hull vertices and
/// both open sides of its line hold an odd number of points.
pub fn edge_feasible_mono_general(inst: &PlanarInstance, hull: &HullData, v: usize, w: usize) -> bool {
    if !hull.on_hull(v) || !hull.on_hull(w) {
        return true;
    }
    count_left(inst.points(), v, w).is_multiple_of(2)
}

/// Angular view from one hull vertex: the other hull vertices in order, with
/// only the number of interior points in each cone between neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakRadialOrdering {
    pub apex: usize,
    /// `q_{i+1}, ..., q_{i-1}`.
    pub hull_seq: Vec<usize>,
    /// `counts[k]` interior points lie strictly between `hull_seq[k]` and
    /// `hull_seq[k + 1]`.
    pub counts: Vec<usize>,
}

pub fn weak_radial_orderings(inst: &PlanarInstance, hull: &HullData) -> Vec<WeakRadialOrdering> {
    let pts = inst.points();
    let h = hull.h();
    (0..h)
        .map(|i| {
            let apex = hull.hull[i];
            let hull_seq: Vec<usize> = (1..h).map(|k| hull.hull[(i + k) % h]).collect();
            let mut counts = vec![0; hull_seq.len().saturating_sub(1)];
            let q = &pts[apex];
            for &p in &hull.interior {
                // Left of the ray to hull_seq[k] holds for a prefix of k.
                let (mut lo, mut hi) = (0, hull_seq.len() - 1);
                while hi - lo > 1 {
                    let mid = (lo + hi) / 2;
                    if orientation(q, &pts[hull_seq[mid]], &pts[p]) == Orientation::Ccw {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                counts[lo] += 1;
            }
            WeakRadialOrdering { apex, hull_seq, counts }
        })
        .collect()
}

/// Feasibility of every hull-hull pair, indexed by hull positions, obtained
/// by walking each weak radial ordering: moving from `q_j` to `q_{j+1}` flips
/// feasibility exactly when the cone between them holds an even count.
pub fn parity_walk(orderings: &[WeakRadialOrdering]) -> Vec<Vec<bool>> {
    let h = orderings.len();
    let mut f = vec![vec![false; h]; h];
    for (i, o) in orderings.iter().enumerate() {
        if h < 2 {
            break;
        }
        let mut feasible = true;
        f[i][(i + 1) % h] = true;
        for (t, &c) in o.counts.iter().enumerate() {
            if c % 2 == 0 {
                feasible = !feasible;
            }
            f[i][(i + t + 2) % h] = feasible;
        }
    }
    f
}

fn hull_pair_extremum(inst: &PlanarInstance, hull: &HullData, feasible: &[Vec<bool>], best: &mut Best) {
    let h = hull.h();
    for a in 0..h {
        for b in a + 1..h {
            if feasible[a][b] {
                let (v, w) = (hull.hull[a], hull.hull[b]);
                best.offer(inst.edge_length(v, w), (v, w));
            }
        }
    }
}

// Closest pair with at least one interior endpoint: x-sorted sweep over a
// y-ordered active set, all comparisons on squared lengths.
fn closest_non_hull_pair(inst: &PlanarInstance, hull: &HullData, best: &mut Best) {
    if hull.interior.is_empty() {
        return;
    }
    let pts = inst.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| pts[i].lex_cmp(&pts[j]));
    let mut active: BTreeSet<(Scalar, usize)> = BTreeSet::new();
    let mut left = 0;
    let mut delta: Option<Scalar> = None;
    let within = |d: &Scalar, delta: &Option<Scalar>| delta.as_ref().is_none_or(|b| d <= b);
    for &q in &order {
        while left < order.len() {
            let p = order[left];
            if p == q {
                break;
            }
            let dx = &pts[q].x - &pts[p].x;
            if within(&(&dx * &dx), &delta) {
                break;
            }
            active.remove(&(pts[p].y.clone(), p));
            left += 1;
        }
        let key = (pts[q].y.clone(), q);
        let mut visit = |p: usize, delta: &mut Option<Scalar>| -> bool {
            let dy = &pts[q].y - &pts[p].y;
            if !within(&(&dy * &dy), delta) {
                return false;
            }
            if hull.on_hull(p) && hull.on_hull(q) {
                return true;
            }
            let d = squared_distance(&pts[p], &pts[q]);
            if within(&d, delta) {
                best.offer(d.clone(), norm_pair(p, q));
                *delta = Some(d);
            }
            true
        };
        for (_, p) in active.range(&key..) {
            if !visit(*p, &mut delta) {
                break;
            }
        }
        for (_, p) in active.range(..&key).rev() {
            if !visit(*p, &mut delta) {
                break;
            }
        }
        active.insert(key);
    }
}

/// Shortest feasible edge, completed into a matching.
pub fn minmin1_general(inst: &PlanarInstance) -> Result<SolveOutcome> {
    require_mono(inst)?;
    let hull = hull_data(inst)?;
    let mut best = Best::new(Extremum::Min);
    closest_non_hull_pair(inst, &hull, &mut best);
    let feasible = parity_walk(&weak_radial_orderings(inst, &hull));
    hull_pair_extremum(inst, &hull, &feasible, &mut best);
    finish(inst, &hull, best, Extremum::Min, "general-minmin")
}

/// Longest feasible edge. Some longest feasible edge always has a hull
/// endpoint, so interior-interior pairs are never inspected.
pub fn maxmax1_general(inst: &PlanarInstance) -> Result<SolveOutcome> {
    require_mono(inst)?;
    let hull = hull_data(inst)?;
    let mut best = Best::new(Extremum::Max);
    for &p in &hull.interior {
        for &q in &hull.hull {
            best.offer(inst.edge_length(p, q), norm_pair(p, q));
        }
    }
    let feasible = parity_walk(&weak_radial_orderings(inst, &hull));
    hull_pair_extremum(inst, &hull, &feasible, &mut best);
    finish(inst, &hull, best, Extremum::Max, "general-maxmax")
}

fn finish(inst: &PlanarInstance, hull: &HullData, best: Best, inner: Extremum, algorithm: &'static str) -> Result<SolveOutcome> {
    let (_, e) = best.into_inner().ok_or(Error::NoMatching)?;
    let m = complete_with_hull(inst, hull, e)?;
    SolveOutcome::from_matching(inst, m, inner, algorithm)
}

pub fn complete_matching_general(inst: &PlanarInstance, e: Pair) -> Result<Matching> {
    require_mono(inst)?;
    complete_with_hull(inst, &hull_data(inst)?, e)
}

fn complete_with_hull(inst: &PlanarInstance, hull: &HullData, e: Pair) -> Result<Matching> {
    let pts = inst.points();
    let (v, w) = e;
    if v == w || v >= pts.len() || w >= pts.len() {
        return Err(Error::IndexOutOfRange(v.max(w)));
    }
    if !edge_feasible_mono_general(inst, hull, v, w) {
        return Err(Error::InfeasibleEdge(v, w));
    }
    let side = |i: usize| orientation(&pts[v], &pts[w], &pts[i]);
    let (mut left, mut right): (Vec<usize>, Vec<usize>) =
        (0..pts.len()).filter(|&i| i != v && i != w).partition(|&i| side(i) == Orientation::Ccw);
    let mut pairs = vec![(v, w)];
    if left.len() % 2 == 1 {
        // A hull edge crossing line(e) fixes both parities.
        let h = hull.h();
        let bridge = (0..h)
            .map(|k| (hull.hull[k], hull.hull[(k + 1) % h]))
            .find(|&(a, b)| ![a, b].iter().any(|x| *x == v || *x == w) && side(a) != side(b))
            .ok_or(Error::InfeasibleEdge(v, w))?;
        pairs.push(bridge);
        left.retain(|&i| i != bridge.0 && i != bridge.1);
        right.retain(|&i| i != bridge.0 && i != bridge.1);
    }
    for group in [left, right] {
        pairs.extend(slab_pairs(pts, &group));
    }
    Matching::new(pairs)
}

// Pairs consecutive points in lexicographic order, which is the order of
// projections on a direction turned slightly off the x axis; consecutive
// pairs then occupy disjoint slabs.
fn slab_pairs(pts: &[Point2], group: &[usize]) -> Vec<Pair> {
    let mut sorted = group.to_vec();
    sorted.sort_by(|&i, &j| pts[i].lex_cmp(&pts[j]));
    sorted.chunks(2).map(|c| norm_pair(c[0], c[1])).collect()
}
