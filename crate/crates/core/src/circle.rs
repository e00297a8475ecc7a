//! Points on a circle.
//!
//! Every routine except the antipodal search reads lengths through
//! [`MatchingGeometry::edge_length`], so it runs equally on arc spans of a
//! [`CircleInstance`] and on squared lengths of concyclic rational points.
//! Correctness relies on the decreasing chords property of the circle: the
//! shortest edge of any matching is a boundary edge.

use std::collections::VecDeque;

use crate::convex::{compute_orbits, extend_edge_to_matching_convex};
use crate::error::{Error, Result};
use crate::instance::CircleInstance;
use crate::model::{norm_pair, Best, Color, Extremum, Matching, MatchingGeometry, Mode, Pair, SolveOutcome};
use crate::scalar::Scalar;

fn require_circle<G: MatchingGeometry + ?Sized>(g: &G, mode: Option<Mode>) -> Result<()> {
    if !g.convex_order() {
        return Err(Error::Precondition("points must be in circular order".into()));
    }
    if let Some(mode) = mode {
        if g.mode() != mode {
            return Err(Error::Precondition(format!("expected a {mode:?} instance")));
        }
    }
    Ok(())
}

/// Length of boundary edge `(i, i+1)` for every `i`, cyclically.
pub fn boundary_lengths<G: MatchingGeometry + ?Sized>(g: &G) -> Vec<Scalar> {
    let m = g.point_count();
    (0..m).map(|i| g.edge_length(i, (i + 1) % m)).collect()
}

/// Boundary edges strictly shorter than `mu` are forbidden.
pub fn forbidden_mask<G: MatchingGeometry + ?Sized>(g: &G, mu: &Scalar) -> Vec<bool> {
    boundary_lengths(g).iter().map(|b| b < mu).collect()
}

/// Longest circular run of `true`.
pub fn max_forbidden_chain(mask: &[bool]) -> usize {
    if mask.iter().all(|&f| f) {
        return mask.len();
    }
    let start = mask.iter().position(|&f| !f).expect("some allowed edge");
    let (mut best, mut run) = (0, 0);
    for t in 1..=mask.len() {
        if mask[(start + t) % mask.len()] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// A matching avoiding every forbidden boundary edge exists iff the longest
/// forbidden chain is shorter than half the point count.
pub fn has_matching_avoiding(mask: &[bool]) -> bool {
    max_forbidden_chain(mask) < mask.len() / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowMin {
    /// First index of the winning window.
    pub start: usize,
    /// Index of the window's maximum.
    pub argmax: usize,
}

/// Minimum over all circular windows of `window` consecutive entries of the
/// window maximum, with a monotone deque. Equal maxima keep the earliest
/// index and equal windows keep the earliest start.
pub fn sliding_window_min_of_max<T: Ord>(values: &[T], window: usize) -> Result<WindowMin> {
    let len = values.len();
    if len == 0 || window == 0 || window > len {
        return Err(Error::Precondition("window must fit in a nonempty sequence".into()));
    }
    let mut dq: VecDeque<usize> = VecDeque::new();
    let mut best: Option<WindowMin> = None;
    for t in 0..len + window - 1 {
        let v = &values[t % len];
        while dq.back().is_some_and(|&b| values[b % len] < *v) {
            dq.pop_back();
        }
        dq.push_back(t);
        if t + 1 < window {
            continue;
        }
        let start = t + 1 - window;
        while dq.front().is_some_and(|&f| f < start) {
            dq.pop_front();
        }
        let argmax = dq.front().copied().expect("window nonempty") % len;
        if best.is_none_or(|b| values[argmax] < values[b.argmax]) {
            best = Some(WindowMin { start, argmax });
        }
    }
    Ok(best.expect("at least one window"))
}

/// Largest smallest edge: the minimum over windows of `n` consecutive
/// boundary edges of the window's longest edge.
pub fn maxmin1_circle<G: MatchingGeometry + ?Sized>(g: &G) -> Result<SolveOutcome> {
    require_circle(g, Some(Mode::Mono))?;
    let bounds = boundary_lengths(g);
    let w = sliding_window_min_of_max(&bounds, g.point_count() / 2)?;
    let m = construct_matching_with_threshold(g, &bounds[w.argmax])?;
    SolveOutcome::from_matching(g, m, Extremum::Min, "circle-sliding-window")
}

/// A matching whose edges are all at least `mu` long, built by repeatedly
/// matching the allowed edge in front of a longest forbidden chain. Chains
/// only shrink, so lazily maintained buckets keep the total work linear.
pub fn construct_matching_with_threshold<G: MatchingGeometry + ?Sized>(g: &G, mu: &Scalar) -> Result<Matching> {
    require_circle(g, Some(Mode::Mono))?;
    let m = g.point_count();
    let mask = forbidden_mask(g, mu);
    if !has_matching_avoiding(&mask) {
        return Err(Error::NoMatching);
    }
    let mut prev: Vec<usize> = (0..m).map(|i| (i + m - 1) % m).collect();
    let mut next: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let mut alive = vec![true; m];
    // Chains: first endpoint and length; end_of maps a last endpoint to its chain.
    let mut start: Vec<usize> = Vec::new();
    let mut length: Vec<usize> = Vec::new();
    let mut end_of: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        if mask[i] && !mask[(i + m - 1) % m] {
            let mut l = 0;
            while mask[(i + l) % m] {
                l += 1;
            }
            end_of[(i + l) % m] = Some(start.len());
            start.push(i);
            length.push(l);
        }
    }
    let top = length.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for (c, &l) in length.iter().enumerate() {
        buckets[l].push(c);
    }
    let mut pairs = Vec::with_capacity(m / 2);
    let mut b = top;
    while b > 0 {
        let Some(c) = buckets[b].pop() else {
            b -= 1;
            continue;
        };
        if length[c] != b {
            if length[c] > 0 {
                buckets[length[c]].push(c);
            }
            continue;
        }
        let i = start[c];
        let p1 = prev[i];
        let (p2, s) = (prev[p1], next[i]);
        pairs.push(norm_pair(p1, i));
        alive[p1] = false;
        alive[i] = false;
        next[p2] = s;
        prev[s] = p2;
        // The chain loses its first edge (i, s).
        length[c] -= 1;
        start[c] = s;
        // A chain ending at p1 loses its last edge (p2, p1).
        if let Some(d) = end_of[p1].take() {
            length[d] -= 1;
            if length[d] > 0 {
                end_of[p2] = Some(d);
            }
        }
        if length[c] == 0 {
            if let Some(e) = end_of[s] {
                if e == c {
                    end_of[s] = None;
                }
            }
        } else {
            buckets[length[c]].push(c);
        }
    }
    if let Some(first) = (0..m).find(|&i| alive[i]) {
        let mut i = first;
        loop {
            let j = next[i];
            pairs.push(norm_pair(i, j));
            i = next[j];
            if i == first {
                break;
            }
        }
    }
    Matching::new(pairs)
}

/// The better of the two matchings made only of boundary edges.
pub fn minmax1_circle<G: MatchingGeometry + ?Sized>(g: &G) -> Result<SolveOutcome> {
    require_circle(g, Some(Mode::Mono))?;
    let m = g.point_count();
    let mut best: Option<SolveOutcome> = None;
    for shift in 0..2.min(m - 1) {
        let pairs = (0..m / 2).map(|k| norm_pair(2 * k + shift, (2 * k + 1 + shift) % m));
        let out = SolveOutcome::from_matching(g, Matching::new(pairs)?, Extremum::Max, "circle-boundary")?;
        if best.as_ref().is_none_or(|b| out.value < b.value) {
            best = Some(out);
        }
    }
    best.ok_or(Error::NoMatching)
}

/// Shortest boundary edge with compatible endpoints; in bichromatic mode
/// adjacent opposite colors are always in one orbit.
pub fn minmin_circle<G: MatchingGeometry + ?Sized>(g: &G) -> Result<SolveOutcome> {
    require_circle(g, None)?;
    let m = g.point_count();
    let mut best = Best::new(Extremum::Min);
    for i in 0..m {
        let j = (i + 1) % m;
        if g.compatible(i, j) {
            best.offer(g.edge_length(i, j), norm_pair(i, j));
        }
    }
    let (_, e) = best.into_inner().ok_or(Error::NoMatching)?;
    let matching = extend_edge_to_matching_convex(g, e)?;
    SolveOutcome::from_matching(g, matching, Extremum::Min, "circle-boundary-min")
}

// Nearest entry of `sorted` (turns, with owner index) to the antipode of `t`.
fn antipodal_candidates(sorted: &[(Scalar, usize)], t: &Scalar) -> [usize; 2] {
    let half = Scalar::new(1.into(), 2.into());
    let one = Scalar::from_integer(1.into());
    let mut a = t + &half;
    if a >= one {
        a -= one;
    }
    let k = sorted.partition_point(|(x, _)| *x < a);
    let len = sorted.len();
    [sorted[k % len].1, sorted[(k + len - 1) % len].1]
}

/// Longest feasible chord: for each point the partner nearest its
/// antipode among feasible partners (opposite index parity, or the
/// opposite color within its orbit).
pub fn maxmax_circle(inst: &CircleInstance) -> Result<SolveOutcome> {
    let m = inst.point_count();
    let groups: Vec<(Vec<usize>, Vec<usize>)> = match inst.mode() {
        Mode::Mono => vec![(0..m).partition(|i| i % 2 == 0)],
        Mode::Bi => compute_orbits(inst)?
            .orbits
            .into_iter()
            .map(|o| o.into_iter().partition(|&i| inst.color(i) == Some(Color::Blue)))
            .collect(),
    };
    let mut best = Best::new(Extremum::Max);
    for (a, b) in groups {
        let sorted: Vec<(Scalar, usize)> = b.iter().map(|&j| (inst.turns()[j].clone(), j)).collect();
        for &i in &a {
            for j in antipodal_candidates(&sorted, &inst.turns()[i]) {
                best.offer(inst.span(i, j), norm_pair(i, j));
            }
        }
    }
    let (_, e) = best.into_inner().ok_or(Error::NoMatching)?;
    let matching = extend_edge_to_matching_convex(inst, e)?;
    SolveOutcome::from_matching(inst, matching, Extremum::Max, "circle-antipodal")
}

/// Pairs `(i, i+1)` of a matching that are boundary edges of the circle.
pub fn is_boundary(m: usize, e: Pair) -> bool {
    let (a, b) = norm_pair(e.0, e.1);
    b == a + 1 || (a == 0 && b == m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::fixtures::*;
    use crate::model::validate_matching;
    use crate::scalar::{int, ratio};

    fn circle(turns: &[(i64, i64)]) -> CircleInstance {
        CircleInstance::new(turns.iter().map(|&(p, q)| ratio(p, q)).collect(), None).unwrap()
    }

    fn clustered() -> CircleInstance {
        circle(&[(0, 1), (3, 100), (6, 100), (50, 100), (53, 100), (56, 100)])
    }

    #[test]
    fn chain_examples() {
        assert_eq!(max_forbidden_chain(&[true, true, false, false]), 2);
        assert_eq!(max_forbidden_chain(&[true, false, true, true]), 3);
        assert_eq!(max_forbidden_chain(&[false; 4]), 0);
        assert_eq!(max_forbidden_chain(&[true; 4]), 4);
        assert!(!has_matching_avoiding(&[true, true, false, false]));
        assert!(has_matching_avoiding(&[true, false, false, false]));
        assert!(has_matching_avoiding(&[true, true, false, true, true, false]));
    }

    #[test]
    fn window_examples() {
        let w = sliding_window_min_of_max(&[3, 1, 4, 1, 5, 9, 2, 6], 4).unwrap();
        assert_eq!((w.start, w.argmax), (0, 2));
        let w = sliding_window_min_of_max(&[5, 5, 5, 5], 2).unwrap();
        assert_eq!((w.start, w.argmax), (0, 0));
        let w = sliding_window_min_of_max(&[1, 2], 1).unwrap();
        assert_eq!((w.start, w.argmax), (0, 0));
    }

    #[test]
    fn maxmin_examples() {
        assert_eq!(maxmin1_circle(&hexagon_circle()).unwrap().value, ratio(1, 6));
        let r = maxmin1_circle(&clustered()).unwrap();
        assert_eq!(r.value, ratio(44, 100));
        assert_eq!(r.algorithm, "circle-sliding-window");
    }

    #[test]
    fn threshold_examples() {
        let hex = hexagon_circle();
        let m = construct_matching_with_threshold(&hex, &ratio(1, 6)).unwrap();
        assert!(validate_matching(&hex, &m).unwrap().ok());
        let c = clustered();
        let m = construct_matching_with_threshold(&c, &ratio(44, 100)).unwrap();
        assert!(validate_matching(&c, &m).unwrap().ok());
        let (v, _) = crate::model::objective_value(&c, &m, Extremum::Min).unwrap();
        assert!(v >= ratio(44, 100));
        assert!(construct_matching_with_threshold(&c, &ratio(45, 100)).is_err());
        let m = construct_matching_with_threshold(&c, &int(0)).unwrap();
        assert!(validate_matching(&c, &m).unwrap().ok());
    }

    #[test]
    fn minmax_and_minmin_examples() {
        assert_eq!(minmax1_circle(&hexagon_circle()).unwrap().value, ratio(1, 6));
        assert_eq!(minmin_circle(&hexagon_circle()).unwrap().value, ratio(1, 6));
        let bi = CircleInstance::new(vec![int(0), ratio(1, 10), ratio(2, 10), ratio(6, 10)], Some(colors("BBRR"))).unwrap();
        let r = minmin_circle(&bi).unwrap();
        assert_eq!((r.value, r.witness), (ratio(1, 10), (1, 2)));
    }

    #[test]
    fn maxmax_examples() {
        assert_eq!(maxmax_circle(&hexagon_circle()).unwrap().value, ratio(1, 2));
        assert_eq!(maxmax_circle(&clustered()).unwrap().value, ratio(1, 2));
    }
}
