//! Matchings, optimization variants, solver outcomes and validation.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Mono,
    Bi,
}

/// Which quantity a solver value is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Exact squared Euclidean length.
    SquaredLength,
    /// Arc span `min(d, 1 - d)` in turns; strictly monotone in chord length.
    ChordSpan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extremum {
    Min,
    Max,
}

impl Extremum {
    /// True iff `a` is strictly preferred to `b`.
    pub fn better(self, a: &Scalar, b: &Scalar) -> bool {
        match self {
            Extremum::Min => a < b,
            Extremum::Max => a > b,
        }
    }

    pub fn pick<'a>(self, a: &'a Scalar, b: &'a Scalar) -> &'a Scalar {
        if self.better(b, a) {
            b
        } else {
            a
        }
    }
}

/// `outer` optimizes over matchings, `inner` aggregates the edge lengths of
/// one matching. MinMax is the bottleneck problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variant {
    pub outer: Extremum,
    pub inner: Extremum,
}

impl Variant {
    pub const MIN_MIN: Variant = Variant { outer: Extremum::Min, inner: Extremum::Min };
    pub const MAX_MAX: Variant = Variant { outer: Extremum::Max, inner: Extremum::Max };
    pub const MIN_MAX: Variant = Variant { outer: Extremum::Min, inner: Extremum::Max };
    pub const MAX_MIN: Variant = Variant { outer: Extremum::Max, inner: Extremum::Min };
    pub const ALL: [Variant; 4] = [Variant::MIN_MIN, Variant::MAX_MAX, Variant::MIN_MAX, Variant::MAX_MIN];

    pub fn name(self) -> &'static str {
        match (self.outer, self.inner) {
            (Extremum::Min, Extremum::Min) => "minmin",
            (Extremum::Max, Extremum::Max) => "maxmax",
            (Extremum::Min, Extremum::Max) => "minmax",
            (Extremum::Max, Extremum::Min) => "maxmin",
        }
    }

    pub fn from_name(name: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == name.to_ascii_lowercase())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Pair = (usize, usize);

pub fn norm_pair(a: usize, b: usize) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A set of disjoint index pairs, stored normalized (`i < j`) and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    pairs: Vec<Pair>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = Pair>>(pairs: I) -> Result<Matching> {
        let mut pairs: Vec<Pair> = pairs.into_iter().map(|(a, b)| norm_pair(a, b)).collect();
        pairs.sort_unstable();
        let mut seen = std::collections::HashSet::with_capacity(pairs.len() * 2);
        for &(a, b) in &pairs {
            if a == b || !seen.insert(a) || !seen.insert(b) {
                return Err(Error::SharedEndpoint(a, b));
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.binary_search(&norm_pair(a, b)).is_ok()
    }
}

/// The view of an instance every generic routine (oracle, validation,
/// objective evaluation) works against.
pub trait MatchingGeometry {
    fn point_count(&self) -> usize;
    fn color(&self, i: usize) -> Option<Color>;
    /// Comparable edge length in this instance's [`Measure`].
    fn edge_length(&self, i: usize, j: usize) -> Scalar;
    fn measure(&self) -> Measure;
    /// Disjointness of two closed edges with four distinct endpoints.
    fn edges_disjoint(&self, e: Pair, f: Pair) -> bool;
    /// True when index order is a counterclockwise convex order, which makes
    /// crossings purely combinatorial.
    fn convex_order(&self) -> bool {
        false
    }

    fn mode(&self) -> Mode {
        if self.point_count() > 0 && self.color(0).is_some() {
            Mode::Bi
        } else {
            Mode::Mono
        }
    }

    fn compatible(&self, i: usize, j: usize) -> bool {
        i != j
            && match (self.color(i), self.color(j)) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            }
    }
}

/// Chords of a convex polygon (indices in cyclic order) are disjoint iff
/// their endpoints do not interleave.
pub fn chords_interleave(e: Pair, f: Pair) -> bool {
    let (a, b) = norm_pair(e.0, e.1);
    let inside = |x: usize| a < x && x < b;
    inside(f.0) != inside(f.1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub perfect: bool,
    pub non_crossing: bool,
    pub color_respecting: bool,
    /// First crossing pair of edges found, if any.
    pub crossing: Option<(Pair, Pair)>,
    /// Pairs joining two points of one color (bichromatic mode only).
    pub color_violations: Vec<Pair>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.perfect && self.non_crossing && self.color_respecting
    }
}

pub fn validate_matching<G: MatchingGeometry + ?Sized>(g: &G, m: &Matching) -> Result<ValidationReport> {
    let size = g.point_count();
    for &(a, b) in m.pairs() {
        if a >= size {
            return Err(Error::IndexOutOfRange(a));
        }
        if b >= size {
            return Err(Error::IndexOutOfRange(b));
        }
    }
    let perfect = 2 * m.len() == size;
    let color_violations: Vec<Pair> = m
        .pairs()
        .iter()
        .copied()
        .filter(|&(a, b)| g.mode() == Mode::Bi && g.color(a) == g.color(b))
        .collect();
    let crossing = if g.convex_order() {
        first_crossing_nested(m)
    } else {
        first_crossing_pairwise(g, m)
    };
    Ok(ValidationReport {
        perfect,
        non_crossing: crossing.is_none(),
        color_respecting: color_violations.is_empty(),
        crossing,
        color_violations,
    })
}

fn first_crossing_pairwise<G: MatchingGeometry + ?Sized>(g: &G, m: &Matching) -> Option<(Pair, Pair)> {
    let p = m.pairs();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if !g.edges_disjoint(p[i], p[j]) {
                return Some((p[i], p[j]));
            }
        }
    }
    None
}

// Pairs are sorted by left endpoint: a stack of open chords detects the
// first interleaving in linear time.
fn first_crossing_nested(m: &Matching) -> Option<(Pair, Pair)> {
    let mut stack: Vec<Pair> = Vec::new();
    for &(a, b) in m.pairs() {
        while let Some(&top) = stack.last() {
            if top.1 < a {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            if b > top.1 {
                return Some((top, (a, b)));
            }
        }
        stack.push((a, b));
    }
    None
}

/// Inner aggregate of the edge lengths of a perfect matching together with
/// the realizing pair (ties: lexicographically smallest pair).
///
/// Checks perfection and color discipline; crossing freedom is the caller's
/// responsibility (see [`validate_matching`]).
pub fn objective_value<G: MatchingGeometry + ?Sized>(g: &G, m: &Matching, inner: Extremum) -> Result<(Scalar, Pair)> {
    if 2 * m.len() != g.point_count() || m.is_empty() {
        return Err(Error::InvalidMatching);
    }
    let mut best = Best::new(inner);
    for &(a, b) in m.pairs() {
        if b >= g.point_count() {
            return Err(Error::IndexOutOfRange(b));
        }
        if !g.compatible(a, b) {
            return Err(Error::InvalidMatching);
        }
        best.offer(g.edge_length(a, b), (a, b));
    }
    best.into_inner().ok_or(Error::InvalidMatching)
}

/// Running extremum with the crate-wide tie-break: equal values keep the
/// lexicographically smallest normalized pair.
#[derive(Debug, Clone)]
pub struct Best {
    dir: Extremum,
    cur: Option<(Scalar, Pair)>,
}

impl Best {
    pub fn new(dir: Extremum) -> Best {
        Best { dir, cur: None }
    }

    pub fn offer(&mut self, value: Scalar, pair: Pair) {
        let pair = norm_pair(pair.0, pair.1);
        let replace = match &self.cur {
            None => true,
            Some((v, p)) => self.dir.better(&value, v) || (&value == v && pair < *p),
        };
        if replace {
            self.cur = Some((value, pair));
        }
    }

    pub fn get(&self) -> Option<&(Scalar, Pair)> {
        self.cur.as_ref()
    }

    pub fn into_inner(self) -> Option<(Scalar, Pair)> {
        self.cur
    }
}

/// Result of any solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub value: Scalar,
    pub measure: Measure,
    pub witness: Pair,
    pub matching: Option<Matching>,
    pub algorithm: &'static str,
}

impl SolveOutcome {
    /// Builds an outcome whose value and witness are read off `matching`.
    pub fn from_matching<G: MatchingGeometry + ?Sized>(
        g: &G,
        matching: Matching,
        inner: Extremum,
        algorithm: &'static str,
    ) -> Result<SolveOutcome> {
        let (value, witness) = objective_value(g, &matching, inner)?;
        Ok(SolveOutcome {
            value,
            measure: g.measure(),
            witness,
            matching: Some(matching),
            algorithm,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_rejects_reuse() {
        assert!(Matching::new([(0, 1), (1, 2)]).is_err());
        assert!(Matching::new([(2, 2)]).is_err());
        let m = Matching::new([(3, 2), (1, 0)]).unwrap();
        assert_eq!(m.pairs(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn nested_crossing_detection() {
        assert!(first_crossing_nested(&Matching::new([(0, 3), (1, 2)]).unwrap()).is_none());
        assert!(first_crossing_nested(&Matching::new([(0, 1), (2, 3)]).unwrap()).is_none());
        assert!(first_crossing_nested(&Matching::new([(0, 2), (1, 3)]).unwrap()).is_some());
        assert!(first_crossing_nested(&Matching::new([(0, 5), (1, 2), (3, 4)]).unwrap()).is_none());
        assert!(first_crossing_nested(&Matching::new([(0, 5), (1, 3), (2, 4)]).unwrap()).is_some());
    }

    #[test]
    fn interleaving() {
        assert!(chords_interleave((0, 2), (1, 3)));
        assert!(!chords_interleave((0, 3), (1, 2)));
        assert!(!chords_interleave((0, 1), (2, 3)));
    }

    #[test]
    fn best_tie_break() {
        let mut b = Best::new(Extremum::Max);
        b.offer(crate::scalar::int(1), (2, 3));
        b.offer(crate::scalar::int(1), (1, 0));
        b.offer(crate::scalar::int(0), (0, 0));
        assert_eq!(b.into_inner().unwrap().1, (0, 1));
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(Variant::from_name(v.name()), Some(v));
        }
        assert_eq!(Variant::from_name("MinMax"), Some(Variant::MIN_MAX));
    }
}
