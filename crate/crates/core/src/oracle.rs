//! Exhaustive enumeration of perfect non-crossing matchings, used as ground
//! truth for every polynomial solver.

use crate::error::{Error, Result};
use crate::model::{Extremum, Matching, MatchingGeometry, Pair, SolveOutcome, Variant};
use crate::scalar::Scalar;

/// Largest point count enumerated unless the caller raises it.
pub const DEFAULT_CAP: usize = 16;

struct Search<'a, F> {
    size: usize,
    edge_id: Vec<Vec<Option<usize>>>,
    conflict: Vec<Vec<bool>>,
    chosen: Vec<usize>,
    pairs: Vec<Pair>,
    used: Vec<bool>,
    visit: &'a mut F,
}

impl<F: FnMut(&[Pair])> Search<'_, F> {
    fn run(&mut self) {
        let Some(i) = (0..self.size).find(|&i| !self.used[i]) else {
            (self.visit)(&self.pairs);
            return;
        };
        self.used[i] = true;
        for j in i + 1..self.size {
            if self.used[j] {
                continue;
            }
            let Some(e) = self.edge_id[i][j] else { continue };
            if self.chosen.iter().any(|&f| self.conflict[e][f]) {
                continue;
            }
            self.used[j] = true;
            self.chosen.push(e);
            self.pairs.push((i, j));
            self.run();
            self.pairs.pop();
            self.chosen.pop();
            self.used[j] = false;
        }
        self.used[i] = false;
    }
}

/// Calls `visit` once per perfect non-crossing matching (color-respecting in
/// bichromatic mode). The lowest unmatched index is always extended first and
/// partners are tried in increasing order, so the order is deterministic and
/// pairs arrive sorted.
pub fn for_each_ncpm<G, F>(g: &G, cap: usize, mut visit: F) -> Result<()>
where
    G: MatchingGeometry + ?Sized,
    F: FnMut(&[Pair]),
{
    let size = g.point_count();
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut edges = Vec::new();
    let mut edge_id = vec![vec![None; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            if g.compatible(i, j) {
                edge_id[i][j] = Some(edges.len());
                edges.push((i, j));
            }
        }
    }
    let mut conflict = vec![vec![false; edges.len()]; edges.len()];
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (e, f) = (edges[a], edges[b]);
            let shared = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
            if !shared && !g.edges_disjoint(e, f) {
                conflict[a][b] = true;
                conflict[b][a] = true;
            }
        }
    }
    let mut search = Search {
        size,
        edge_id,
        conflict,
        chosen: Vec::new(),
        pairs: Vec::new(),
        used: vec![false; size],
        visit: &mut visit,
    };
    search.run();
    Ok(())
}

pub fn enumerate_ncpm<G: MatchingGeometry + ?Sized>(g: &G, cap: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_ncpm(g, cap, |p| out.push(Matching::new(p.iter().copied()).expect("disjoint by construction")))?;
    Ok(out)
}

/// Every edge that lies in at least one matching, as a symmetric matrix.
pub fn feasible_edges<G: MatchingGeometry + ?Sized>(g: &G, cap: usize) -> Result<Vec<Vec<bool>>> {
    let size = g.point_count();
    let mut f = vec![vec![false; size]; size];
    for_each_ncpm(g, cap, |p| {
        for &(a, b) in p {
            f[a][b] = true;
            f[b][a] = true;
        }
    })?;
    Ok(f)
}

pub fn oracle_edge_feasible<G: MatchingGeometry + ?Sized>(g: &G, e: Pair, cap: usize) -> Result<bool> {
    let size = g.point_count();
    if e.0 >= size || e.1 >= size {
        return Err(Error::IndexOutOfRange(e.0.max(e.1)));
    }
    Ok(feasible_edges(g, cap)?[e.0][e.1])
}

/// Exact optimum over all matchings. Among optimal matchings the one whose
/// witness pair is lexicographically smallest wins, then the first found.
pub fn oracle_solve<G: MatchingGeometry + ?Sized>(g: &G, v: Variant, cap: usize) -> Result<SolveOutcome> {
    let size = g.point_count();
    let len: Vec<Vec<Option<Scalar>>> = (0..size)
        .map(|i| (0..size).map(|j| (i < j && g.compatible(i, j)).then(|| g.edge_length(i, j))).collect())
        .collect();
    let mut best: Option<(Scalar, Pair, Vec<Pair>)> = None;
    for_each_ncpm(g, cap, |pairs| {
        let mut agg: Option<(&Scalar, Pair)> = None;
        for &(a, b) in pairs {
            let l = len[a][b].as_ref().expect("compatible edge");
            // Pairs arrive sorted, so ties keep the smaller pair.
            if agg.is_none_or(|(cur, _)| v.inner.better(l, cur)) {
                agg = Some((l, (a, b)));
            }
        }
        let Some((value, witness)) = agg else { return };
        let replace = match &best {
            None => true,
            Some((bv, bw, _)) => v.outer.better(value, bv) || (value == bv && witness < *bw),
        };
        if replace {
            best = Some((value.clone(), witness, pairs.to_vec()));
        }
    })?;
    let (value, witness, pairs) = best.ok_or(Error::NoMatching)?;
    Ok(SolveOutcome {
        value,
        measure: g.measure(),
        witness,
        matching: Some(Matching::new(pairs)?),
        algorithm: "oracle",
    })
}

/// Value of the best matching under `v` restricted to those accepted by
/// `keep`; `None` when no matching qualifies.
pub fn oracle_filtered<G, K>(g: &G, inner: Extremum, cap: usize, mut keep: K) -> Result<Vec<(Scalar, Matching)>>
where
    G: MatchingGeometry + ?Sized,
    K: FnMut(&[Pair]) -> bool,
{
    let mut out = Vec::new();
    let mut err = None;
    for_each_ncpm(g, cap, |pairs| {
        if !keep(pairs) {
            return;
        }
        let m = Matching::new(pairs.iter().copied()).expect("disjoint by construction");
        match crate::model::objective_value(g, &m, inner) {
            Ok((value, _)) => out.push((value, m)),
            Err(e) => err = Some(e),
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::fixtures::*;
    use crate::instance::span_to_squared_chord;
    use crate::model::validate_matching;
    use crate::scalar::int;

    fn catalan(n: usize) -> usize {
        // C_{k+1} = sum C_i C_{k-i}, independent of the enumerator.
        let mut c = vec![1usize; n + 1];
        for k in 1..=n {
            c[k] = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
        }
        c[n]
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_ncpm(&square(), DEFAULT_CAP).unwrap().len(), 2);
        assert_eq!(enumerate_ncpm(&hexagon_affine(), DEFAULT_CAP).unwrap().len(), 5);
        assert_eq!(enumerate_ncpm(&hexagon_circle(), DEFAULT_CAP).unwrap().len(), catalan(3));
        let ms = enumerate_ncpm(&square_bi("BRRB"), DEFAULT_CAP).unwrap();
        let pairs: Vec<_> = ms.iter().map(|m| m.pairs().to_vec()).collect();
        // (0,3) joins two blue points and the diagonals cross.
        assert_eq!(pairs, vec![vec![(0, 1), (2, 3)]]);
    }

    #[test]
    fn emitted_matchings_are_valid() {
        for m in enumerate_ncpm(&hexagon_affine(), DEFAULT_CAP).unwrap() {
            assert!(validate_matching(&hexagon_affine(), &m).unwrap().ok());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = enumerate_ncpm(&square(), 2).unwrap_err();
        assert_eq!(e.code(), "E_CAP_EXCEEDED");
    }

    #[test]
    fn solve_examples() {
        assert_eq!(oracle_solve(&square(), Variant::MAX_MIN, DEFAULT_CAP).unwrap().value, int(1));
        let hex = hexagon_circle();
        let chord = |v: Variant| span_to_squared_chord(&oracle_solve(&hex, v, DEFAULT_CAP).unwrap().value).round();
        assert_eq!(chord(Variant::MAX_MAX), 4.0);
        assert_eq!(chord(Variant::MAX_MIN), 1.0);
        assert_eq!(chord(Variant::MIN_MIN), 1.0);
        assert_eq!(chord(Variant::MIN_MAX), 1.0);
    }

    #[test]
    fn feasibility_examples() {
        assert!(!oracle_edge_feasible(&square(), (0, 2), DEFAULT_CAP).unwrap());
        assert!(oracle_edge_feasible(&square(), (0, 1), DEFAULT_CAP).unwrap());
        assert!(oracle_edge_feasible(&hexagon_affine(), (0, 3), DEFAULT_CAP).unwrap());
    }
}
