//! Closest and farthest pairs between two interleaved subsets of one convex
//! polygon.
//!
//! The subsets may alternate arbitrarily along the boundary, so the two
//! chains are not separable and the textbook caliper walk does not apply.
//! The farthest pair uses the monotonicity of farthest neighbours along a
//! convex polygon; the closest pair is always an edge of the Delaunay
//! triangulation, which for convex position is built by random vertex
//! deletion and reinsertion.

use std::cmp::Ordering;
use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{incircle, squared_distance, Point2};
use crate::model::{norm_pair, Best, Extremum, Pair};
use crate::scalar::Scalar;

/// Below this subset size the quadratic scan is used directly.
pub const BRUTE_FORCE_LIMIT: usize = 8;

fn check(a: &[usize], b: &[usize]) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Precondition("both point sets must be nonempty".into()));
    }
    Ok(())
}

pub fn extremal_pair_brute(pts: &[Point2], a: &[usize], b: &[usize], dir: Extremum) -> Result<(Pair, Scalar)> {
    check(a, b)?;
    let mut best = Best::new(dir);
    for &i in a {
        for &j in b {
            best.offer(squared_distance(&pts[i], &pts[j]), norm_pair(i, j));
        }
    }
    let (v, p) = best.into_inner().expect("nonempty");
    Ok((p, v))
}

/// `a` and `b` are disjoint sets of vertex indices of the convex polygon
/// `pts` (counterclockwise); returns the pair of minimum squared distance,
/// lexicographically smallest among ties.
pub fn bichromatic_closest_pair_convex(pts: &[Point2], a: &[usize], b: &[usize]) -> Result<(Pair, Scalar)> {
    check(a, b)?;
    if a.len().min(b.len()) <= BRUTE_FORCE_LIMIT {
        return extremal_pair_brute(pts, a, b, Extremum::Min);
    }
    let mut verts: Vec<usize> = a.iter().chain(b).copied().collect();
    verts.sort_unstable();
    let in_a: std::collections::HashSet<usize> = a.iter().copied().collect();
    let mut best = Best::new(Extremum::Min);
    for (u, v) in delaunay_convex(pts, &verts) {
        if in_a.contains(&u) != in_a.contains(&v) {
            best.offer(squared_distance(&pts[u], &pts[v]), norm_pair(u, v));
        }
    }
    let (v, p) = best.into_inner().ok_or(Error::NoMatching)?;
    Ok((p, v))
}

/// Undirected edges of a Delaunay triangulation of the convex polygon with
/// vertices `verts` (indices into `pts`, counterclockwise). Cocircular
/// configurations yield one of the valid triangulations.
pub fn delaunay_convex(pts: &[Point2], verts: &[usize]) -> Vec<Pair> {
    let k = verts.len();
    if k < 3 {
        return if k == 2 { vec![norm_pair(verts[0], verts[1])] } else { Vec::new() };
    }
    let mut prev: Vec<usize> = (0..k).map(|i| (i + k - 1) % k).collect();
    let mut next: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let mut order: Vec<usize> = (0..k).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ k as u64);
    order.shuffle(&mut rng);
    let mut removed = Vec::with_capacity(k);
    for &p in &order[..k - 3] {
        removed.push((p, prev[p], next[p]));
        next[prev[p]] = next[p];
        prev[next[p]] = prev[p];
    }
    let mut tri = Triangulation { apex: HashMap::with_capacity(6 * k), pts, verts };
    let first = order[k - 3];
    tri.add(first, next[first], next[next[first]]);
    for &(p, q, r) in removed.iter().rev() {
        tri.add(q, p, r);
        tri.legalize(r, q, p);
    }
    let mut edges: Vec<Pair> = tri.apex.keys().map(|&(u, v)| norm_pair(verts[u], verts[v])).collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

// Local positions into `verts`; each directed edge maps to the apex of the
// counterclockwise triangle on its left.
struct Triangulation<'a> {
    apex: HashMap<(usize, usize), usize>,
    pts: &'a [Point2],
    verts: &'a [usize],
}

impl Triangulation<'_> {
    fn add(&mut self, a: usize, b: usize, c: usize) {
        self.apex.insert((a, b), c);
        self.apex.insert((b, c), a);
        self.apex.insert((c, a), b);
    }

    fn remove(&mut self, a: usize, b: usize, c: usize) {
        self.apex.remove(&(a, b));
        self.apex.remove(&(b, c));
        self.apex.remove(&(c, a));
    }

    fn p(&self, i: usize) -> &Point2 {
        &self.pts[self.verts[i]]
    }

    // Triangle (a, b, p) is present; flip (a, b) while p lies strictly
    // inside the circumcircle of the triangle across it.
    fn legalize(&mut self, a: usize, b: usize, p: usize) {
        let mut stack = vec![(a, b, p)];
        while let Some((a, b, p)) = stack.pop() {
            let Some(&x) = self.apex.get(&(b, a)) else { continue };
            if self.apex.get(&(a, b)) != Some(&p) {
                continue;
            }
            if incircle(self.p(b), self.p(a), self.p(x), self.p(p)) != Ordering::Greater {
                continue;
            }
            self.remove(a, b, p);
            self.remove(b, a, x);
            self.add(a, x, p);
            self.add(x, b, p);
            stack.push((a, x, p));
            stack.push((x, b, p));
        }
    }
}

/// Farthest pair between `a` and `b`. Ties between pairs of equal length may
/// resolve to any of them.
pub fn bichromatic_farthest_pair_convex(pts: &[Point2], a: &[usize], b: &[usize]) -> Result<(Pair, Scalar)> {
    check(a, b)?;
    if a.len().min(b.len()) <= BRUTE_FORCE_LIMIT {
        return extremal_pair_brute(pts, a, b, Extremum::Max);
    }
    let m = a.iter().chain(b).max().copied().unwrap_or(0) + 1;
    let mut rows: Vec<usize> = a.to_vec();
    rows.sort_unstable();
    // Columns unroll `b` twice so each row sees every `b` exactly once in
    // its window `(row, row + m)`.
    let mut cols: Vec<usize> = b.iter().flat_map(|&j| [j, j + m]).collect();
    cols.sort_unstable();
    let key = |r: usize, c: usize| -> (i8, Scalar) {
        if c <= r {
            (0, Scalar::from_integer((c as i64).into()))
        } else if c >= r + m {
            (-1, Scalar::from_integer((-(c as i64)).into()))
        } else {
            (1, squared_distance(&pts[r], &pts[c % m]))
        }
    };
    let mut best = Best::new(Extremum::Max);
    let mut stack = vec![(0usize, rows.len(), 0usize, cols.len() - 1)];
    while let Some((lo, hi, clo, chi)) = stack.pop() {
        if lo >= hi {
            continue;
        }
        let mid = (lo + hi) / 2;
        let r = rows[mid];
        // Rightmost maximum, so argmax positions never decrease.
        let mut arg = clo;
        let mut top = key(r, cols[clo]);
        for (t, &c) in cols.iter().enumerate().take(chi + 1).skip(clo + 1) {
            let kv = key(r, c);
            if kv >= top {
                top = kv;
                arg = t;
            }
        }
        if top.0 == 1 {
            best.offer(top.1, norm_pair(r, cols[arg] % m));
        }
        stack.push((lo, mid, clo, arg));
        stack.push((mid + 1, hi, arg, chi));
    }
    let (v, p) = best.into_inner().ok_or(Error::NoMatching)?;
    Ok((p, v))
}
