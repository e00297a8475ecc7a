//! One-sided instances: every red point lies on the same half-line.
//!
//! The outermost red point is matched to the outermost blue point of one of
//! the two blue half-lines, which gives a two-index recurrence over how many
//! blue points of each half-line are used.

use super::{is_one_sided, Layout};
use crate::error::{Error, Result};
use crate::instance::DcInstance;
use crate::model::{Extremum, Matching, Pair, SolveOutcome, Variant};
use crate::scalar::Scalar;

/// A red half-line with the blue points matched through its small sector
/// and through its big sector. All lists are ranks into the layout, ordered
/// outward from `x`.
#[derive(Debug, Clone)]
pub(crate) struct OneSided<'a> {
    pub lay: &'a Layout,
    pub rh: usize,
    pub red: Vec<usize>,
    pub small_half: usize,
    pub small: Vec<usize>,
    pub big: Vec<usize>,
}

impl<'a> OneSided<'a> {
    pub fn whole(lay: &'a Layout, rh: usize) -> OneSided<'a> {
        let small_half = lay.small_partner(rh);
        OneSided {
            lay,
            rh,
            red: (0..lay.red[rh].len()).collect(),
            small_half,
            small: (0..lay.blue[small_half].len()).collect(),
            big: (0..lay.blue[1 - small_half].len()).collect(),
        }
    }

    fn half(&self, small: bool) -> usize {
        if small {
            self.small_half
        } else {
            1 - self.small_half
        }
    }

    /// Squared length between red `r` and blue `b` of the small or big list.
    pub fn length(&self, small: bool, b: usize, r: usize) -> Scalar {
        let (list, h) = if small { (&self.small, self.small_half) } else { (&self.big, 1 - self.small_half) };
        self.lay.length(self.rh, self.red[r], h, list[b])
    }

    pub fn pair(&self, small: bool, b: usize, r: usize) -> Pair {
        let list = if small { &self.small } else { &self.big };
        (self.lay.red[self.rh].idx[self.red[r]], self.lay.blue[self.half(small)].idx[list[b]])
    }
}

/// `S[a][b]`: best value over the `a` innermost small-side blue points, the
/// `b` innermost big-side blue points and the `a + b` innermost red points.
#[derive(Debug, Clone)]
pub struct OneSidedTable {
    cols: usize,
    cells: Vec<Option<(Scalar, bool)>>,
}

impl OneSidedTable {
    /// `None` at `(0, 0)`, where no edge exists yet.
    pub fn value(&self, a: usize, b: usize) -> Option<&Scalar> {
        self.cells.get(a * self.cols + b)?.as_ref().map(|(v, _)| v)
    }

    fn last_small(&self, a: usize, b: usize) -> Option<bool> {
        self.cells[a * self.cols + b].as_ref().map(|&(_, s)| s)
    }
}

fn fill(os: &OneSided, v: Variant) -> OneSidedTable {
    let (p, q) = (os.small.len(), os.big.len());
    let cols = q + 1;
    let mut cells: Vec<Option<(Scalar, bool)>> = vec![None; (p + 1) * cols];
    for a in 0..=p {
        for b in 0..=q {
            if a + b == 0 {
                continue;
            }
            let r = a + b - 1;
            let option = |small: bool, prev: &Option<(Scalar, bool)>| {
                let d = if small { os.length(true, a - 1, r) } else { os.length(false, b - 1, r) };
                match prev {
                    Some((s, _)) => v.inner.pick(&d, s).clone(),
                    None => d,
                }
            };
            let via_small = (a > 0).then(|| option(true, &cells[(a - 1) * cols + b]));
            let via_big = (b > 0).then(|| option(false, &cells[a * cols + b - 1]));
            cells[a * cols + b] = match (via_small, via_big) {
                (Some(s), Some(g)) if v.outer.better(&g, &s) => Some((g, false)),
                (Some(s), _) => Some((s, true)),
                (None, Some(g)) => Some((g, false)),
                (None, None) => None,
            };
        }
    }
    OneSidedTable { cols, cells }
}

fn retrace(os: &OneSided, table: &OneSidedTable) -> Vec<Pair> {
    let (mut a, mut b) = (os.small.len(), os.big.len());
    let mut out = Vec::with_capacity(a + b);
    while let Some(small) = table.last_small(a, b) {
        let r = a + b - 1;
        if small {
            out.push(os.pair(true, a - 1, r));
            a -= 1;
        } else {
            out.push(os.pair(false, b - 1, r));
            b -= 1;
        }
    }
    out
}

fn one_sided_half(inst: &DcInstance, lay: &Layout) -> Result<usize> {
    if !is_one_sided(inst) {
        return Err(Error::Precondition("red points must lie on one side of the blue line".into()));
    }
    Ok(if lay.red[0].is_empty() { 1 } else { 0 })
}

/// Any variant on a one-sided instance in quadratic time.
pub fn onesided_dp(inst: &DcInstance, v: Variant) -> Result<SolveOutcome> {
    let lay = Layout::new(inst);
    let os = OneSided::whole(&lay, one_sided_half(inst, &lay)?);
    let table = fill(&os, v);
    SolveOutcome::from_matching(inst, Matching::new(retrace(&os, &table))?, v.inner, "dc-one-sided-dp")
}

/// Table of the recurrence, for inspection.
pub fn onesided_table(inst: &DcInstance, v: Variant) -> Result<OneSidedTable> {
    let lay = Layout::new(inst);
    let os = OneSided::whole(&lay, one_sided_half(inst, &lay)?);
    Ok(fill(&os, v))
}

struct Probe {
    value: Scalar,
    longest_small: Option<usize>,
}

// Matching M_k: small-side blue `i` takes red `k + i`, the remaining reds go
// in order to the big side. In the big sector the outermost edge is the
// longest.
fn probe(os: &OneSided, k: usize) -> Probe {
    let (p, q) = (os.small.len(), os.big.len());
    let mut value: Option<Scalar> = None;
    let mut longest_small = None;
    for i in 0..p {
        let d = os.length(true, i, k + i);
        if value.as_ref().is_none_or(|v| d > *v) {
            value = Some(d);
            longest_small = Some(i);
        }
    }
    if q > 0 {
        let last_red = if k + p < os.red.len() { os.red.len() - 1 } else { k - 1 };
        let d = os.length(false, q - 1, last_red);
        if value.as_ref().is_none_or(|v| d > *v) {
            value = Some(d);
        }
    }
    Probe { value: value.unwrap_or_else(|| Scalar::from_integer(0.into())), longest_small }
}

fn matching_k(os: &OneSided, k: usize) -> Vec<Pair> {
    let p = os.small.len();
    let mut out: Vec<Pair> = (0..p).map(|i| os.pair(true, i, k + i)).collect();
    let rest = (0..os.red.len()).filter(|&r| r < k || r >= k + p);
    out.extend(rest.enumerate().map(|(b, r)| os.pair(false, b, r)));
    out
}

/// Best MinMax value and matching of a one-sided subproblem; `None` when it
/// has no points.
pub(crate) fn minmax_core(os: &OneSided) -> Option<(Scalar, Vec<Pair>)> {
    let n = os.red.len();
    if n == 0 {
        return None;
    }
    let p = os.small.len();
    let last = n - p;
    let mut best = (probe(os, last).value, last);
    if p > 0 && p < n {
        let (mut lo, mut hi) = (0usize, last);
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            let pr = probe(os, mid);
            if pr.value < best.0 || (pr.value == best.0 && mid < best.1) {
                best = (pr.value.clone(), mid);
            }
            // Obtuse angle at the red end of the longest small edge: every
            // smaller k only moves that red point inward and lengthens it.
            let obtuse = pr.longest_small.is_some_and(|j| {
                let r = &os.lay.red[os.rh].dist[os.red[mid + j]];
                let b = &os.lay.blue[os.small_half].dist[os.small[j]];
                *r < b * os.lay.sector_cos(os.rh, os.small_half)
            });
            if obtuse {
                lo = mid + 1;
            } else if mid == 0 {
                break;
            } else {
                hi = mid - 1;
            }
        }
    }
    Some((best.0, matching_k(os, best.1)))
}

/// MinMax on a one-sided instance by binary search over the position of the
/// small-sector run.
pub fn onesided_minmax_fast(inst: &DcInstance) -> Result<SolveOutcome> {
    let lay = Layout::new(inst);
    let os = OneSided::whole(&lay, one_sided_half(inst, &lay)?);
    let (_, pairs) = minmax_core(&os).ok_or(Error::NoMatching)?;
    SolveOutcome::from_matching(inst, Matching::new(pairs)?, Extremum::Max, "dc-one-sided-search")
}
