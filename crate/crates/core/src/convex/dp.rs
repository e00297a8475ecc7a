//! Interval dynamic program over a convex (or circular) point order.
//!
//! `M[i, j]` is the best inner aggregate over matchings of the linear
//! interval `i..=j`. Point `i` is matched to some `k` in `i+1..=j`, which
//! splits the rest into `i+1..k-1` and `k+1..j`.

use crate::error::{Error, Result};
use crate::model::{Color, Matching, MatchingGeometry, Pair, SolveOutcome, Variant};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    /// Not computed: odd size, or unbalanced in bichromatic mode.
    Infeasible,
    /// Optimum realized by the length of `edge`, attained with `i` matched to `k`.
    Value { edge: Pair, k: usize },
}

/// Filled interval table. Intervals are linear ranges of the point order.
#[derive(Debug, Clone)]
pub struct IntervalTable {
    m: usize,
    cells: Vec<Cell>,
    lengths: Vec<Scalar>,
}

impl IntervalTable {
    fn cell(&self, i: usize, j: usize) -> Cell {
        self.cells[i * self.m + j]
    }

    /// Optimal value of interval `i..=j`; `None` for empty or infeasible
    /// intervals.
    pub fn value(&self, i: usize, j: usize) -> Option<&Scalar> {
        if i > j || j >= self.m {
            return None;
        }
        match self.cell(i, j) {
            Cell::Value { edge, .. } => Some(&self.lengths[edge.0 * self.m + edge.1]),
            Cell::Infeasible => None,
        }
    }

    /// Optimal matching of interval `i..=j`, smallest partner among ties.
    pub fn retrace(&self, i: usize, j: usize) -> Result<Vec<Pair>> {
        let mut out = Vec::new();
        let mut stack = vec![(i, j)];
        while let Some((a, b)) = stack.pop() {
            if a > b {
                continue;
            }
            match self.cell(a, b) {
                Cell::Value { k, .. } => {
                    out.push((a, k));
                    if k > a + 1 {
                        stack.push((a + 1, k - 1));
                    }
                    if k < b {
                        stack.push((k + 1, b));
                    }
                }
                Cell::Infeasible => return Err(Error::NoMatching),
            }
        }
        Ok(out)
    }
}

/// Fills the table for `m` points with lengths `len(i, j)` (`i < j`) and
/// optional colors. Ties over `k` keep the smallest `k`.
pub fn fill_table<F>(m: usize, len: F, colors: Option<&[Color]>, v: Variant) -> IntervalTable
where
    F: Fn(usize, usize) -> Scalar,
{
    let zero = Scalar::from_integer(0.into());
    let mut lengths = vec![zero; m * m];
    for i in 0..m {
        for j in i + 1..m {
            lengths[i * m + j] = len(i, j);
        }
    }
    // prefix[t] = blue count minus red count over 0..t.
    let prefix: Option<Vec<i64>> = colors.map(|c| {
        let mut p = vec![0i64; m + 1];
        for t in 0..m {
            p[t + 1] = p[t] + if c[t] == Color::Blue { 1 } else { -1 };
        }
        p
    });
    let balanced = |a: usize, b: usize| prefix.as_ref().is_none_or(|p| p[b + 1] == p[a]);
    let opposite = |a: usize, b: usize| colors.is_none_or(|c| c[a] != c[b]);
    let mut cells = vec![Cell::Infeasible; m * m];
    let at = |i: usize, j: usize| i * m + j;
    let mut size = 2;
    while size <= m {
        for i in 0..=m - size {
            let j = i + size - 1;
            if !balanced(i, j) {
                continue;
            }
            let mut best: Option<(Pair, usize)> = None;
            let mut k = i + 1;
            while k <= j {
                if opposite(i, k) && balanced(i, k) {
                    let mut agg = (i, k);
                    for (a, b) in [(i + 1, k.wrapping_sub(1)), (k + 1, j)] {
                        if a <= b && b < m {
                            if let Cell::Value { edge, .. } = cells[at(a, b)] {
                                if v.inner.better(&lengths[at(edge.0, edge.1)], &lengths[at(agg.0, agg.1)]) {
                                    agg = edge;
                                }
                            }
                        }
                    }
                    let replace = match best {
                        None => true,
                        Some((e, _)) => v.outer.better(&lengths[at(agg.0, agg.1)], &lengths[at(e.0, e.1)]),
                    };
                    if replace {
                        best = Some((agg, k));
                    }
                }
                k += 2;
            }
            if let Some((edge, k)) = best {
                cells[at(i, j)] = Cell::Value { edge, k };
            }
        }
        size += 2;
    }
    IntervalTable { m, cells, lengths }
}

/// Optimal matching of a convex-ordered instance under any variant, with the
/// matching reconstructed from the table.
pub fn dp_solve_convex<G: MatchingGeometry + ?Sized>(g: &G, v: Variant) -> Result<SolveOutcome> {
    if !g.convex_order() {
        return Err(Error::Precondition("interval recurrence needs points in convex order".into()));
    }
    let m = g.point_count();
    let colors: Option<Vec<Color>> = (0..m).map(|i| g.color(i)).collect();
    let table = fill_table(m, |i, j| g.edge_length(i, j), colors.as_deref(), v);
    let pairs = table.retrace(0, m - 1)?;
    SolveOutcome::from_matching(g, Matching::new(pairs)?, v.inner, "convex-dp")
}
