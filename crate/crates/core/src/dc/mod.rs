//! Doubly collinear sets: red points on one line, blue points on another,
//! the two lines crossing at the origin `x`.
//!
//! Each line is split by `x` into two half-lines. Half-line `0` holds the
//! positive coordinates and half-line `1` the negative ones; points on a
//! half-line are ranked outward from `x`. The sector between red half `h`
//! and blue half `k` has cosine `cos α` when `h == k` and `-cos α`
//! otherwise.

pub mod minmax;
pub mod onesided;

pub use minmax::{maxmin2_orthogonal, minmax2_dc, minmax2_orthogonal, minmax2_small_angle};
pub use onesided::{onesided_dp, onesided_minmax_fast, OneSidedTable};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::Orientation;
use crate::instance::DcInstance;
use crate::model::{Extremum, Matching, Pair, SolveOutcome};
use crate::scalar::Scalar;

/// Points of one half-line, outward from `x`.
#[derive(Debug, Clone, Default)]
pub struct HalfLine {
    /// Instance indices.
    pub idx: Vec<usize>,
    /// Distances from `x`.
    pub dist: Vec<Scalar>,
}

impl HalfLine {
    pub fn len(&self) -> usize {
        self.idx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idx.is_empty()
    }
}

/// The four half-lines of an instance with the angle between the lines.
#[derive(Debug, Clone)]
pub struct Layout {
    pub red: [HalfLine; 2],
    pub blue: [HalfLine; 2],
    pub cos: Scalar,
}

impl Layout {
    pub fn new(inst: &DcInstance) -> Layout {
        let n = inst.n();
        let split = |line: &[Scalar], offset: usize| -> [HalfLine; 2] {
            let z = negatives(line);
            let mut pos = HalfLine::default();
            for (i, c) in line.iter().enumerate().skip(z) {
                pos.idx.push(offset + i);
                pos.dist.push(c.clone());
            }
            let mut neg = HalfLine::default();
            for i in (0..z).rev() {
                neg.idx.push(offset + i);
                neg.dist.push(-&line[i]);
            }
            [pos, neg]
        };
        Layout { red: split(inst.red(), 0), blue: split(inst.blue(), n), cos: inst.cos_alpha().clone() }
    }

    pub fn sector_cos(&self, red_half: usize, blue_half: usize) -> Scalar {
        if red_half == blue_half {
            self.cos.clone()
        } else {
            -&self.cos
        }
    }

    /// The half-line of the other color bounding the small sector at half
    /// `h`. With `cos α = 0` the sectors (0, 0) and (1, 1) count as small.
    pub fn small_partner(&self, h: usize) -> usize {
        if self.cos.is_negative() {
            1 - h
        } else {
            h
        }
    }

    /// Squared length of the edge between red rank `i` on half `rh` and
    /// blue rank `j` on half `bh`.
    pub fn length(&self, rh: usize, i: usize, bh: usize, j: usize) -> Scalar {
        sector_sq(&self.red[rh].dist[i], &self.blue[bh].dist[j], &self.sector_cos(rh, bh))
    }
}

/// Squared distance between points at distances `p` and `q` from `x` on two
/// rays whose angle has cosine `c`.
pub fn sector_sq(p: &Scalar, q: &Scalar, c: &Scalar) -> Scalar {
    let pq = p * q;
    p * p + q * q - (&pq + &pq) * c
}

/// Integer type for [`LengthKeys`].
pub trait KeyInt: Clone + Ord + num_traits::Num + std::ops::Neg<Output = Self> {
    /// Largest input magnitude in bits for which keys cannot overflow.
    const INPUT_BITS: Option<u64>;
    fn from_big(v: &BigInt) -> Option<Self>;
}

impl KeyInt for i128 {
    const INPUT_BITS: Option<u64> = Some(40);

    fn from_big(v: &BigInt) -> Option<i128> {
        v.to_i128()
    }
}

impl KeyInt for BigInt {
    const INPUT_BITS: Option<u64> = None;

    fn from_big(v: &BigInt) -> Option<BigInt> {
        Some(v.clone())
    }
}

/// Half-line distances over a common denominator and the cosine as
/// `num / den`. [`LengthKeys::key`] is the squared length times a positive
/// constant, so it orders edges exactly like [`Layout::length`].
pub struct LengthKeys<T> {
    red: [Vec<T>; 2],
    blue: [Vec<T>; 2],
    num: T,
    den: T,
}

impl<T: KeyInt> LengthKeys<T> {
    /// `None` when some value does not fit `T` with room for the key
    /// arithmetic.
    pub fn new(lay: &Layout) -> Option<Self> {
        let halves = lay.red.iter().chain(lay.blue.iter());
        let common = halves.flat_map(|h| h.dist.iter()).fold(BigInt::one(), |acc, d| acc.lcm(d.denom()));
        let fits = |v: &BigInt| T::INPUT_BITS.is_none_or(|b| v.bits() <= b);
        let scale = |h: &HalfLine| -> Option<Vec<T>> {
            h.dist
                .iter()
                .map(|d| {
                    let v = d.numer() * (&common / d.denom());
                    fits(&v).then(|| T::from_big(&v)).flatten()
                })
                .collect()
        };
        let (num, den) = (lay.cos.numer(), lay.cos.denom());
        if !fits(num) || !fits(den) {
            return None;
        }
        Some(LengthKeys {
            red: [scale(&lay.red[0])?, scale(&lay.red[1])?],
            blue: [scale(&lay.blue[0])?, scale(&lay.blue[1])?],
            num: T::from_big(num)?,
            den: T::from_big(den)?,
        })
    }

    pub fn key(&self, rh: usize, i: usize, bh: usize, j: usize) -> T {
        let (p, q) = (self.red[rh][i].clone(), self.blue[bh][j].clone());
        let c = if rh == bh { self.num.clone() } else { -self.num.clone() };
        let pq = p.clone() * q.clone();
        self.den.clone() * (p.clone() * p + q.clone() * q) - (pq.clone() + pq) * c
    }
}

fn negatives(line: &[Scalar]) -> usize {
    line.partition_point(|c| c.is_negative())
}

/// For sorted position `i` on a line: points strictly between it and `x`,
/// and points on the open half-line from it through `x`.
fn ranks(line: &[Scalar], i: usize) -> (usize, usize) {
    let z = negatives(line);
    if i >= z {
        (i - z, i)
    } else {
        (z - 1 - i, line.len() - 1 - i)
    }
}

/// Sorted positions `(red, blue)` of a bichromatic instance-index pair.
fn split_edge(inst: &DcInstance, e: Pair) -> Result<(usize, usize)> {
    let n = inst.n();
    let (a, b) = if e.0 < e.1 { e } else { (e.1, e.0) };
    if b >= 2 * n {
        return Err(Error::IndexOutOfRange(b));
    }
    if a >= n || b < n {
        return Err(Error::InfeasibleEdge(e.0, e.1));
    }
    Ok((a, b - n))
}

fn feasible_positions(inst: &DcInstance, i: usize, j: usize) -> bool {
    let (between_r, with_x_r) = ranks(inst.red(), i);
    let (between_b, with_x_b) = ranks(inst.blue(), j);
    between_r <= with_x_b && between_b <= with_x_r
}

/// Feasibility of the edge between the red point at coordinate `r` and the
/// blue point at coordinate `b`.
pub fn dc_edge_feasible(inst: &DcInstance, r: &Scalar, b: &Scalar) -> Result<bool> {
    let find = |line: &[Scalar], c: &Scalar, color: &str| {
        line.binary_search(c)
            .map_err(|_| Error::Precondition(format!("no {color} point at coordinate {c}")))
    };
    let i = find(inst.red(), r, "red")?;
    let j = find(inst.blue(), b, "blue")?;
    Ok(feasible_positions(inst, i, j))
}

/// Feasibility of an instance-index pair; same-color pairs are infeasible.
pub fn dc_pair_feasible(inst: &DcInstance, e: Pair) -> bool {
    split_edge(inst, e).is_ok_and(|(i, j)| feasible_positions(inst, i, j))
}

fn sign(o: Ordering) -> i8 {
    o as i8
}

fn coord_sign(c: &Scalar) -> i8 {
    sign(c.cmp(&Scalar::zero()))
}

// Sign of the cross product of the red and blue directions.
fn line_turn(inst: &DcInstance) -> i8 {
    let (u, v) = (inst.dir_red(), inst.dir_blue());
    sign((&u[0] * &v[1]).cmp(&(&u[1] * &v[0])))
}

// Orientation of the red point `r`, the blue point `b` and a third point
// `q` (instance indices), from coordinates alone. With `u`, `v` the line
// directions, `(r u, b v, r' u)` turns by `b (r' - r) (v × u)` and
// `(r u, b v, b' v)` by `r (b - b') (u × v)`.
fn line_orientation(inst: &DcInstance, turn: i8, r: usize, b: usize, q: usize) -> Orientation {
    let (rc, bc) = (inst.coord(r), inst.coord(b));
    let s = if q < inst.n() {
        -coord_sign(bc) * sign(inst.coord(q).cmp(rc)) * turn
    } else {
        coord_sign(rc) * sign(bc.cmp(inst.coord(q))) * turn
    };
    match s {
        1 => Orientation::Ccw,
        -1 => Orientation::Cw,
        _ => Orientation::Collinear,
    }
}

/// Matches the sorted red positions `red` with the sorted blue positions
/// `blue` without crossings by repeatedly taking an edge of the convex hull
/// between an extreme red and an extreme blue point.
fn hull_peel(inst: &DcInstance, red: &[usize], blue: &[usize], out: &mut Vec<Pair>) -> Result<()> {
    if red.len() != blue.len() {
        return Err(Error::Unbalanced { blue: blue.len(), red: red.len() });
    }
    let n = inst.n();
    let turn = line_turn(inst);
    let (mut rl, mut rh) = (0, red.len());
    let (mut bl, mut bh) = (0, blue.len());
    while rl < rh {
        let (rf, rb) = (red[rl], red[rh - 1]);
        let from_back = inst.red()[rb].abs() >= inst.red()[rf].abs();
        let r = if from_back { rb } else { rf };
        let (bf, bb) = (n + blue[bl], n + blue[bh - 1]);
        let mut chosen = None;
        for (b, back) in [(bb, true), (bf, false)] {
            let mut side = None;
            let hull_edge = [rf, rb, bf, bb].into_iter().filter(|&q| q != r && q != b).all(|q| {
                let o = line_orientation(inst, turn, r, b, q);
                let same = o != Orientation::Collinear && side.is_none_or(|s| s == o);
                side = Some(o);
                same
            });
            if hull_edge {
                chosen = Some((b, back));
                break;
            }
        }
        let (b, back) = chosen.ok_or(Error::NoMatching)?;
        out.push((r, b));
        if from_back {
            rh -= 1;
        } else {
            rl += 1;
        }
        if back {
            bh -= 1;
        } else {
            bl += 1;
        }
    }
    Ok(())
}

/// Some non-crossing perfect matching of the whole instance.
pub fn dc_arbitrary_matching(inst: &DcInstance) -> Result<Matching> {
    let all: Vec<usize> = (0..inst.n()).collect();
    let mut out = Vec::with_capacity(inst.n());
    hull_peel(inst, &all, &all, &mut out)?;
    Matching::new(out)
}

// Inclusive range of sorted positions covering `i` and the `k` points
// after it walking toward `x` (and past it).
fn toward_origin(line: &[Scalar], i: usize, k: usize) -> (usize, usize) {
    if line[i].is_positive() {
        (i - k, i)
    } else {
        (i, i + k)
    }
}

/// A perfect non-crossing matching containing the feasible edge `e`
/// (instance indices, one red and one blue).
pub fn dc_extend_edge(inst: &DcInstance, e: Pair) -> Result<Matching> {
    let (i, j) = split_edge(inst, e)?;
    if !feasible_positions(inst, i, j) {
        return Err(Error::InfeasibleEdge(e.0, e.1));
    }
    let n = inst.n();
    let k = ranks(inst.red(), i).0.max(ranks(inst.blue(), j).0);
    let (rlo, rhi) = toward_origin(inst.red(), i, k);
    let (blo, bhi) = toward_origin(inst.blue(), j, k);
    let mut out = Vec::with_capacity(n);
    out.push((i, n + j));
    let red_block: Vec<usize> = (rlo..=rhi).filter(|&p| p != i).collect();
    let blue_block: Vec<usize> = (blo..=bhi).filter(|&p| p != j).collect();
    hull_peel(inst, &red_block, &blue_block, &mut out)?;
    let red_rest: Vec<usize> = (0..n).filter(|&p| p < rlo || p > rhi).collect();
    let blue_rest: Vec<usize> = (0..n).filter(|&p| p < blo || p > bhi).collect();
    hull_peel(inst, &red_rest, &blue_rest, &mut out)?;
    Matching::new(out)
}

/// Shortest feasible edge. On every pair of half-lines the feasible partners
/// of a red point form a contiguous rank range, and the length to a fixed
/// red point is unimodal along a blue half-line, so a monotone pointer to
/// the nearest blue point, clamped to that range, gives the best partner.
pub fn minmin2_dc(inst: &DcInstance) -> Result<SolveOutcome> {
    let lay = Layout::new(inst);
    let e = match LengthKeys::<i128>::new(&lay) {
        Some(keys) => closest_feasible(&lay, &keys),
        None => closest_feasible(&lay, &LengthKeys::<BigInt>::new(&lay).expect("BigInt keys always fit")),
    };
    let e = e.ok_or(Error::NoMatching)?;
    SolveOutcome::from_matching(inst, dc_extend_edge(inst, e)?, Extremum::Min, "dc-candidate-scan")
}

// Strictly better key wins; equal keys keep the smaller pair.
fn offer_key<T: Ord>(best: &mut Option<(T, Pair)>, dir: Extremum, key: T, pair: Pair) {
    let replace = match best {
        None => true,
        Some((k, p)) => match (dir, key.cmp(k)) {
            (Extremum::Min, Ordering::Less) | (Extremum::Max, Ordering::Greater) => true,
            (_, Ordering::Equal) => pair < *p,
            _ => false,
        },
    };
    if replace {
        *best = Some((key, pair));
    }
}

fn closest_feasible<T: KeyInt>(lay: &Layout, keys: &LengthKeys<T>) -> Option<Pair> {
    let mut best = None;
    for rh in 0..2 {
        for bh in 0..2 {
            let (reds, blues) = (&lay.red[rh], &lay.blue[bh]);
            if reds.is_empty() || blues.is_empty() {
                continue;
            }
            let other_red = lay.red[1 - rh].len();
            let other_blue = lay.blue[1 - bh].len();
            let mut t = 0;
            for i in 0..reds.len() {
                let mut here = keys.key(rh, i, bh, t);
                while t + 1 < blues.len() {
                    let next = keys.key(rh, i, bh, t + 1);
                    if next >= here {
                        break;
                    }
                    t += 1;
                    here = next;
                }
                let lo = i.saturating_sub(other_blue);
                let hi = (i + other_red).min(blues.len() - 1);
                if lo > hi {
                    continue;
                }
                let s = t.clamp(lo, hi);
                let key = if s == t { here } else { keys.key(rh, i, bh, s) };
                offer_key(&mut best, Extremum::Min, key, (reds.idx[i], blues.idx[s]));
            }
        }
    }
    best.map(|(_, e)| e)
}

/// Longest feasible edge. The length to a fixed red point is convex along a
/// blue half-line, so the farthest partner within the contiguous feasible
/// rank range is one of its two ends. When a line carries points on both
/// sides of `x` these ends include the outermost points; with a one-sided
/// line the innermost point can be the farthest, so every red point is
/// scanned.
pub fn maxmax2_dc(inst: &DcInstance) -> Result<SolveOutcome> {
    let lay = Layout::new(inst);
    let e = match LengthKeys::<i128>::new(&lay) {
        Some(keys) => farthest_feasible(&lay, &keys),
        None => farthest_feasible(&lay, &LengthKeys::<BigInt>::new(&lay).expect("BigInt keys always fit")),
    };
    let e = e.ok_or(Error::NoMatching)?;
    SolveOutcome::from_matching(inst, dc_extend_edge(inst, e)?, Extremum::Max, "dc-feasible-range-ends")
}

fn farthest_feasible<T: KeyInt>(lay: &Layout, keys: &LengthKeys<T>) -> Option<Pair> {
    let mut best = None;
    for_feasible_ranges(lay, |rh, i, bh, lo, hi| {
        for t in [lo, hi] {
            let pair = (lay.red[rh].idx[i], lay.blue[bh].idx[t]);
            offer_key(&mut best, Extremum::Max, keys.key(rh, i, bh, t), pair);
        }
    });
    best.map(|(_, e)| e)
}

// Calls `visit(rh, i, bh, lo, hi)` with the inclusive rank range of blue
// points on half `bh` forming a feasible edge with red rank `i` on half `rh`.
fn for_feasible_ranges<F: FnMut(usize, usize, usize, usize, usize)>(lay: &Layout, mut visit: F) {
    for rh in 0..2 {
        for bh in 0..2 {
            let (nr, nb) = (lay.red[rh].len(), lay.blue[bh].len());
            if nr == 0 || nb == 0 {
                continue;
            }
            let (other_red, other_blue) = (lay.red[1 - rh].len(), lay.blue[1 - bh].len());
            for i in 0..nr {
                let lo = i.saturating_sub(other_blue);
                let hi = (i + other_red).min(nb - 1);
                if lo <= hi {
                    visit(rh, i, bh, lo, hi);
                }
            }
        }
    }
}

/// True when every red coordinate has the same sign.
pub fn is_one_sided(inst: &DcInstance) -> bool {
    let z = negatives(inst.red());
    z == 0 || z == inst.n()
}

pub(crate) fn require_cos_zero(inst: &DcInstance) -> Result<()> {
    if !inst.cos_alpha().is_zero() {
        return Err(Error::Precondition("the lines must be perpendicular".into()));
    }
    Ok(())
}
