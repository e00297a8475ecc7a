//! Exact planar predicates and the convex hull.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(crate::scalar::int(x), crate::scalar::int(y))
    }

    /// Lexicographic (x, y) order.
    pub fn lex_cmp(&self, other: &Point2) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    fn from_sign(v: &Scalar) -> Self {
        if v.is_positive() {
            Orientation::Ccw
        } else if v.is_negative() {
            Orientation::Cw
        } else {
            Orientation::Collinear
        }
    }
}

/// Twice the signed area of triangle `abc`.
pub fn cross(a: &Point2, b: &Point2, c: &Point2) -> Scalar {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

// Integers below 2^62 in magnitude keep the cross product inside i128.
fn small(v: &Scalar) -> Option<i128> {
    const LIMIT: i64 = 1 << 62;
    if !v.is_integer() {
        return None;
    }
    v.numer().to_i64().filter(|x| x.abs() < LIMIT).map(i128::from)
}

pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    // Word-sized integer coordinates avoid big-number allocation entirely.
    if let (Some(ax), Some(ay), Some(bx), Some(by), Some(cx), Some(cy)) =
        (small(&a.x), small(&a.y), small(&b.x), small(&b.y), small(&c.x), small(&c.y))
    {
        let d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        return match d.cmp(&0) {
            Ordering::Greater => Orientation::Ccw,
            Ordering::Less => Orientation::Cw,
            Ordering::Equal => Orientation::Collinear,
        };
    }
    Orientation::from_sign(&cross(a, b, c))
}

// Builds the unreduced fraction and normalizes once.
pub fn squared_distance(a: &Point2, b: &Point2) -> Scalar {
    let (xn, xd) = difference(&a.x, &b.x);
    let (yn, yd) = difference(&a.y, &b.y);
    if xd == yd {
        return Scalar::new(&xn * &xn + &yn * &yn, &xd * &xd);
    }
    let (xn2, yn2, xd2, yd2) = (&xn * &xn, &yn * &yn, &xd * &xd, &yd * &yd);
    Scalar::new(xn2 * &yd2 + yn2 * &xd2, xd2 * yd2)
}

fn difference(p: &Scalar, q: &Scalar) -> (BigInt, BigInt) {
    if p.denom() == q.denom() {
        (p.numer() - q.numer(), p.denom().clone())
    } else {
        (p.numer() * q.denom() - q.numer() * p.denom(), p.denom() * q.denom())
    }
}

/// Dot product of `b - a` and `d - c`.
pub fn dot(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Scalar {
    (&b.x - &a.x) * (&d.x - &c.x) + (&b.y - &a.y) * (&d.y - &c.y)
}

// `r` is known to be collinear with `p` and `q`.
fn within_box(p: &Point2, q: &Point2, r: &Point2) -> bool {
    let (xlo, xhi) = if p.x <= q.x { (&p.x, &q.x) } else { (&q.x, &p.x) };
    let (ylo, yhi) = if p.y <= q.y { (&p.y, &q.y) } else { (&q.y, &p.y) };
    xlo <= &r.x && &r.x <= xhi && ylo <= &r.y && &r.y <= yhi
}

/// True iff the closed segments `ab` and `cd` share at least one point.
pub fn closed_segments_intersect(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    use Orientation::*;
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    let strict = |u: Orientation, v: Orientation| u != Collinear && v != Collinear && u != v;
    if strict(o1, o2) && strict(o3, o4) {
        return true;
    }
    (o1 == Collinear && within_box(a, b, c))
        || (o2 == Collinear && within_box(a, b, d))
        || (o3 == Collinear && within_box(c, d, a))
        || (o4 == Collinear && within_box(c, d, b))
}

/// Disjointness of two index segments over `points`.
///
/// The four endpoint indices must be pairwise distinct; a shared index means
/// the caller tried to test two pairs of one matching that overlap.
pub fn segments_disjoint(points: &[Point2], s1: (usize, usize), s2: (usize, usize)) -> Result<bool> {
    let idx = [s1.0, s1.1, s2.0, s2.1];
    for &i in &idx {
        if i >= points.len() {
            return Err(Error::IndexOutOfRange(i));
        }
    }
    if s1.0 == s1.1 || s2.0 == s2.1 || idx[..2].iter().any(|i| idx[2..].contains(i)) {
        return Err(Error::SharedEndpoint(s1.0, s1.1));
    }
    Ok(!closed_segments_intersect(
        &points[s1.0],
        &points[s1.1],
        &points[s2.0],
        &points[s2.1],
    ))
}

/// Sign of the in-circle determinant: `Greater` iff `d` lies strictly inside
/// the circle through the counterclockwise triangle `abc`.
pub fn incircle(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Ordering {
    let row = |p: &Point2| {
        let dx = &p.x - &d.x;
        let dy = &p.y - &d.y;
        let w = &dx * &dx + &dy * &dy;
        (dx, dy, w)
    };
    let (ax, ay, aw) = row(a);
    let (bx, by, bw) = row(b);
    let (cx, cy, cw) = row(c);
    let det = &ax * (&by * &cw - &bw * &cy) - &ay * (&bx * &cw - &bw * &cx) + &aw * (&bx * &cy - &by * &cx);
    det.cmp(&Scalar::zero())
}

/// Strict convex hull (no collinear boundary points), counterclockwise,
/// starting from the lexicographically smallest point.
pub fn convex_hull(points: &[Point2]) -> Result<Vec<usize>> {
    if points.len() < 3 {
        return Err(Error::Precondition("convex hull needs at least three points".into()));
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].lex_cmp(&points[j]));
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            return Err(Error::Duplicate(w[1]));
        }
    }
    let mut hull: Vec<usize> = Vec::with_capacity(points.len() + 1);
    let push_chain = |hull: &mut Vec<usize>, floor: usize, i: usize| {
        while hull.len() >= floor + 2 {
            let a = &points[hull[hull.len() - 2]];
            let b = &points[hull[hull.len() - 1]];
            if orientation(a, b, &points[i]) == Orientation::Ccw {
                break;
            }
            hull.pop();
        }
        hull.push(i);
    };
    for &i in &order {
        push_chain(&mut hull, 0, i);
    }
    let lower_len = hull.len() - 1;
    for &i in order.iter().rev().skip(1) {
        push_chain(&mut hull, lower_len, i);
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(Error::Precondition("all points are collinear".into()));
    }
    Ok(hull)
}
