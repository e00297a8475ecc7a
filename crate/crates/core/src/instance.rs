//! Validated point-set instances of the four supported configurations.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{closed_segments_intersect, orientation, squared_distance, Orientation, Point2};
use crate::model::{chords_interleave, Color, MatchingGeometry, Measure, Mode, Pair};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    General,
    Convex,
    Circle,
    DoublyCollinear,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::General => "general",
            Kind::Convex => "convex",
            Kind::Circle => "circle",
            Kind::DoublyCollinear => "doubly_collinear",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        [Kind::General, Kind::Convex, Kind::Circle, Kind::DoublyCollinear]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

fn check_colors(count: usize, colors: Option<&[Color]>) -> Result<()> {
    if count == 0 || count % 2 == 1 {
        return Err(Error::OddCount(count));
    }
    if let Some(c) = colors {
        if c.len() != count {
            return Err(Error::ColorMode);
        }
        let blue = c.iter().filter(|&&x| x == Color::Blue).count();
        let red = count - blue;
        if blue != red {
            return Err(Error::Unbalanced { blue, red });
        }
    }
    Ok(())
}

/// Points in general position or in counterclockwise convex position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarInstance {
    kind: Kind,
    points: Vec<Point2>,
    colors: Option<Vec<Color>>,
}

impl PlanarInstance {
    pub fn new(kind: Kind, points: Vec<Point2>, colors: Option<Vec<Color>>) -> Result<Self> {
        if !matches!(kind, Kind::General | Kind::Convex) {
            return Err(Error::Schema(format!("{} is not a planar kind", kind.name())));
        }
        check_colors(points.len(), colors.as_deref())?;
        check_distinct(&points)?;
        match kind {
            Kind::Convex => check_convex(&points)?,
            _ => check_no_three_collinear(&points)?,
        }
        Ok(PlanarInstance { kind, points, colors })
    }

    /// Skips the quadratic collinearity scan; for generators that guarantee
    /// general position by construction.
    pub(crate) fn new_trusted(kind: Kind, points: Vec<Point2>, colors: Option<Vec<Color>>) -> Self {
        PlanarInstance { kind, points, colors }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }

    /// Half the point count.
    pub fn n(&self) -> usize {
        self.points.len() / 2
    }
}

fn check_distinct(points: &[Point2]) -> Result<()> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].lex_cmp(&points[j]).then(i.cmp(&j)));
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            return Err(Error::Duplicate(w[0].max(w[1])));
        }
    }
    Ok(())
}

fn check_convex(points: &[Point2]) -> Result<()> {
    let m = points.len();
    if m < 3 {
        return Ok(());
    }
    for i in 0..m {
        let (a, b, c) = (&points[i], &points[(i + 1) % m], &points[(i + 2) % m]);
        if orientation(a, b, c) != Orientation::Ccw {
            return Err(Error::NotConvex((i + 1) % m));
        }
    }
    // Locally convex polygons may still wind more than once.
    for i in 1..m - 1 {
        if orientation(&points[0], &points[i], &points[i + 1]) != Orientation::Ccw {
            return Err(Error::NotConvex(i));
        }
    }
    Ok(())
}

/// Slope key of the direction from `a` to `b`; `None` for vertical.
fn slope(a: &Point2, b: &Point2) -> Option<Scalar> {
    let dx = &b.x - &a.x;
    if dx.is_zero() {
        None
    } else {
        Some((&b.y - &a.y) / dx)
    }
}

fn check_no_three_collinear(points: &[Point2]) -> Result<()> {
    let mut seen: HashMap<Option<Scalar>, usize> = HashMap::new();
    for i in 0..points.len() {
        seen.clear();
        for j in i + 1..points.len() {
            if let Some(k) = seen.insert(slope(&points[i], &points[j]), j) {
                return Err(Error::Collinear(i, k, j));
            }
        }
    }
    Ok(())
}

impl MatchingGeometry for PlanarInstance {
    fn point_count(&self) -> usize {
        self.points.len()
    }

    fn color(&self, i: usize) -> Option<Color> {
        self.colors.as_ref().map(|c| c[i])
    }

    fn edge_length(&self, i: usize, j: usize) -> Scalar {
        squared_distance(&self.points[i], &self.points[j])
    }

    fn measure(&self) -> Measure {
        Measure::SquaredLength
    }

    fn edges_disjoint(&self, e: Pair, f: Pair) -> bool {
        if self.kind == Kind::Convex {
            return !chords_interleave(e, f);
        }
        let p = &self.points;
        !closed_segments_intersect(&p[e.0], &p[e.1], &p[f.0], &p[f.1])
    }

    fn convex_order(&self) -> bool {
        self.kind == Kind::Convex
    }
}

/// Points on the unit circle given by their angles in turns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleInstance {
    turns: Vec<Scalar>,
    colors: Option<Vec<Color>>,
}

impl CircleInstance {
    pub fn new(turns: Vec<Scalar>, colors: Option<Vec<Color>>) -> Result<Self> {
        check_colors(turns.len(), colors.as_deref())?;
        for (i, t) in turns.iter().enumerate() {
            if t.is_negative() || *t >= Scalar::one() || (i > 0 && *t <= turns[i - 1]) {
                return Err(Error::BadAngles(i));
            }
        }
        Ok(CircleInstance { turns, colors })
    }

    pub fn turns(&self) -> &[Scalar] {
        &self.turns
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }

    pub fn n(&self) -> usize {
        self.turns.len() / 2
    }

    /// Arc span `min(d, 1 - d)` between two points.
    pub fn span(&self, i: usize, j: usize) -> Scalar {
        let d = (&self.turns[i] - &self.turns[j]).abs();
        let rest = Scalar::one() - &d;
        if rest < d {
            rest
        } else {
            d
        }
    }

    /// Floating point position on the unit circle, for drawing.
    pub fn position(&self, i: usize) -> (f64, f64) {
        let a = crate::scalar::to_f64(&self.turns[i]) * std::f64::consts::TAU;
        (a.cos(), a.sin())
    }
}

/// Squared chord length of a span on the unit circle; floating point since
/// the exact value is generally irrational.
pub fn span_to_squared_chord(span: &Scalar) -> f64 {
    let s = (crate::scalar::to_f64(span) * std::f64::consts::PI).sin();
    4.0 * s * s
}

impl MatchingGeometry for CircleInstance {
    fn point_count(&self) -> usize {
        self.turns.len()
    }

    fn color(&self, i: usize) -> Option<Color> {
        self.colors.as_ref().map(|c| c[i])
    }

    fn edge_length(&self, i: usize, j: usize) -> Scalar {
        self.span(i, j)
    }

    fn measure(&self) -> Measure {
        Measure::ChordSpan
    }

    fn edges_disjoint(&self, e: Pair, f: Pair) -> bool {
        !chords_interleave(e, f)
    }

    fn convex_order(&self) -> bool {
        true
    }
}

/// Red points on one line and blue points on another, both through the
/// origin. Red `i` has index `i`, blue `j` has index `n + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcInstance {
    dir_red: [Scalar; 2],
    dir_blue: [Scalar; 2],
    cos_alpha: Scalar,
    red: Vec<Scalar>,
    blue: Vec<Scalar>,
}

impl DcInstance {
    /// Coordinates are sorted; the index layout refers to the sorted order.
    pub fn new(dir_red: [Scalar; 2], dir_blue: [Scalar; 2], mut red: Vec<Scalar>, mut blue: Vec<Scalar>) -> Result<Self> {
        for d in [&dir_red, &dir_blue] {
            if &d[0] * &d[0] + &d[1] * &d[1] != Scalar::one() {
                return Err(Error::DirectionNotUnit);
            }
        }
        if (&dir_red[0] * &dir_blue[1] - &dir_red[1] * &dir_blue[0]).is_zero() {
            return Err(Error::ParallelLines);
        }
        if red.len() != blue.len() {
            return Err(Error::Unbalanced { blue: blue.len(), red: red.len() });
        }
        if red.is_empty() {
            return Err(Error::OddCount(0));
        }
        red.sort();
        blue.sort();
        for (offset, line) in [(0, &red), (red.len(), &blue)] {
            for (i, c) in line.iter().enumerate() {
                if c.is_zero() {
                    return Err(Error::XInP);
                }
                if i > 0 && *c == line[i - 1] {
                    return Err(Error::Duplicate(offset + i));
                }
            }
        }
        let cos_alpha = &dir_red[0] * &dir_blue[0] + &dir_red[1] * &dir_blue[1];
        Ok(DcInstance { dir_red, dir_blue, cos_alpha, red, blue })
    }

    pub fn dir_red(&self) -> &[Scalar; 2] {
        &self.dir_red
    }

    pub fn dir_blue(&self) -> &[Scalar; 2] {
        &self.dir_blue
    }

    pub fn cos_alpha(&self) -> &Scalar {
        &self.cos_alpha
    }

    pub fn red(&self) -> &[Scalar] {
        &self.red
    }

    pub fn blue(&self) -> &[Scalar] {
        &self.blue
    }

    pub fn n(&self) -> usize {
        self.red.len()
    }

    pub fn red_index(&self, i: usize) -> usize {
        i
    }

    pub fn blue_index(&self, j: usize) -> usize {
        self.n() + j
    }

    /// Squared distance between red at `u` and blue at `v`.
    pub fn cross_sq(&self, u: &Scalar, v: &Scalar) -> Scalar {
        let two = Scalar::from_integer(2.into());
        u * u + v * v - two * u * v * &self.cos_alpha
    }

    /// Coordinate along its own line of the point with instance index `i`.
    pub fn coord(&self, i: usize) -> &Scalar {
        if i < self.n() {
            &self.red[i]
        } else {
            &self.blue[i - self.n()]
        }
    }

    pub fn point(&self, i: usize) -> Point2 {
        let (c, d) = if i < self.n() {
            (&self.red[i], &self.dir_red)
        } else {
            (&self.blue[i - self.n()], &self.dir_blue)
        };
        Point2::new(c * &d[0], c * &d[1])
    }

    pub fn points(&self) -> Vec<Point2> {
        (0..2 * self.n()).map(|i| self.point(i)).collect()
    }
}

impl MatchingGeometry for DcInstance {
    fn point_count(&self) -> usize {
        2 * self.n()
    }

    fn color(&self, i: usize) -> Option<Color> {
        Some(if i < self.n() { Color::Red } else { Color::Blue })
    }

    fn edge_length(&self, i: usize, j: usize) -> Scalar {
        let n = self.n();
        match (i < n, j < n) {
            (true, false) => self.cross_sq(self.coord(i), self.coord(j)),
            (false, true) => self.cross_sq(self.coord(j), self.coord(i)),
            _ => {
                let d = self.coord(i) - self.coord(j);
                &d * &d
            }
        }
    }

    fn measure(&self) -> Measure {
        Measure::SquaredLength
    }

    fn edges_disjoint(&self, e: Pair, f: Pair) -> bool {
        !closed_segments_intersect(&self.point(e.0), &self.point(e.1), &self.point(f.0), &self.point(f.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Planar(PlanarInstance),
    Circle(CircleInstance),
    DoublyCollinear(DcInstance),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Planar(p) => p.kind(),
            Instance::Circle(_) => Kind::Circle,
            Instance::DoublyCollinear(_) => Kind::DoublyCollinear,
        }
    }

    pub fn geometry(&self) -> &dyn MatchingGeometry {
        match self {
            Instance::Planar(p) => p,
            Instance::Circle(c) => c,
            Instance::DoublyCollinear(d) => d,
        }
    }

    pub fn mode(&self) -> Mode {
        self.geometry().mode()
    }

    pub fn len(&self) -> usize {
        self.geometry().point_count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl MatchingGeometry for Instance {
    fn point_count(&self) -> usize {
        self.geometry().point_count()
    }

    fn color(&self, i: usize) -> Option<Color> {
        self.geometry().color(i)
    }

    fn edge_length(&self, i: usize, j: usize) -> Scalar {
        self.geometry().edge_length(i, j)
    }

    fn measure(&self) -> Measure {
        self.geometry().measure()
    }

    fn edges_disjoint(&self, e: Pair, f: Pair) -> bool {
        self.geometry().edges_disjoint(e, f)
    }

    fn convex_order(&self) -> bool {
        self.geometry().convex_order()
    }
}

impl From<PlanarInstance> for Instance {
    fn from(p: PlanarInstance) -> Self {
        Instance::Planar(p)
    }
}

impl From<CircleInstance> for Instance {
    fn from(c: CircleInstance) -> Self {
        Instance::Circle(c)
    }
}

impl From<DcInstance> for Instance {
    fn from(d: DcInstance) -> Self {
        Instance::DoublyCollinear(d)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::scalar::{int, ratio};

    pub fn pts(coords: &[(i64, i64)]) -> Vec<Point2> {
        coords.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()
    }

    pub fn colors(s: &str) -> Vec<Color> {
        s.chars().map(|c| if c == 'B' { Color::Blue } else { Color::Red }).collect()
    }

    pub fn square() -> PlanarInstance {
        PlanarInstance::new(Kind::Convex, pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]), None).unwrap()
    }

    pub fn square_bi(c: &str) -> PlanarInstance {
        PlanarInstance::new(Kind::Convex, pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]), Some(colors(c))).unwrap()
    }

    /// Regular hexagon of circumradius 1. Its vertices are irrational, so
    /// this stands in with the exact squared chord lengths 1, 3 and 4 via a
    /// circle instance when lengths matter; see `hexagon_circle`.
    pub fn hexagon_circle() -> CircleInstance {
        CircleInstance::new((0..6).map(|k| ratio(k, 6)).collect(), None).unwrap()
    }

    /// Affine image of the regular hexagon with integer vertices, used where
    /// only combinatorics matter.
    pub fn hexagon_affine() -> PlanarInstance {
        PlanarInstance::new(Kind::Convex, pts(&[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]), None).unwrap()
    }

    pub fn triangle_interior() -> PlanarInstance {
        PlanarInstance::new(Kind::General, pts(&[(0, 0), (4, 0), (0, 4), (1, 1)]), None).unwrap()
    }

    pub fn dc(dir_r: (i64, i64), dir_b: (i64, i64), red: &[i64], blue: &[i64]) -> DcInstance {
        DcInstance::new(
            [int(dir_r.0), int(dir_r.1)],
            [int(dir_b.0), int(dir_b.1)],
            red.iter().map(|&v| int(v)).collect(),
            blue.iter().map(|&v| int(v)).collect(),
        )
        .unwrap()
    }
}
