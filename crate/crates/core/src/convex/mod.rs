//! Points in convex position.

pub mod dp;
pub mod extremal;
pub mod orbits;

pub use dp::{dp_solve_convex, fill_table, IntervalTable};
pub use extremal::{bichromatic_closest_pair_convex, bichromatic_farthest_pair_convex, extremal_pair_brute};
pub use orbits::{compute_orbits_colors, OrbitDecomposition};

use crate::error::{Error, Result};
use crate::instance::PlanarInstance;
use crate::model::{Color, Extremum, Matching, MatchingGeometry, Mode, Pair, SolveOutcome};

fn require_convex<G: MatchingGeometry + ?Sized>(g: &G) -> Result<()> {
    if !g.convex_order() {
        return Err(Error::Precondition("points must be in convex order".into()));
    }
    Ok(())
}

fn colors_of<G: MatchingGeometry + ?Sized>(g: &G) -> Option<Vec<Color>> {
    (0..g.point_count()).map(|i| g.color(i)).collect()
}

/// Monochromatic: `i + j` odd. Bichromatic: opposite colors and a balanced
/// open interval between them.
pub fn edge_feasible_convex<G: MatchingGeometry + ?Sized>(g: &G, i: usize, j: usize) -> bool {
    if i == j {
        return false;
    }
    match g.mode() {
        Mode::Mono => (i + j) % 2 == 1,
        Mode::Bi => {
            if g.color(i) == g.color(j) {
                return false;
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            let blue = (a + 1..b).filter(|&t| g.color(t) == Some(Color::Blue)).count();
            2 * blue == b - a - 1
        }
    }
}

pub fn compute_orbits<G: MatchingGeometry + ?Sized>(g: &G) -> Result<OrbitDecomposition> {
    let colors = colors_of(g).ok_or_else(|| Error::Precondition("orbits need a bichromatic instance".into()))?;
    compute_orbits_colors(&colors)
}

/// Monochromatic: `(2k, 2k+1)`. Bichromatic: each red to the next blue of
/// its orbit.
pub fn arbitrary_matching_convex<G: MatchingGeometry + ?Sized>(g: &G) -> Result<Matching> {
    require_convex(g)?;
    Matching::new(orbits::arbitrary_positions(g.point_count(), colors_of(g).as_deref())?)
}

/// `e` plus arbitrary matchings of the two arcs on either side of it.
pub fn extend_edge_to_matching_convex<G: MatchingGeometry + ?Sized>(g: &G, e: Pair) -> Result<Matching> {
    require_convex(g)?;
    let m = g.point_count();
    if e.0 >= m || e.1 >= m {
        return Err(Error::IndexOutOfRange(e.0.max(e.1)));
    }
    if !edge_feasible_convex(g, e.0, e.1) {
        return Err(Error::InfeasibleEdge(e.0, e.1));
    }
    Matching::new(orbits::extend_positions(m, colors_of(g).as_deref(), e.0, e.1)?)
}

fn require_planar_convex(inst: &PlanarInstance, mode: Mode) -> Result<()> {
    require_convex(inst)?;
    if inst.mode() != mode {
        return Err(Error::Precondition(format!("expected a {mode:?} instance")));
    }
    Ok(())
}

fn parity_split(inst: &PlanarInstance) -> (Vec<usize>, Vec<usize>) {
    (0..inst.point_count()).partition(|i| i % 2 == 0)
}

fn mono_extremal(inst: &PlanarInstance, dir: Extremum, algorithm: &'static str) -> Result<SolveOutcome> {
    require_planar_convex(inst, Mode::Mono)?;
    let (even, odd) = parity_split(inst);
    let (e, _) = match dir {
        Extremum::Min => bichromatic_closest_pair_convex(inst.points(), &even, &odd)?,
        Extremum::Max => bichromatic_farthest_pair_convex(inst.points(), &even, &odd)?,
    };
    let m = extend_edge_to_matching_convex(inst, e)?;
    SolveOutcome::from_matching(inst, m, dir, algorithm)
}

/// Every even-odd pair is feasible, so the closest such pair is optimal.
pub fn minmin1_convex(inst: &PlanarInstance) -> Result<SolveOutcome> {
    mono_extremal(inst, Extremum::Min, "convex-closest-pair")
}

pub fn maxmax1_convex(inst: &PlanarInstance) -> Result<SolveOutcome> {
    mono_extremal(inst, Extremum::Max, "convex-farthest-pair")
}

fn bi_extremal(inst: &PlanarInstance, dir: Extremum, algorithm: &'static str) -> Result<SolveOutcome> {
    require_planar_convex(inst, Mode::Bi)?;
    let orbits = compute_orbits(inst)?;
    let mut best = crate::model::Best::new(dir);
    for orbit in &orbits.orbits {
        let (blue, red): (Vec<usize>, Vec<usize>) =
            orbit.iter().partition(|&&i| inst.color(i) == Some(Color::Blue));
        let (e, v) = match dir {
            Extremum::Min => bichromatic_closest_pair_convex(inst.points(), &blue, &red)?,
            Extremum::Max => bichromatic_farthest_pair_convex(inst.points(), &blue, &red)?,
        };
        best.offer(v, e);
    }
    let (_, e) = best.into_inner().ok_or(Error::NoMatching)?;
    let m = extend_edge_to_matching_convex(inst, e)?;
    SolveOutcome::from_matching(inst, m, dir, algorithm)
}

/// Within an orbit every blue-red pair is feasible; the answer is the best
/// orbit.
pub fn minmin2_convex(inst: &PlanarInstance) -> Result<SolveOutcome> {
    bi_extremal(inst, Extremum::Min, "convex-orbit-closest-pair")
}

pub fn maxmax2_convex(inst: &PlanarInstance) -> Result<SolveOutcome> {
    bi_extremal(inst, Extremum::Max, "convex-orbit-farthest-pair")
}
