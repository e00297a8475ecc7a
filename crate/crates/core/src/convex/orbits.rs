//! Feasibility classes of bichromatic convex sets and matchings built purely
//! from the cyclic color sequence.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{Color, Pair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Orbit id of each point; ids follow the first point of each orbit.
    pub orbit_of: Vec<usize>,
    /// Points of each orbit in counterclockwise order.
    pub orbits: Vec<Vec<usize>>,
    pub level: Vec<i64>,
}

/// Walking counterclockwise with `s` rising at blue and falling at red, a
/// blue point at `i` gets level `s_i` and a red point at `j` gets `s_{j-1}`.
/// Points of equal level form one orbit.
pub fn compute_orbits_colors(colors: &[Color]) -> Result<OrbitDecomposition> {
    let blue = colors.iter().filter(|&&c| c == Color::Blue).count();
    let red = colors.len() - blue;
    if blue != red {
        return Err(Error::Unbalanced { blue, red });
    }
    let mut s = Vec::with_capacity(colors.len());
    let mut acc = 0i64;
    for &c in colors {
        acc += if c == Color::Blue { 1 } else { -1 };
        s.push(acc);
    }
    let m = colors.len();
    let level: Vec<i64> = (0..m)
        .map(|i| match colors[i] {
            Color::Blue => s[i],
            Color::Red => s[(i + m - 1) % m],
        })
        .collect();
    let mut id_of_level: HashMap<i64, usize> = HashMap::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut orbit_of = vec![0; m];
    for i in 0..m {
        let id = *id_of_level.entry(level[i]).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbit_of[i] = id;
        orbits[id].push(i);
    }
    Ok(OrbitDecomposition { orbit_of, orbits, level })
}

/// Matching of `count` points in cyclic order (positions `0..count`) with
/// every red matched to the next blue of its orbit, or consecutive pairs
/// without colors.
pub fn arbitrary_positions(count: usize, colors: Option<&[Color]>) -> Result<Vec<Pair>> {
    if count % 2 == 1 {
        return Err(Error::OddCount(count));
    }
    let Some(colors) = colors else {
        return Ok((0..count / 2).map(|k| (2 * k, 2 * k + 1)).collect());
    };
    let orbits = compute_orbits_colors(colors)?;
    let mut pairs = Vec::with_capacity(count / 2);
    for orbit in &orbits.orbits {
        for (p, &i) in orbit.iter().enumerate() {
            if colors[i] == Color::Red {
                let j = orbit[(p + 1) % orbit.len()];
                if colors[j] != Color::Blue {
                    return Err(Error::InvalidMatching);
                }
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// `(i, j)` plus arbitrary matchings of the two arcs it cuts off, over `m`
/// points in cyclic order. Feasibility is the caller's check.
pub fn extend_positions(m: usize, colors: Option<&[Color]>, i: usize, j: usize) -> Result<Vec<Pair>> {
    let mut pairs = vec![(i, j)];
    for (from, to) in [(i, j), (j, i)] {
        let arc: Vec<usize> = (1..(to + m - from) % m).map(|t| (from + t) % m).collect();
        let arc_colors: Option<Vec<Color>> = colors.map(|c| arc.iter().map(|&p| c[p]).collect());
        for (a, b) in arbitrary_positions(arc.len(), arc_colors.as_deref())? {
            pairs.push((arc[a], arc[b]));
        }
    }
    Ok(pairs)
}
