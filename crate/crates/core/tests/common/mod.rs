#![allow(dead_code)]

use ncm_core::generate::{generate, Family, GenSpec};
use ncm_core::{CircleInstance, DcInstance, Instance, Kind, Mode, PlanarInstance};

pub fn instance(kind: Kind, family: Option<Family>, n: usize, mode: Mode, seed: u64) -> Instance {
    let mut spec = GenSpec::new(kind, n, mode, seed);
    spec.family = family;
    generate(&spec).unwrap().0
}

pub fn planar(kind: Kind, family: Option<Family>, n: usize, mode: Mode, seed: u64) -> PlanarInstance {
    match instance(kind, family, n, mode, seed) {
        Instance::Planar(p) => p,
        _ => unreachable!(),
    }
}

pub fn circle(n: usize, mode: Mode, seed: u64) -> CircleInstance {
    match instance(Kind::Circle, None, n, mode, seed) {
        Instance::Circle(c) => c,
        _ => unreachable!(),
    }
}

pub fn dc(family: Family, n: usize, seed: u64) -> DcInstance {
    match instance(Kind::DoublyCollinear, Some(family), n, Mode::Bi, seed) {
        Instance::DoublyCollinear(d) => d,
        _ => unreachable!(),
    }
}

/// Half-sizes 1..=6 cycling with the seed.
pub fn small_n(seed: u64) -> usize {
    1 + seed as usize % 6
}
