//! Fixtures shared by the benchmarks.

use ncm_core::generate::{generate, Family, GenSpec};
use ncm_core::{CircleInstance, DcInstance, Instance, Kind, Mode, PlanarInstance};

pub fn instance(kind: Kind, family: Option<Family>, n: usize, mode: Mode) -> Instance {
    let mut spec = GenSpec::new(kind, n, mode, 0);
    spec.family = family;
    generate(&spec).expect("benchmark instance").0
}

pub fn planar(kind: Kind, family: Option<Family>, n: usize, mode: Mode) -> PlanarInstance {
    match instance(kind, family, n, mode) {
        Instance::Planar(p) => p,
        _ => unreachable!(),
    }
}

pub fn circle(n: usize, mode: Mode) -> CircleInstance {
    match instance(Kind::Circle, None, n, mode) {
        Instance::Circle(c) => c,
        _ => unreachable!(),
    }
}

pub fn doubly_collinear(family: Family, n: usize) -> DcInstance {
    match instance(Kind::DoublyCollinear, Some(family), n, Mode::Bi) {
        Instance::DoublyCollinear(d) => d,
        _ => unreachable!(),
    }
}
