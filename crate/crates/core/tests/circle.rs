mod common;

use common::{circle, small_n};
use ncm_core::circle::*;
use ncm_core::convex::dp_solve_convex;
use ncm_core::oracle::{enumerate_ncpm, oracle_filtered, oracle_solve, DEFAULT_CAP};
use ncm_core::{validate_matching, CircleInstance, Extremum, MatchingGeometry, Mode, Variant};
use proptest::prelude::*;

fn corpus(mode: Mode) -> impl Iterator<Item = (u64, CircleInstance)> {
    (0..220).map(move |s| (s, circle(small_n(s), mode, s)))
}

#[test]
fn solvers_match_oracle() {
    for (seed, c) in corpus(Mode::Mono) {
        let best = |v| oracle_solve(&c, v, DEFAULT_CAP).unwrap().value;
        for (out, v) in [
            (maxmin1_circle(&c).unwrap(), Variant::MAX_MIN),
            (minmax1_circle(&c).unwrap(), Variant::MIN_MAX),
            (minmin_circle(&c).unwrap(), Variant::MIN_MIN),
            (maxmax_circle(&c).unwrap(), Variant::MAX_MAX),
        ] {
            assert_eq!(out.value, best(v), "seed {seed} {v}");
            assert!(validate_matching(&c, out.matching.as_ref().unwrap()).unwrap().ok());
        }
    }
    for (seed, c) in corpus(Mode::Bi) {
        let best = |v| oracle_solve(&c, v, DEFAULT_CAP).unwrap().value;
        assert_eq!(minmin_circle(&c).unwrap().value, best(Variant::MIN_MIN), "seed {seed}");
        assert_eq!(maxmax_circle(&c).unwrap().value, best(Variant::MAX_MAX), "seed {seed}");
        for v in [Variant::MIN_MAX, Variant::MAX_MIN] {
            assert_eq!(dp_solve_convex(&c, v).unwrap().value, best(v), "seed {seed} {v}");
        }
    }
}

#[test]
fn maxmin_matches_dp_mid_scale() {
    for seed in 0..30 {
        let c = circle(2 + seed as usize, Mode::Mono, seed);
        assert_eq!(maxmin1_circle(&c).unwrap().value, dp_solve_convex(&c, Variant::MAX_MIN).unwrap().value);
    }
}

#[test]
fn decreasing_chords_property() {
    for (seed, c) in corpus(Mode::Mono).take(80) {
        let m = c.point_count();
        for i in 0..m {
            for j in i + 1..m {
                let e = c.span(i, j);
                let side_ok = |side: Vec<usize>| {
                    side.iter().all(|&a| side.iter().all(|&b| a == b || c.span(a, b) <= e))
                };
                let inside: Vec<usize> = (i + 1..j).collect();
                let outside: Vec<usize> = (j + 1..m).chain(0..i).collect();
                assert!(side_ok(inside) || side_ok(outside), "seed {seed} ({i},{j})");
            }
        }
    }
}

#[test]
fn shortest_edge_is_boundary() {
    for (seed, c) in corpus(Mode::Mono).take(120) {
        let m = c.point_count();
        for mm in enumerate_ncpm(&c, DEFAULT_CAP).unwrap() {
            let shortest = mm.pairs().iter().map(|&(a, b)| c.span(a, b)).min().unwrap();
            assert!(
                mm.pairs().iter().any(|&e| c.span(e.0, e.1) == shortest && is_boundary(m, e)),
                "seed {seed}"
            );
        }
    }
}

#[test]
fn forbidden_chain_criterion_matches_enumeration() {
    for (seed, c) in corpus(Mode::Mono) {
        let m = c.point_count();
        for mask_bits in [seed as usize * 7919 % (1 << m), (seed as usize * 104729) % (1 << m), (1 << m) - 1, 0] {
            let mask: Vec<bool> = (0..m).map(|t| mask_bits >> t & 1 == 1).collect();
            let uses_forbidden = |pairs: &[(usize, usize)]| {
                pairs.iter().any(|&(a, b)| {
                    (0..m).any(|t| mask[t] && [(t, (t + 1) % m), ((t + 1) % m, t)].contains(&(a, b)))
                })
            };
            let exists = !oracle_filtered(&c, Extremum::Min, DEFAULT_CAP, |p| !uses_forbidden(p)).unwrap().is_empty();
            assert_eq!(has_matching_avoiding(&mask), exists, "seed {seed} mask {mask:?}");
            assert_eq!(has_matching_avoiding(&mask), max_forbidden_chain(&mask) < m / 2);
        }
    }
}

#[test]
fn threshold_construction_succeeds_exactly_when_possible() {
    for (seed, c) in corpus(Mode::Mono).take(120) {
        let bounds = boundary_lengths(&c);
        for mu in &bounds {
            let ok = has_matching_avoiding(&forbidden_mask(&c, mu));
            match construct_matching_with_threshold(&c, mu) {
                Ok(mm) => {
                    assert!(ok, "seed {seed}");
                    assert!(validate_matching(&c, &mm).unwrap().ok());
                    assert!(mm.pairs().iter().all(|&(a, b)| c.span(a, b) >= *mu));
                }
                Err(_) => assert!(!ok, "seed {seed}"),
            }
        }
    }
}

fn naive_min_of_max(values: &[u32], w: usize) -> u32 {
    (0..values.len()).map(|s| (0..w).map(|t| values[(s + t) % values.len()]).max().unwrap()).min().unwrap()
}

proptest! {
    #[test]
    fn sliding_window_matches_naive(values in prop::collection::vec(0u32..6, 1..40), w in 1usize..40) {
        let w = 1 + (w - 1) % values.len();
        let got = sliding_window_min_of_max(&values, w).unwrap();
        prop_assert_eq!(values[got.argmax], naive_min_of_max(&values, w));
        prop_assert!((0..w).any(|t| (got.start + t) % values.len() == got.argmax));
    }
}
