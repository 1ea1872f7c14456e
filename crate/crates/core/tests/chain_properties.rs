//! Whole-pipeline properties of chain states: correlators, X-state physicality,
//! measure bounds, sweep determinism and derivative stability.

use proptest::prelude::*;
use xychain_core::correlators::correlator_sets;
use xychain_core::measures::all_measures;
use xychain_core::sweep::{derivative_lambda, run_sweep};
use xychain_core::{ChainParams, OptimizerConfig, QuadratureConfig, SweepGrid, XState};

fn quad() -> QuadratureConfig {
    QuadratureConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn chain_states_are_physical_and_bounded(
        gamma in 0.0f64..=1.0,
        lambda in 0.0f64..2.5,
        temperature in prop_oneof![Just(0.0), 0.02f64..2.0],
    ) {
        let p = ChainParams::new(gamma, lambda, temperature).unwrap();
        let sets = correlator_sets(&p, &[1, 2, 3], &quad()).unwrap();
        for c in &sets {
            prop_assert!(c.in_range());
            let state = XState::assemble(c).unwrap();
            let m = all_measures(&state, &OptimizerConfig::default()).unwrap();
            prop_assert!(m.deficit >= 0.0);
            prop_assert!(m.deficit <= m.c_rel + 1e-9);
            prop_assert!(m.c_rel >= 0.0 && m.c_l1 >= 0.0);
            prop_assert!(m.c_rel <= 2.0 && m.deficit <= 1.0);
        }
    }
}

#[test]
fn single_point_at_zero_field_is_uncorrelated() {
    let grid = SweepGrid::point(0.5, 0.0, 0.0, vec![1]).unwrap();
    let records = run_sweep(&grid, &quad(), &OptimizerConfig::default()).unwrap();
    assert_eq!(records.len(), 1);
    let r = records[0];
    assert_eq!((r.deficit, r.c_l1, r.c_rel), (0.0, 0.0, 0.0));
}

#[test]
fn sweep_is_bit_deterministic() {
    let grid = SweepGrid::new(0.1, 1.9, 0.3, vec![0.3, 1.0], vec![0.0, 0.4], vec![1, 2]).unwrap();
    let a = run_sweep(&grid, &quad(), &OptimizerConfig::default()).unwrap();
    let b = run_sweep(&grid, &quad(), &OptimizerConfig::default()).unwrap();
    assert_eq!(a.len(), 2 * 2 * 2 * 7);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(format!("{x:?}"), format!("{y:?}"));
    }
}

#[test]
fn fig1_sweep_has_100_points_and_coincides_below_one() {
    let grid = SweepGrid::new(0.02, 2.0, 0.02, vec![0.5], vec![0.0], vec![1]).unwrap();
    let records = run_sweep(&grid, &quad(), &OptimizerConfig::default()).unwrap();
    assert_eq!(records.len(), 100);
    for r in records.iter().filter(|r| r.lambda <= 1.0) {
        assert!((r.deficit - r.c_rel).abs() < 1e-6, "λ={}", r.lambda);
    }
}

#[test]
fn derivatives_stable_away_from_criticality() {
    let run = |step: f64| {
        let grid = SweepGrid::new(0.2, 0.7, step, vec![0.5], vec![0.0], vec![1]).unwrap();
        let records = run_sweep(&grid, &quad(), &OptimizerConfig::default()).unwrap();
        derivative_lambda(&records).unwrap()
    };
    let coarse = run(0.02);
    let fine = run(0.01);
    // interior points shared by both grids
    for c in &coarse[1..coarse.len() - 1] {
        let f = fine
            .iter()
            .find(|f| (f.lambda - c.lambda).abs() < 1e-9)
            .unwrap();
        assert!((f.d_deficit - c.d_deficit).abs() < 1e-3);
        assert!((f.d_c_l1 - c.d_c_l1).abs() < 1e-3);
        assert!((f.d_c_rel - c.d_c_rel).abs() < 1e-3);
    }
}

#[test]
fn thermal_records_respect_bounds() {
    let grid = SweepGrid::new(0.1, 2.0, 0.1, vec![0.0, 1.0], vec![0.1, 0.5, 1.5], vec![1]).unwrap();
    for r in run_sweep(&grid, &quad(), &OptimizerConfig::default()).unwrap() {
        assert!(r.deficit >= 0.0 && r.deficit <= r.c_rel + 1e-9);
        assert!(r.c_rel >= 0.0 && r.c_l1 >= 0.0);
        assert!(XState::new(r.sz, r.xx, r.yy, r.zz).is_ok());
    }
}
