//! Parameter sweeps, λ-derivatives and critical-point location.
//!
//! A sweep is split into independent [`SweepTask`]s, one per
//! `(γ, kT, λ)`, each yielding a record for every separation. Callers may
//! evaluate tasks in any order or in parallel; [`assemble`] restores the fixed
//! output order `(γ, kT, n, λ)`.

use alloc::vec::Vec;
use core::fmt;

use crate::correlators::{correlator_sets, ChainParams, MAX_SEPARATION};
use crate::measures::{all_measures, OptimizerConfig};
use crate::quadrature::QuadratureConfig;
use crate::xstate::XState;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub lambda_start: f64,
    pub lambda_end: f64,
    pub lambda_step: f64,
    pub gammas: Vec<f64>,
    pub temperatures: Vec<f64>,
    pub separations: Vec<usize>,
}

/// `start, start + step, ...` up to `end` (inclusive, with a relative slack of
/// 1e-9 steps so that decimal steps land on the end point).
pub fn lambda_values(start: f64, end: f64, step: f64) -> Vec<f64> {
    let count = libm::floor((end - start) / step + 1e-9) as usize + 1;
    (0..count).map(|i| start + step * i as f64).collect()
}

fn sort_dedup(v: &mut Vec<f64>) {
    v.sort_by(f64::total_cmp);
    v.dedup();
}

impl SweepGrid {
    /// Validated grid with the γ, kT and n lists sorted and deduplicated.
    pub fn new(
        lambda_start: f64,
        lambda_end: f64,
        lambda_step: f64,
        mut gammas: Vec<f64>,
        mut temperatures: Vec<f64>,
        mut separations: Vec<usize>,
    ) -> Result<Self> {
        sort_dedup(&mut gammas);
        sort_dedup(&mut temperatures);
        separations.sort_unstable();
        separations.dedup();
        let grid = Self {
            lambda_start,
            lambda_end,
            lambda_step,
            gammas,
            temperatures,
            separations,
        };
        grid.validate()?;
        Ok(grid)
    }

    /// A single λ value.
    pub fn point(
        gamma: f64,
        lambda: f64,
        temperature: f64,
        separations: Vec<usize>,
    ) -> Result<Self> {
        Self::new(
            lambda,
            lambda,
            1.0,
            alloc::vec![gamma],
            alloc::vec![temperature],
            separations,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |name, value, reason| {
            Err(Error::InvalidParameter {
                name,
                value,
                reason,
            })
        };
        if !(self.lambda_step > 0.0 && self.lambda_step.is_finite()) {
            return invalid("lambda_step", self.lambda_step, "must be positive");
        }
        if !(self.lambda_start <= self.lambda_end) {
            return invalid(
                "lambda_start",
                self.lambda_start,
                "must not exceed lambda_end",
            );
        }
        if self.gammas.is_empty() || self.temperatures.is_empty() || self.separations.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &n in &self.separations {
            if n == 0 || n > MAX_SEPARATION {
                return invalid("n", n as f64, "separation must lie in [1, 50]");
            }
        }
        for &g in &self.gammas {
            for &t in &self.temperatures {
                ChainParams::new(g, self.lambda_start, t)?;
                ChainParams::new(g, self.lambda_end, t)?;
            }
        }
        Ok(())
    }

    pub fn lambdas(&self) -> Vec<f64> {
        lambda_values(self.lambda_start, self.lambda_end, self.lambda_step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub gamma: f64,
    pub lambda: f64,
    pub temperature: f64,
    pub n: usize,
    pub sz: f64,
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
    pub deficit: f64,
    pub c_l1: f64,
    pub c_rel: f64,
    pub theta_opt: f64,
    pub phi_opt: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Correlators,
    XState,
    Measures,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Correlators => "correlators",
            Stage::XState => "x-state assembly",
            Stage::Measures => "measures",
        })
    }
}

/// A failed grid point, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("point gamma={gamma} lambda={lambda} kT={temperature}{} failed in {stage}: {source}",
        .n.map(|n| alloc::format!(" n={n}")).unwrap_or_default())]
pub struct PointError {
    pub gamma: f64,
    pub lambda: f64,
    pub temperature: f64,
    pub n: Option<usize>,
    pub stage: Stage,
    pub source: Error,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepTask {
    pub gamma: f64,
    pub temperature: f64,
    pub lambda: f64,
}

/// Tasks in `(γ, kT, λ)` order.
pub fn tasks(grid: &SweepGrid) -> Vec<SweepTask> {
    let lambdas = grid.lambdas();
    let mut out = Vec::with_capacity(grid.gammas.len() * grid.temperatures.len() * lambdas.len());
    for &gamma in &grid.gammas {
        for &temperature in &grid.temperatures {
            for &lambda in &lambdas {
                out.push(SweepTask {
                    gamma,
                    temperature,
                    lambda,
                });
            }
        }
    }
    out
}

/// Records for every separation at one `(γ, kT, λ)`.
pub fn evaluate_task(
    task: &SweepTask,
    separations: &[usize],
    quad: &QuadratureConfig,
    opt: &OptimizerConfig,
) -> core::result::Result<Vec<SweepRecord>, PointError> {
    let fail = |n, stage, source| PointError {
        gamma: task.gamma,
        lambda: task.lambda,
        temperature: task.temperature,
        n,
        stage,
        source,
    };
    let sets = ChainParams::new(task.gamma, task.lambda, task.temperature)
        .and_then(|p| correlator_sets(&p, separations, quad))
        .map_err(|e| fail(None, Stage::Correlators, e))?;
    sets.iter()
        .map(|c| {
            let state = XState::assemble(c).map_err(|e| fail(Some(c.n), Stage::XState, e))?;
            let m = all_measures(&state, opt).map_err(|e| fail(Some(c.n), Stage::Measures, e))?;
            Ok(SweepRecord {
                gamma: task.gamma,
                lambda: task.lambda,
                temperature: task.temperature,
                n: c.n,
                sz: c.sz,
                xx: c.xx,
                yy: c.yy,
                zz: c.zz,
                deficit: m.deficit,
                c_l1: m.c_l1,
                c_rel: m.c_rel,
                theta_opt: m.argmin.theta,
                phi_opt: m.argmin.phi,
            })
        })
        .collect()
}

/// Reorders per-task results (given in [`tasks`] order) into `(γ, kT, n, λ)`.
pub fn assemble(grid: &SweepGrid, per_task: Vec<Vec<SweepRecord>>) -> Vec<SweepRecord> {
    let n_lambda = grid.lambdas().len();
    let n_sep = grid.separations.len();
    let mut out = Vec::with_capacity(per_task.len() * n_sep);
    for block in per_task.chunks(n_lambda) {
        for k in 0..n_sep {
            out.extend(block.iter().map(|records| records[k]));
        }
    }
    out
}

/// Sequential sweep. The first failing point aborts the run.
pub fn run_sweep(
    grid: &SweepGrid,
    quad: &QuadratureConfig,
    opt: &OptimizerConfig,
) -> core::result::Result<Vec<SweepRecord>, PointError> {
    let per_task = tasks(grid)
        .iter()
        .map(|t| evaluate_task(t, &grid.separations, quad, opt))
        .collect::<core::result::Result<Vec<_>, _>>()?;
    Ok(assemble(grid, per_task))
}

/// Finite-temperature map over λ × kT at fixed γ and separation.
pub fn thermal_map(
    gamma: f64,
    lambda_range: (f64, f64, f64),
    temperatures: Vec<f64>,
    n: usize,
    quad: &QuadratureConfig,
    opt: &OptimizerConfig,
) -> core::result::Result<Vec<SweepRecord>, PointError> {
    let grid_error = |source| PointError {
        gamma,
        lambda: lambda_range.0,
        temperature: f64::NAN,
        n: Some(n),
        stage: Stage::Correlators,
        source,
    };
    if let Some(&t) = temperatures.iter().find(|&&t| !(t > 0.0)) {
        return Err(grid_error(Error::InvalidParameter {
            name: "temperature",
            value: t,
            reason: "thermal maps need kT > 0",
        }));
    }
    let (start, end, step) = lambda_range;
    let grid = SweepGrid::new(
        start,
        end,
        step,
        alloc::vec![gamma],
        temperatures,
        alloc::vec![n],
    )
    .map_err(grid_error)?;
    run_sweep(&grid, quad, opt)
}

/// Consecutive records sharing `(γ, kT, n)`.
pub fn groups(records: &[SweepRecord]) -> impl Iterator<Item = &[SweepRecord]> {
    records.chunk_by(|a, b| a.gamma == b.gamma && a.temperature == b.temperature && a.n == b.n)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeRecord {
    pub gamma: f64,
    pub temperature: f64,
    pub n: usize,
    pub lambda: f64,
    pub d_deficit: f64,
    pub d_c_l1: f64,
    pub d_c_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Deficit,
    L1Coherence,
    RelativeEntropyCoherence,
}

impl Measure {
    pub const ALL: [Measure; 3] = [
        Measure::Deficit,
        Measure::L1Coherence,
        Measure::RelativeEntropyCoherence,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Deficit => "deficit",
            Measure::L1Coherence => "c_l1",
            Measure::RelativeEntropyCoherence => "c_rel",
        }
    }

    pub fn of_record(&self, r: &SweepRecord) -> f64 {
        match self {
            Measure::Deficit => r.deficit,
            Measure::L1Coherence => r.c_l1,
            Measure::RelativeEntropyCoherence => r.c_rel,
        }
    }

    pub fn of_derivative(&self, d: &DerivativeRecord) -> f64 {
        match self {
            Measure::Deficit => d.d_deficit,
            Measure::L1Coherence => d.d_c_l1,
            Measure::RelativeEntropyCoherence => d.d_c_rel,
        }
    }
}

/// Tolerance on λ spacing uniformity.
const SPACING_TOL: f64 = 1e-12;

/// `dQ/dλ` for every measure: central differences inside, one-sided at the
/// ends. Needs at least two records of a single `(γ, kT, n)` group on a
/// uniform λ grid.
pub fn derivative_lambda(records: &[SweepRecord]) -> Result<Vec<DerivativeRecord>> {
    if records.len() < 2 {
        return Err(Error::EmptyInput);
    }
    let first = &records[0];
    if records
        .iter()
        .any(|r| r.gamma != first.gamma || r.temperature != first.temperature || r.n != first.n)
    {
        return Err(Error::MixedGroup);
    }
    let h = records[1].lambda - records[0].lambda;
    for w in records.windows(2) {
        let d = w[1].lambda - w[0].lambda;
        if !(libm::fabs(d - h) <= SPACING_TOL) || !(h > 0.0) {
            return Err(Error::Spacing {
                expected: h,
                found: d,
            });
        }
    }
    let last = records.len() - 1;
    let diff = |m: Measure, i: usize| {
        let q = |k: usize| m.of_record(&records[k]);
        if i == 0 {
            (q(1) - q(0)) / h
        } else if i == last {
            (q(last) - q(last - 1)) / h
        } else {
            (q(i + 1) - q(i - 1)) / (2.0 * h)
        }
    };
    Ok((0..records.len())
        .map(|i| DerivativeRecord {
            gamma: first.gamma,
            temperature: first.temperature,
            n: first.n,
            lambda: records[i].lambda,
            d_deficit: diff(Measure::Deficit, i),
            d_c_l1: diff(Measure::L1Coherence, i),
            d_c_rel: diff(Measure::RelativeEntropyCoherence, i),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPointEstimate {
    pub lambda_c: f64,
    /// One λ grid step.
    pub uncertainty: f64,
    pub measure: Measure,
    pub derivative_peak: f64,
}

/// λ at which `|dQ/dλ|` peaks; ties go to the smaller λ.
pub fn detect_critical_point(
    derivatives: &[DerivativeRecord],
    measure: Measure,
) -> Result<CriticalPointEstimate> {
    let mut best: Option<&DerivativeRecord> = None;
    for d in derivatives {
        let v = libm::fabs(measure.of_derivative(d));
        best = match best {
            Some(b) => {
                let bv = libm::fabs(measure.of_derivative(b));
                if v > bv || (v == bv && d.lambda < b.lambda) {
                    Some(d)
                } else {
                    Some(b)
                }
            }
            None => Some(d),
        };
    }
    let best = best.ok_or(Error::EmptyInput)?;
    let uncertainty = if derivatives.len() > 1 {
        libm::fabs(derivatives[1].lambda - derivatives[0].lambda)
    } else {
        0.0
    };
    Ok(CriticalPointEstimate {
        lambda_c: best.lambda,
        uncertainty,
        measure,
        derivative_peak: measure.of_derivative(best),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    fn record(lambda: f64, q: f64) -> SweepRecord {
        SweepRecord {
            gamma: 0.5,
            lambda,
            temperature: 0.0,
            n: 1,
            sz: 0.0,
            xx: 0.0,
            yy: 0.0,
            zz: 0.0,
            deficit: q,
            c_l1: q,
            c_rel: q,
            theta_opt: 0.0,
            phi_opt: 0.0,
        }
    }

    #[test]
    fn lambda_values_hit_decimal_end_points() {
        let v = lambda_values(0.02, 2.0, 0.02);
        assert_eq!(v.len(), 100);
        assert_abs_diff_eq!(*v.last().unwrap(), 2.0, epsilon = 1e-12);
        assert_eq!(lambda_values(0.01, 2.0, 0.01).len(), 200);
        assert_eq!(lambda_values(1.0, 1.0, 0.5), vec![1.0]);
    }

    #[test]
    fn grid_validation() {
        assert!(SweepGrid::new(2.0, 1.0, 0.1, vec![0.5], vec![0.0], vec![1]).is_err());
        assert!(SweepGrid::new(0.0, 1.0, 0.0, vec![0.5], vec![0.0], vec![1]).is_err());
        assert!(SweepGrid::new(0.0, 1.0, 0.1, vec![1.5], vec![0.0], vec![1]).is_err());
        assert!(SweepGrid::new(0.0, 1.0, 0.1, vec![0.5], vec![-1.0], vec![1]).is_err());
        assert!(SweepGrid::new(0.0, 1.0, 0.1, vec![0.5], vec![0.0], vec![0]).is_err());
        assert!(SweepGrid::new(0.0, 1.0, 0.1, vec![0.5], vec![0.0], vec![]).is_err());
        let g =
            SweepGrid::new(0.0, 1.0, 0.1, vec![1.0, 0.5, 0.5], vec![0.0], vec![5, 1, 2]).unwrap();
        assert_eq!(g.gammas, vec![0.5, 1.0]);
        assert_eq!(g.separations, vec![1, 2, 5]);
    }

    #[test]
    fn single_product_point_has_zero_measures() {
        let grid = SweepGrid::point(0.5, 0.0, 0.0, vec![1]).unwrap();
        let r = run_sweep(
            &grid,
            &QuadratureConfig::default(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0].deficit, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r[0].c_l1, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r[0].c_rel, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn records_come_out_in_gamma_temperature_n_lambda_order() {
        let grid =
            SweepGrid::new(0.2, 0.6, 0.2, vec![1.0, 0.5], vec![0.1, 0.0], vec![2, 1]).unwrap();
        let opt = OptimizerConfig {
            grid_points: 8,
            ..Default::default()
        };
        let r = run_sweep(&grid, &QuadratureConfig::default(), &opt).unwrap();
        assert_eq!(r.len(), 2 * 2 * 2 * 3);
        let keys: Vec<_> = r
            .iter()
            .map(|x| (x.gamma, x.temperature, x.n, x.lambda))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_by(|a, b| {
            a.0.total_cmp(&b.0)
                .then(a.1.total_cmp(&b.1))
                .then(a.2.cmp(&b.2))
                .then(a.3.total_cmp(&b.3))
        });
        assert_eq!(keys, sorted);
        assert_eq!(groups(&r).count(), 8);
    }

    #[test]
    fn failing_point_reports_context() {
        let task = SweepTask {
            gamma: 0.5,
            temperature: 0.0,
            lambda: 0.5,
        };
        let quad = QuadratureConfig {
            initial_nodes: 16,
            max_doublings: 1,
            abs_tol: 1e-16,
        };
        let err = evaluate_task(&task, &[1], &quad, &OptimizerConfig::default()).unwrap_err();
        assert_eq!(err.stage, Stage::Correlators);
        assert_eq!(err.lambda, 0.5);
        let msg = alloc::string::ToString::to_string(&err);
        assert!(
            msg.contains("lambda=0.5") && msg.contains("correlators"),
            "{msg}"
        );
    }

    #[test]
    fn derivative_of_constant_and_linear() {
        let flat: Vec<_> = (0..5).map(|i| record(0.1 * i as f64, 3.0)).collect();
        assert!(derivative_lambda(&flat)
            .unwrap()
            .iter()
            .all(|d| d.d_deficit == 0.0));
        let line: Vec<_> = (0..5)
            .map(|i| {
                let l = 0.25 * i as f64;
                record(l, l)
            })
            .collect();
        let d = derivative_lambda(&line).unwrap();
        assert_eq!(d.len(), 5);
        for x in &d {
            assert_abs_diff_eq!(x.d_c_rel, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn derivative_errors() {
        let uneven = vec![record(0.0, 0.0), record(0.1, 0.0), record(0.3, 0.0)];
        assert!(matches!(
            derivative_lambda(&uneven),
            Err(Error::Spacing { .. })
        ));
        let mut mixed = vec![record(0.0, 0.0), record(0.1, 0.0)];
        mixed[1].n = 2;
        assert!(matches!(derivative_lambda(&mixed), Err(Error::MixedGroup)));
        assert!(matches!(derivative_lambda(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn critical_point_detection() {
        let records: Vec<_> = (0..21)
            .map(|i| record(i as f64, -((i - 10) as f64).abs()))
            .collect();
        let d = derivative_lambda(&records).unwrap();
        // |dQ/dλ| = 1 on both sides and 0 at the kink; the smallest λ wins the tie
        let c = detect_critical_point(&d, Measure::Deficit).unwrap();
        assert_eq!(c.lambda_c, 0.0);
        assert_eq!(c.uncertainty, 1.0);

        let peaked: Vec<_> = (0..21)
            .map(|i| {
                let l = 0.9 + 0.01 * i as f64;
                DerivativeRecord {
                    gamma: 0.5,
                    temperature: 0.0,
                    n: 1,
                    lambda: l,
                    d_deficit: 1.0 / (1e-3 + (l - 1.0).abs()),
                    d_c_l1: 0.0,
                    d_c_rel: 0.0,
                }
            })
            .collect();
        let c = detect_critical_point(&peaked, Measure::Deficit).unwrap();
        assert_abs_diff_eq!(c.lambda_c, 1.0, epsilon = 1e-12);
        assert!(matches!(
            detect_critical_point(&[], Measure::Deficit),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn thermal_map_requires_positive_temperature() {
        let q = QuadratureConfig::default();
        let o = OptimizerConfig::default();
        assert!(thermal_map(0.0, (0.5, 1.0, 0.5), vec![0.0, 0.1], 1, &q, &o).is_err());
        let r = thermal_map(0.0, (0.5, 1.0, 0.5), vec![0.2, 0.1], 1, &q, &o).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r[0].temperature, 0.1);
    }
}
