//! Sweeps on a worker pool. Points are evaluated in any order but collected
//! in task order, so the output never depends on the worker count.

use rayon::prelude::*;
use xychain_core::sweep::{assemble, evaluate_task, tasks, PointError};
use xychain_core::{OptimizerConfig, QuadratureConfig, SweepGrid, SweepRecord};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "XYCHAIN_WORKERS";

#[derive(Debug, thiserror::Error)]
pub enum ParallelError {
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Point(#[from] PointError),
}

/// Worker count from [`WORKERS_ENV`], else the available parallelism.
/// `Err` carries the offending variable value.
pub fn default_workers() -> Result<usize, String> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(k),
            _ => Err(v),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// [`xychain_core::sweep::run_sweep`] on `workers` threads. On failure the
/// error of the first failing point in grid order is returned.
pub fn run_sweep(
    grid: &SweepGrid,
    quad: &QuadratureConfig,
    opt: &OptimizerConfig,
    workers: usize,
) -> Result<Vec<SweepRecord>, ParallelError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()?;
    let results: Vec<_> = pool.install(|| {
        tasks(grid)
            .par_iter()
            .map(|t| evaluate_task(t, &grid.separations, quad, opt))
            .collect()
    });
    let per_task = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(grid, per_task))
}
