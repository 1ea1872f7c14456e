//! Derivative-free minimization over a 2-D box.
//!
//! A uniform grid (endpoints included) gives global coverage. The best grid
//! local minima seed a box-clamped Nelder-Mead, and golden-section searches
//! along the four box edges pick up boundary minima that a clamped simplex
//! approaches only slowly.

use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lower: [f64; 2],
    pub upper: [f64; 2],
}

impl Bounds {
    fn clamp(&self, p: [f64; 2]) -> [f64; 2] {
        [
            p[0].clamp(self.lower[0], self.upper[0]),
            p[1].clamp(self.lower[1], self.upper[1]),
        ]
    }

    fn grid_coord(&self, axis: usize, i: usize, points: usize) -> f64 {
        if i + 1 == points {
            return self.upper[axis];
        }
        let t = i as f64 / (points - 1) as f64;
        self.lower[axis] + t * (self.upper[axis] - self.lower[axis])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Grid points per axis, endpoints included.
    pub grid_points: usize,
    /// Value tolerance: refinement stops below it, and candidates within it
    /// of the best value count as ties.
    pub tol: f64,
    pub max_iters: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub point: [f64; 2],
    pub value: f64,
}

/// Number of grid local minima used as Nelder-Mead starts.
const MAX_STARTS: usize = 4;

/// Minimizes `f` over `bounds`. The reported value is the lowest one found;
/// the reported point is the lexicographically smallest candidate whose value
/// is within `settings.tol` of it.
pub fn minimize_box<F: FnMut([f64; 2]) -> f64>(
    mut f: F,
    bounds: &Bounds,
    settings: &Settings,
) -> Minimum {
    let n = settings.grid_points.max(2);
    let mut grid = Vec::with_capacity(n * n);
    for i in 0..n {
        let x = bounds.grid_coord(0, i, n);
        for j in 0..n {
            let y = bounds.grid_coord(1, j, n);
            grid.push(f([x, y]));
        }
    }
    let at = |i: usize, j: usize| grid[i * n + j];

    let mut candidates: Vec<Minimum> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            candidates.push(Minimum {
                point: [bounds.grid_coord(0, i, n), bounds.grid_coord(1, j, n)],
                value: at(i, j),
            });
        }
    }

    // grid cells that are no worse than their 8 neighbours
    let mut local: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = at(i, j);
            let mut is_min = true;
            'nb: for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let (a, b) = (i as i64 + di, j as i64 + dj);
                    if (di, dj) == (0, 0) || a < 0 || b < 0 || a >= n as i64 || b >= n as i64 {
                        continue;
                    }
                    if at(a as usize, b as usize) < v {
                        is_min = false;
                        break 'nb;
                    }
                }
            }
            if is_min {
                local.push((i, j));
            }
        }
    }
    local.sort_by(|a, b| at(a.0, a.1).total_cmp(&at(b.0, b.1)).then(a.cmp(b)));
    local.dedup_by(|a, b| at(a.0, a.1) == at(b.0, b.1));

    let step = [
        (bounds.upper[0] - bounds.lower[0]) / (n - 1) as f64,
        (bounds.upper[1] - bounds.lower[1]) / (n - 1) as f64,
    ];
    for &(i, j) in local.iter().take(MAX_STARTS) {
        let start = [bounds.grid_coord(0, i, n), bounds.grid_coord(1, j, n)];
        candidates.push(nelder_mead(&mut f, start, step, bounds, settings));
    }

    // edges: theta/x fixed at either bound, then y fixed at either bound
    for axis in 0..2 {
        let free = 1 - axis;
        for fixed in [bounds.lower[axis], bounds.upper[axis]] {
            let idx = if fixed == bounds.lower[axis] {
                0
            } else {
                n - 1
            };
            let best = (0..n)
                .min_by(|&a, &b| {
                    let va = if axis == 0 { at(idx, a) } else { at(a, idx) };
                    let vb = if axis == 0 { at(idx, b) } else { at(b, idx) };
                    va.total_cmp(&vb)
                })
                .unwrap_or(0);
            let centre = bounds.grid_coord(free, best, n);
            let lo = (centre - step[free]).max(bounds.lower[free]);
            let hi = (centre + step[free]).min(bounds.upper[free]);
            let mut line = |t: f64| {
                let mut p = [0.0; 2];
                p[axis] = fixed;
                p[free] = t;
                f(p)
            };
            let (t, value) = golden_section(&mut line, lo, hi, settings.max_iters);
            let mut point = [0.0; 2];
            point[axis] = fixed;
            point[free] = t;
            candidates.push(Minimum { point, value });
        }
    }

    let best_value = candidates
        .iter()
        .map(|c| c.value)
        .fold(f64::INFINITY, f64::min);
    let point = candidates
        .iter()
        .filter(|c| c.value <= best_value + settings.tol)
        .map(|c| c.point)
        .min_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])))
        .unwrap_or(bounds.lower);
    Minimum {
        point,
        value: best_value,
    }
}

/// Nelder-Mead with every trial point clamped into `bounds`.
pub fn nelder_mead<F: FnMut([f64; 2]) -> f64>(
    f: &mut F,
    start: [f64; 2],
    step: [f64; 2],
    bounds: &Bounds,
    settings: &Settings,
) -> Minimum {
    let mut simplex: [[f64; 2]; 3] = [
        bounds.clamp(start),
        bounds.clamp([start[0] + step[0], start[1]]),
        bounds.clamp([start[0], start[1] + step[1]]),
    ];
    // a start on the upper bound collapses a vertex; mirror it inward
    for (k, vertex) in simplex.iter_mut().enumerate().skip(1) {
        if *vertex == start {
            let axis = k - 1;
            vertex[axis] = (start[axis] - step[axis]).max(bounds.lower[axis]);
        }
    }
    let mut values = simplex.map(&mut *f);

    for _ in 0..settings.max_iters {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let (b, m, w) = (order[0], order[1], order[2]);
        let spread = values[w] - values[b];
        let size = (0..3)
            .map(|k| {
                let dx = simplex[k][0] - simplex[b][0];
                let dy = simplex[k][1] - simplex[b][1];
                libm::fabs(dx).max(libm::fabs(dy))
            })
            .fold(0.0, f64::max);
        if spread <= 1e-3 * settings.tol && size <= 1e-9 || size == 0.0 {
            break;
        }

        let centroid = [
            0.5 * (simplex[b][0] + simplex[m][0]),
            0.5 * (simplex[b][1] + simplex[m][1]),
        ];
        let along = |t: f64| {
            bounds.clamp([
                centroid[0] + t * (simplex[w][0] - centroid[0]),
                centroid[1] + t * (simplex[w][1] - centroid[1]),
            ])
        };
        let reflected = along(-1.0);
        let fr = f(reflected);
        if fr < values[b] {
            let expanded = along(-2.0);
            let fe = f(expanded);
            if fe < fr {
                simplex[w] = expanded;
                values[w] = fe;
            } else {
                simplex[w] = reflected;
                values[w] = fr;
            }
            continue;
        }
        if fr < values[m] {
            simplex[w] = reflected;
            values[w] = fr;
            continue;
        }
        let contracted = if fr < values[w] {
            along(-0.5)
        } else {
            along(0.5)
        };
        let fc = f(contracted);
        if fc < values[w].min(fr) {
            simplex[w] = contracted;
            values[w] = fc;
            continue;
        }
        // shrink toward the best vertex
        for k in [m, w] {
            simplex[k] = [
                simplex[b][0] + 0.5 * (simplex[k][0] - simplex[b][0]),
                simplex[b][1] + 0.5 * (simplex[k][1] - simplex[b][1]),
            ];
            values[k] = f(simplex[k]);
        }
    }

    let best = (0..3)
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .unwrap_or(0);
    Minimum {
        point: simplex[best],
        value: values[best],
    }
}

/// Golden-section search on `[lo, hi]`; returns the best point seen, ends
/// included.
pub fn golden_section<F: FnMut(f64) -> f64>(
    f: &mut F,
    mut lo: f64,
    mut hi: f64,
    max_iters: usize,
) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut best = (lo, f(lo));
    let fh = f(hi);
    if fh < best.1 {
        best = (hi, fh);
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iters {
        if hi - lo <= 1e-12 {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    for (x, v) in [(x1, f1), (x2, f2)] {
        if v < best.1 {
            best = (x, v);
        }
    }
    best
}
