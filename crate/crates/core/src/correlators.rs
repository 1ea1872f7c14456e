//! Magnetization and two-point correlators of the infinite XY chain.
//!
//! With `ω(φ) = √((γλ sin φ)² + (1 + λ cos φ)²) / 2` and the thermal kernel
//! `K(ω) = tanh(βω)/ω` (or `1/ω` at zero temperature),
//!
//! ```text
//! <σᶻ> = -(1/2π) ∫₀^π (1 + λ cos φ) K(ω) dφ
//! F_k  =  (1/2π) ∫₀^π K(ω) [cos(kφ)(1 + λ cos φ) - γλ sin(kφ) sin φ] dφ
//! ```
//!
//! `<σ0ˣσnˣ>` and `<σ0ʸσnʸ>` are `n×n` Toeplitz determinants of the `F_k`,
//! and `<σ0ᶻσnᶻ> = <σᶻ>² - F_n F_{-n}`.
//!
//! The magnetization follows the printed sign convention: it is `-1` for the
//! fully polarized `λ = 0` ground state. Every measure downstream is
//! invariant under `sz → -sz`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::linalg::{determinant, toeplitz};
use crate::quadrature::{integrate_converged, QuadratureConfig};
use crate::{Error, Result};

/// Largest `|k|` for which `F_k` may be requested.
pub const F_INDEX_CAP: usize = 64;
/// Largest supported site separation.
pub const MAX_SEPARATION: usize = 50;

/// Physical point of the chain. `temperature` is `kT`; zero selects the exact
/// ground-state limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    gamma: f64,
    lambda: f64,
    temperature: f64,
}

impl ChainParams {
    pub fn new(gamma: f64, lambda: f64, temperature: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: gamma,
                reason: "must lie in [0, 1]",
            });
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                value: lambda,
                reason: "must be finite and non-negative",
            });
        }
        if !(temperature >= 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "temperature",
                value: temperature,
                reason: "must be finite and non-negative",
            });
        }
        Ok(Self {
            gamma,
            lambda,
            temperature,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn is_zero_temperature(&self) -> bool {
        self.temperature == 0.0
    }

    /// `1/kT`, or `None` on the zero-temperature path.
    pub fn beta(&self) -> Option<f64> {
        if self.is_zero_temperature() {
            None
        } else {
            Some(1.0 / self.temperature)
        }
    }

    /// Integration breakpoints on `[0, π]`. For `λ > 1` the factor
    /// `1 + λ cos φ` changes sign at `arccos(-1/λ)`, where the zero-temperature
    /// integrand of the isotropic chain jumps.
    fn breakpoints(&self) -> ([f64; 3], usize) {
        if self.lambda > 1.0 {
            ([0.0, libm::acos(-1.0 / self.lambda), PI], 3)
        } else {
            ([0.0, PI, PI], 2)
        }
    }
}

/// `1 + λ cos φ`, written as `(1 - λ) + 2λ sin²((π - φ)/2)` so it keeps full
/// relative precision near `φ = π`, `λ = 1`.
fn mass_term(lambda: f64, phi: f64) -> f64 {
    let s = libm::sin(0.5 * (PI - phi));
    (1.0 - lambda) + 2.0 * lambda * s * s
}

/// Quasiparticle dispersion `ω_φ ≥ 0`.
pub fn dispersion(params: &ChainParams, phi: f64) -> f64 {
    let a = params.gamma * params.lambda * libm::sin(phi);
    let b = mass_term(params.lambda, phi);
    0.5 * libm::hypot(a, b)
}

/// `tanh(βω)/ω`, or `1/ω` at zero temperature. At `ω = 0` and finite
/// temperature the limit `β` is returned; at zero temperature the result is
/// infinite and the caller's numerator must vanish there.
pub fn thermal_weight(params: &ChainParams, omega: f64) -> Result<f64> {
    if omega < 0.0 {
        return Err(Error::Domain("thermal_weight requires omega >= 0"));
    }
    Ok(kernel(params.beta(), omega))
}

#[inline]
fn kernel(beta: Option<f64>, omega: f64) -> f64 {
    match beta {
        None => 1.0 / omega,
        Some(beta) => {
            let x = beta * omega;
            if x < 1e-6 {
                // tanh(x)/x = 1 - x²/3 + O(x⁴)
                beta * (1.0 - x * x / 3.0)
            } else {
                libm::tanh(x) / omega
            }
        }
    }
}

fn check_quad(quad: &QuadratureConfig) -> Result<()> {
    quad.validate()
}

/// Transverse magnetization `<σᶻ>`.
pub fn transverse_magnetization(params: &ChainParams, quad: &QuadratureConfig) -> Result<f64> {
    check_quad(quad)?;
    let beta = params.beta();
    let (bp, len) = params.breakpoints();
    let lambda = params.lambda;
    let gl = params.gamma * lambda;
    let integral = integrate_converged(&bp[..len], quad.initial_nodes, quad, |phi| {
        let m = mass_term(lambda, phi);
        let omega = 0.5 * libm::hypot(gl * libm::sin(phi), m);
        m * kernel(beta, omega)
    })?;
    Ok(-integral / (2.0 * PI))
}

/// The coefficient `F_k`. The starting node count grows as `32|k|` to resolve
/// the oscillating factors.
pub fn f_coefficient(params: &ChainParams, k: i64, quad: &QuadratureConfig) -> Result<f64> {
    check_quad(quad)?;
    if k.unsigned_abs() as usize > F_INDEX_CAP {
        return Err(Error::Index {
            index: k,
            n_max: F_INDEX_CAP,
        });
    }
    let beta = params.beta();
    if params.lambda == 0.0 {
        // free spins: ω = 1/2 for every mode, so F_k = δ_k0 tanh(β/2)
        return Ok(if k == 0 { 0.5 * kernel(beta, 0.5) } else { 0.0 });
    }
    let (bp, len) = params.breakpoints();
    let lambda = params.lambda;
    let gl = params.gamma * lambda;
    let kf = k as f64;
    let start = quad.initial_nodes.max(32 * k.unsigned_abs() as usize);
    let integral = integrate_converged(&bp[..len], start, quad, |phi| {
        let m = mass_term(lambda, phi);
        let sin_phi = libm::sin(phi);
        let omega = 0.5 * libm::hypot(gl * sin_phi, m);
        let (sin_k, cos_k) = libm::sincos(kf * phi);
        kernel(beta, omega) * (cos_k * m - gl * sin_k * sin_phi)
    })?;
    Ok(integral / (2.0 * PI))
}

/// `F_k` for every `k ∈ [-n_max, n_max]`, immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct FTable {
    n_max: usize,
    values: Vec<f64>,
}

impl FTable {
    /// Table from explicit values ordered `F_{-n_max} ..= F_{n_max}`.
    pub fn from_values(n_max: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != 2 * n_max + 1 {
            return Err(Error::Domain("F table needs 2*n_max + 1 values"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("F table values must be finite"));
        }
        Ok(Self { n_max, values })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, k: i64) -> Result<f64> {
        if k.unsigned_abs() as usize > self.n_max {
            return Err(Error::Index {
                index: k,
                n_max: self.n_max,
            });
        }
        Ok(self.values[(k + self.n_max as i64) as usize])
    }

    /// `(k, F_k)` pairs in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let offset = self.n_max as i64;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (i as i64 - offset, v))
    }
}

pub fn build_f_table(
    params: &ChainParams,
    n_max: usize,
    quad: &QuadratureConfig,
) -> Result<FTable> {
    if n_max == 0 || n_max > F_INDEX_CAP {
        return Err(Error::InvalidParameter {
            name: "n_max",
            value: n_max as f64,
            reason: "must lie in [1, 64]",
        });
    }
    let n = n_max as i64;
    let values = (-n..=n)
        .map(|k| f_coefficient(params, k, quad))
        .collect::<Result<Vec<_>>>()?;
    FTable::from_values(n_max, values)
}

fn check_separation(table: &FTable, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("separation must be positive"));
    }
    if n > table.n_max {
        return Err(Error::Index {
            index: n as i64,
            n_max: table.n_max,
        });
    }
    Ok(())
}

fn toeplitz_det(table: &FTable, n: usize, shift: i64) -> Result<f64> {
    check_separation(table, n)?;
    let mut missing = None;
    let m = toeplitz(n, |d| match table.get(d + shift) {
        Ok(v) => v,
        Err(e) => {
            missing = Some(e);
            f64::NAN
        }
    });
    if let Some(e) = missing {
        return Err(e);
    }
    Ok(determinant(m, n))
}

/// `<σ0ˣσnˣ>`: determinant of the Toeplitz matrix `A_ij = F_{i-j-1}`.
pub fn xx_correlator(table: &FTable, n: usize) -> Result<f64> {
    toeplitz_det(table, n, -1)
}

/// `<σ0ʸσnʸ>`: determinant of the Toeplitz matrix `A_ij = F_{i-j+1}`.
pub fn yy_correlator(table: &FTable, n: usize) -> Result<f64> {
    toeplitz_det(table, n, 1)
}

/// `<σ0ᶻσnᶻ> = sz² - F_n F_{-n}`.
pub fn zz_correlator(table: &FTable, sz: f64, n: usize) -> Result<f64> {
    check_separation(table, n)?;
    let n = n as i64;
    Ok(sz * sz - table.get(n)? * table.get(-n)?)
}

/// The four expectation values that fix the two-site state at separation `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelatorSet {
    pub n: usize,
    pub sz: f64,
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
}

impl CorrelatorSet {
    pub fn in_range(&self) -> bool {
        [self.sz, self.xx, self.yy, self.zz]
            .iter()
            .all(|v| v.abs() <= 1.0 + 1e-9)
    }
}

pub fn correlator_set(
    params: &ChainParams,
    n: usize,
    quad: &QuadratureConfig,
) -> Result<CorrelatorSet> {
    let mut sets = correlator_sets(params, &[n], quad)?;
    Ok(sets.remove(0))
}

/// Correlator sets for several separations, sharing one magnetization
/// integral and one `F` table.
pub fn correlator_sets(
    params: &ChainParams,
    separations: &[usize],
    quad: &QuadratureConfig,
) -> Result<Vec<CorrelatorSet>> {
    let n_max = separations.iter().copied().max().ok_or(Error::EmptyInput)?;
    if separations.contains(&0) || n_max > MAX_SEPARATION {
        return Err(Error::InvalidParameter {
            name: "n",
            value: if n_max > MAX_SEPARATION {
                n_max as f64
            } else {
                0.0
            },
            reason: "separation must lie in [1, 50]",
        });
    }
    let sz = transverse_magnetization(params, quad)?;
    let table = build_f_table(params, n_max, quad)?;
    separations
        .iter()
        .map(|&n| {
            Ok(CorrelatorSet {
                n,
                sz,
                xx: xx_correlator(&table, n)?,
                yy: yy_correlator(&table, n)?,
                zz: zz_correlator(&table, sz, n)?,
            })
        })
        .collect()
}
