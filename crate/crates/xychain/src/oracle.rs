//! Brute-force references: exact diagonalization of finite periodic chains,
//! dense projective measurements on the two-site state, and a dense-grid
//! deficit minimum.
//!
//! Finite chains use `H = -Σ_j {(λ/2)[(1+γ)σˣ_jσˣ_{j+1} + (1-γ)σʸ_jσʸ_{j+1}] + σᶻ_j}`
//! with periodic closure. Basis states are bit strings, bit `j` set meaning
//! site `j` is down. At `N = 2` the closure makes both bonds join sites 0 and
//! 1, so the coupling is counted twice.
//!
//! `kT` here is the physical temperature of that Hamiltonian. Its one-particle
//! energies are `4ω` while the thermodynamic-limit integrals use
//! `tanh(ω/kT)`, so the matching integral temperature is `kT/2`
//! (see [`FiniteChainSpec::integral_params`]).

use std::f64::consts::FRAC_PI_2;

use nalgebra::{Complex, DMatrix, Matrix4, SymmetricEigen};
use xychain_core::correlators::{correlator_set, CorrelatorSet};
use xychain_core::measures::{entropy, post_measurement_spectrum};
use xychain_core::{ChainParams, MeasurementAngles, QuadratureConfig, XState};

pub const MIN_SITES: usize = 2;
pub const MAX_SITES: usize = 12;
/// Sites above this need an explicit opt-in at the CLI.
pub const DEFAULT_MAX_SITES: usize = 10;
pub const TRANSLATION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("chain size {0} outside [2, 12]")]
    Size(usize),
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("separation {n} outside [1, {max}] for {sites} sites")]
    Separation { n: usize, sites: usize, max: usize },
    #[error("translation invariance violated by {deviation:e}")]
    Translation { deviation: f64 },
    #[error("grid resolution {0} below 64")]
    Resolution(usize),
    #[error(transparent)]
    Core(#[from] xychain_core::Error),
}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteChainSpec {
    sites: usize,
    gamma: f64,
    lambda: f64,
    temperature: f64,
}

impl FiniteChainSpec {
    pub fn new(sites: usize, gamma: f64, lambda: f64, temperature: f64) -> Result<Self> {
        if !(MIN_SITES..=MAX_SITES).contains(&sites) {
            return Err(OracleError::Size(sites));
        }
        if !(0.0..=1.0).contains(&gamma) {
            return Err(OracleError::InvalidParameter {
                name: "gamma",
                value: gamma,
                reason: "must lie in [0, 1]",
            });
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(OracleError::InvalidParameter {
                name: "lambda",
                value: lambda,
                reason: "must be finite and non-negative",
            });
        }
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(OracleError::InvalidParameter {
                name: "kt",
                value: temperature,
                reason: "must be finite and positive",
            });
        }
        Ok(Self {
            sites,
            gamma,
            lambda,
            temperature,
        })
    }

    pub fn sites(&self) -> usize {
        self.sites
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

    /// Thermodynamic-limit parameters at the same physical temperature.
    pub fn integral_params(&self) -> Result<ChainParams> {
        Ok(ChainParams::new(
            self.gamma,
            self.lambda,
            0.5 * self.temperature,
        )?)
    }
}

fn bit(state: usize, site: usize) -> bool {
    state >> site & 1 == 1
}

/// The dense Hamiltonian in the computational basis.
pub fn build_hamiltonian(spec: &FiniteChainSpec) -> DMatrix<f64> {
    let n = spec.sites;
    let dim = 1usize << n;
    let half = 0.5 * spec.lambda;
    let mut h = DMatrix::zeros(dim, dim);
    for s in 0..dim {
        let mut diag = 0.0;
        for j in 0..n {
            diag -= if bit(s, j) { -1.0 } else { 1.0 };
            let k = (j + 1) % n;
            // σˣσˣ and σʸσʸ both flip the pair; σʸσʸ carries -1 on equal bits
            let coupling = if bit(s, j) == bit(s, k) {
                2.0 * spec.gamma
            } else {
                2.0
            };
            let t = s ^ (1 << j) ^ (1 << k);
            h[(t, s)] -= half * coupling;
        }
        h[(s, s)] = diag;
    }
    h
}

/// Thermal expectations `<σᶻ>` (site-averaged) and `<σᵏ_iσᵏ_{i+n}>`, checked
/// for translation invariance across base sites.
pub fn thermal_two_site(spec: &FiniteChainSpec, n: usize) -> Result<CorrelatorSet> {
    let sites = spec.sites;
    if n == 0 || n > sites / 2 {
        return Err(OracleError::Separation {
            n,
            sites,
            max: sites / 2,
        });
    }
    let eig = SymmetricEigen::new(build_hamiltonian(spec));
    let e0 = eig.eigenvalues.min();
    let beta = 1.0 / spec.temperature;
    let mut weights: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|e| (-beta * (e - e0)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= z);

    let dim = 1usize << sites;
    // per base site: sz, xx, yy, zz
    let mut acc = vec![[0.0f64; 4]; sites];
    for (col, &w) in eig.eigenvectors.column_iter().zip(&weights) {
        if w == 0.0 {
            continue;
        }
        for (i, a) in acc.iter_mut().enumerate() {
            let j = (i + n) % sites;
            let mut site = [0.0; 4];
            for s in 0..dim {
                let amp = col[s];
                let p = amp * amp;
                let (zi, zj) = (spin(s, i), spin(s, j));
                site[0] += p * zi;
                site[3] += p * zi * zj;
                let flipped = col[s ^ (1 << i) ^ (1 << j)];
                site[1] += amp * flipped;
                site[2] += amp * flipped * if bit(s, i) == bit(s, j) { -1.0 } else { 1.0 };
            }
            for k in 0..4 {
                a[k] += w * site[k];
            }
        }
    }

    let mut deviation: f64 = 0.0;
    for a in &acc[1..] {
        for k in 0..4 {
            deviation = deviation.max((a[k] - acc[0][k]).abs());
        }
    }
    if deviation > TRANSLATION_TOL {
        return Err(OracleError::Translation { deviation });
    }
    let sz = acc.iter().map(|a| a[0]).sum::<f64>() / sites as f64;
    let [_, xx, yy, zz] = acc[0];
    Ok(CorrelatorSet { n, sz, xx, yy, zz })
}

fn spin(s: usize, site: usize) -> f64 {
    if bit(s, site) {
        -1.0
    } else {
        1.0
    }
}

/// Eigenvalues (ascending) of `Σ_i (I⊗Π_i) ρ (I⊗Π_i)` with
/// `Π_i = V|i><i|V†` acting on the second site.
pub fn dense_measured_spectrum(state: &XState, angles: MeasurementAngles) -> [f64; 4] {
    let m = state.matrix();
    let rho = Matrix4::from_fn(|i, j| Complex::new(m[i][j], 0.0));
    let (c, s) = ((0.5 * angles.theta).cos(), (0.5 * angles.theta).sin());
    let phase = Complex::from_polar(1.0, angles.phi);
    let v = nalgebra::Matrix2::new(
        Complex::new(c, 0.0),
        phase * s,
        -phase.conj() * s,
        Complex::new(c, 0.0),
    );
    let identity = nalgebra::Matrix2::<Complex<f64>>::identity();
    let mut measured = Matrix4::<Complex<f64>>::zeros();
    for i in 0..2 {
        let column = v.column(i);
        let projector = column * column.adjoint();
        let op = identity.kronecker(&projector);
        measured += op * rho * op;
    }
    let eig = SymmetricEigen::new(measured);
    let mut out = [0.0; 4];
    for (o, e) in out.iter_mut().zip(eig.eigenvalues.iter()) {
        *o = *e;
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Exhaustive minimum of `S(measured) - S(ρ)` over a `resolution²` grid on
/// `[0, π/2]²`, endpoints included.
pub fn grid_min_deficit(state: &XState, resolution: usize) -> Result<f64> {
    if resolution < 64 {
        return Err(OracleError::Resolution(resolution));
    }
    let s_rho = entropy(&state.spectrum().values())?;
    let step = FRAC_PI_2 / (resolution - 1) as f64;
    let mut best = f64::INFINITY;
    for i in 0..resolution {
        for j in 0..resolution {
            let angles = MeasurementAngles {
                theta: step * i as f64,
                phi: step * j as f64,
            };
            let s = entropy(&post_measurement_spectrum(state, angles))?;
            best = best.min(s - s_rho);
        }
    }
    Ok(best)
}

/// One row of an ED-versus-integral comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub quantity: &'static str,
    pub integral: f64,
    pub finite: Vec<f64>,
}

impl ComparisonRow {
    pub fn differences(&self) -> Vec<f64> {
        self.finite
            .iter()
            .map(|v| (v - self.integral).abs())
            .collect()
    }

    /// Whether the distance to the integral never grows with chain size.
    pub fn non_increasing(&self) -> bool {
        self.differences().windows(2).all(|w| w[1] <= w[0])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub sizes: Vec<usize>,
    /// `|sz|`, `xx`, `yy`, `zz` in that order.
    pub rows: Vec<ComparisonRow>,
    /// Sign of `sz_integral * sz_finite` at each size.
    pub sz_sign: Vec<f64>,
}

impl Comparison {
    /// The trend checks: `xx`, `yy` and `zz` converge monotonically.
    pub fn trends_hold(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.quantity != "|sz|")
            .all(ComparisonRow::non_increasing)
    }
}

/// Runs the finite chain at each size in `sizes` and lines it up against the
/// thermodynamic-limit integrals at the matching temperature.
pub fn compare(
    gamma: f64,
    lambda: f64,
    temperature: f64,
    n: usize,
    sizes: &[usize],
    quad: &QuadratureConfig,
) -> Result<Comparison> {
    let reference = FiniteChainSpec::new(MIN_SITES, gamma, lambda, temperature)?;
    let limit = correlator_set(&reference.integral_params()?, n, quad)?;
    let mut finite = Vec::with_capacity(sizes.len());
    for &sites in sizes {
        let spec = FiniteChainSpec::new(sites, gamma, lambda, temperature)?;
        finite.push(thermal_two_site(&spec, n)?);
    }
    let row = |quantity, integral: f64, get: fn(&CorrelatorSet) -> f64| ComparisonRow {
        quantity,
        integral,
        finite: finite.iter().map(get).collect(),
    };
    Ok(Comparison {
        sizes: sizes.to_vec(),
        rows: vec![
            row("|sz|", limit.sz.abs(), |c| c.sz.abs()),
            row("xx", limit.xx, |c| c.xx),
            row("yy", limit.yy, |c| c.yy),
            row("zz", limit.zz, |c| c.zz),
        ],
        sz_sign: finite.iter().map(|c| (c.sz * limit.sz).signum()).collect(),
    })
}
