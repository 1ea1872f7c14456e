//! Entropic and coherence measures of an X state. All entropies are in bits.
//!
//! The one-way deficit measures the second site projectively along the
//! Bloch direction `(θ, φ)`. For outcome `i` the first site is left with Bloch
//! vector `(-1)^i T n + a` (unnormalized), where `T = diag(xx, yy, zz)` and
//! `a = (0, 0, sz)`, so the measured state has the closed-form spectrum
//!
//! ```text
//! ξ_ij = [1 + (-1)^i sz cos θ
//!           + (-1)^j √((xx² cos²φ + yy² sin²φ) sin²θ + (sz + (-1)^i zz cos θ)²)] / 4
//! ```
//!
//! The spectrum is unchanged by `φ → -φ`, `φ → π - φ` and `θ → π - θ` (the
//! last swaps the outcome labels), so the search runs over `[0, π/2]²`.

use core::f64::consts::FRAC_PI_2;

use crate::optimize::{minimize_box, Bounds, Settings};
use crate::xstate::XState;
use crate::{Error, Result};

const NEGATIVE_TOL: f64 = 1e-12;
const SUM_TOL: f64 = 1e-9;
/// Deficits in `[-DEFICIT_CLAMP, 0)` are reported as zero.
const DEFICIT_CLAMP: f64 = 1e-10;

/// Measurement direction on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MeasurementAngles {
    pub theta: f64,
    pub phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    pub grid_points: usize,
    pub refine_tol: f64,
    pub max_refine_iters: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            grid_points: 64,
            refine_tol: 1e-9,
            max_refine_iters: 200,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 8 {
            return Err(Error::InvalidParameter {
                name: "grid_points",
                value: self.grid_points as f64,
                reason: "must be at least 8",
            });
        }
        if !(self.refine_tol > 0.0 && self.refine_tol.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "refine_tol",
                value: self.refine_tol,
                reason: "must be positive",
            });
        }
        if self.max_refine_iters == 0 {
            return Err(Error::InvalidParameter {
                name: "max_refine_iters",
                value: 0.0,
                reason: "must be positive",
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureResult {
    pub deficit: f64,
    pub argmin: MeasurementAngles,
    pub c_l1: f64,
    pub c_rel: f64,
    pub entropy_rho: f64,
    pub entropy_diag: f64,
}

/// Shannon entropy (base 2) of a probability vector; `0 log 0 = 0`.
pub fn entropy(p: &[f64]) -> Result<f64> {
    let mut total = 0.0;
    for &v in p {
        if !(v >= -NEGATIVE_TOL) {
            return Err(Error::Domain("probability below -1e-12"));
        }
        total += v;
    }
    if !(libm::fabs(total - 1.0) <= SUM_TOL) {
        return Err(Error::Domain("probabilities do not sum to 1"));
    }
    Ok(shannon(p))
}

/// Entropy without the domain checks; non-positive entries contribute zero.
fn shannon(p: &[f64]) -> f64 {
    let mut s = 0.0;
    for &v in p {
        if v > 0.0 {
            s -= v * libm::log2(v);
        }
    }
    s
}

fn x_log_x(v: f64) -> f64 {
    if v > 0.0 {
        v * libm::log2(v)
    } else {
        0.0
    }
}

/// Closed-form spectrum `[ξ00, ξ01, ξ10, ξ11]` after measuring the second
/// site along `angles`. Tiny negative round-off is clamped to zero.
pub fn post_measurement_spectrum(state: &XState, angles: MeasurementAngles) -> [f64; 4] {
    let (sin_t, cos_t) = libm::sincos(angles.theta);
    let (sin_p, cos_p) = libm::sincos(angles.phi);
    let (sz, xx, yy, zz) = (state.sz(), state.xx(), state.yy(), state.zz());
    let transverse = (xx * xx * cos_p * cos_p + yy * yy * sin_p * sin_p) * sin_t * sin_t;
    let mut out = [0.0; 4];
    for i in 0..2 {
        let sign_i = if i == 0 { 1.0 } else { -1.0 };
        let longitudinal = sz + sign_i * zz * cos_t;
        let root = libm::sqrt(transverse + longitudinal * longitudinal);
        let base = 1.0 + sign_i * sz * cos_t;
        out[2 * i] = (0.25 * (base + root)).max(0.0);
        out[2 * i + 1] = (0.25 * (base - root)).max(0.0);
    }
    out
}

fn spectrum_entropy(state: &XState) -> f64 {
    // `XState` construction already bounds eigenvalues below by -1e-10
    shannon(&state.spectrum().values())
}

/// One-way quantum deficit and the measurement attaining it.
pub fn one_way_deficit(state: &XState, cfg: &OptimizerConfig) -> Result<(f64, MeasurementAngles)> {
    cfg.validate()?;
    let s_rho = spectrum_entropy(state);
    let bounds = Bounds {
        lower: [0.0, 0.0],
        upper: [FRAC_PI_2, FRAC_PI_2],
    };
    let settings = Settings {
        grid_points: cfg.grid_points,
        tol: cfg.refine_tol,
        max_iters: cfg.max_refine_iters,
    };
    let best = minimize_box(
        |p| {
            shannon(&post_measurement_spectrum(
                state,
                MeasurementAngles {
                    theta: p[0],
                    phi: p[1],
                },
            ))
        },
        &bounds,
        &settings,
    );
    let angles = MeasurementAngles {
        theta: best.point[0],
        phi: best.point[1],
    };
    entropy(&post_measurement_spectrum(state, angles))?;
    let deficit = best.value - s_rho;
    if deficit < -DEFICIT_CLAMP {
        return Err(Error::Domain("measurement lowered the entropy"));
    }
    Ok((deficit.max(0.0), angles))
}

/// Sum of absolute off-diagonal entries, `(|xx - yy| + |xx + yy|) / 2`.
pub fn l1_coherence(state: &XState) -> f64 {
    0.5 * (libm::fabs(state.xx() - state.yy()) + libm::fabs(state.xx() + state.yy()))
}

/// `S(ρ_diag) - S(ρ)` from the two spectra.
pub fn relative_entropy_coherence(state: &XState) -> f64 {
    (shannon(&state.diagonal_spectrum()) - spectrum_entropy(state)).max(0.0)
}

/// The same quantity written out term by term:
/// `Σ_i (-ζ_i log ζ_i + η_i log η_i + ξ_i log ξ_i) - 2ε log ε`.
pub fn relative_entropy_coherence_closed_form(state: &XState) -> f64 {
    let sp = state.spectrum();
    let d = state.diagonal_spectrum();
    let (zeta, eps) = ([d[0], d[1]], d[2]);
    let mut total = -2.0 * x_log_x(eps);
    for ((z, e), x) in zeta.iter().zip(sp.eta).zip(sp.xi) {
        total += -x_log_x(*z) + x_log_x(e) + x_log_x(x);
    }
    total
}

pub fn all_measures(state: &XState, cfg: &OptimizerConfig) -> Result<MeasureResult> {
    let entropy_rho = entropy(&state.spectrum().values().map(|v| v.max(0.0)))?;
    let entropy_diag = entropy(&state.diagonal_spectrum())?;
    let (deficit, argmin) = one_way_deficit(state, cfg)?;
    Ok(MeasureResult {
        deficit,
        argmin,
        c_l1: l1_coherence(state),
        c_rel: (entropy_diag - entropy_rho).max(0.0),
        entropy_rho,
        entropy_diag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn state(sz: f64, xx: f64, yy: f64, zz: f64) -> XState {
        XState::new(sz, xx, yy, zz).unwrap()
    }

    fn random_state(rng: &mut ChaCha8Rng) -> XState {
        loop {
            let v: [f64; 4] = core::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            if let Ok(s) = XState::new(v[0], v[1], v[2], v[3]) {
                return s;
            }
        }
    }

    fn sorted(mut v: [f64; 4]) -> [f64; 4] {
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_abs_diff_eq!(entropy(&[0.25; 4]).unwrap(), 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            entropy(&[0.5, 0.5, 0.0, 0.0]).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(entropy(&[0.5, 0.5, -1e-13]).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn entropy_domain_errors() {
        assert!(matches!(entropy(&[1.1, -0.1]), Err(Error::Domain(_))));
        assert!(matches!(entropy(&[0.5, 0.4]), Err(Error::Domain(_))));
        assert!(entropy(&[f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn theta_zero_reproduces_dephased_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let s = random_state(&mut rng);
            let phi = rng.gen_range(0.0..2.0 * PI);
            let xi = sorted(post_measurement_spectrum(
                &s,
                MeasurementAngles { theta: 0.0, phi },
            ));
            let diag = sorted(s.diagonal_spectrum());
            for (a, b) in xi.iter().zip(&diag) {
                assert_abs_diff_eq!(a, b, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn maximally_mixed_is_unchanged() {
        let s = state(0.0, 0.0, 0.0, 0.0);
        let xi = post_measurement_spectrum(
            &s,
            MeasurementAngles {
                theta: 1.1,
                phi: 0.3,
            },
        );
        assert_eq!(xi, [0.25; 4]);
        let r = all_measures(&s, &OptimizerConfig::default()).unwrap();
        assert_eq!((r.deficit, r.c_l1, r.c_rel), (0.0, 0.0, 0.0));
    }

    #[test]
    fn product_state_measures_vanish() {
        let s = state(-1.0, 0.0, 0.0, 1.0);
        let r = all_measures(&s, &OptimizerConfig::default()).unwrap();
        assert_eq!(r.deficit, 0.0);
        assert_eq!(r.c_l1, 0.0);
        assert_eq!(r.c_rel, 0.0);
        assert_eq!(
            r.argmin,
            MeasurementAngles {
                theta: 0.0,
                phi: 0.0
            }
        );
    }

    #[test]
    fn classically_correlated_state() {
        let s = state(0.0, 1.0, 0.0, 0.0);
        let (d, angles) = one_way_deficit(&s, &OptimizerConfig::default()).unwrap();
        assert_abs_diff_eq!(d, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(angles.theta, FRAC_PI_2, epsilon = 1e-6);
        assert_abs_diff_eq!(angles.phi, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(relative_entropy_coherence(&s), 1.0, epsilon = 1e-15);
        assert_eq!(l1_coherence(&s), 1.0);
    }

    #[test]
    fn l1_is_literal_off_diagonal_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..200 {
            let s = random_state(&mut rng);
            let m = s.matrix();
            let scan: f64 = (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .filter(|(i, j)| i != j)
                .map(|(i, j)| m[i][j].abs())
                .sum();
            assert_abs_diff_eq!(l1_coherence(&s), scan, epsilon = 1e-15);
        }
        assert_eq!(l1_coherence(&state(0.0, 0.0, 0.0, 0.0)), 0.0);
    }

    #[test]
    fn relative_entropy_two_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..1000 {
            let s = random_state(&mut rng);
            assert_abs_diff_eq!(
                relative_entropy_coherence(&s),
                relative_entropy_coherence_closed_form(&s),
                epsilon = 1e-12
            );
        }
        // diagonal states carry no coherence
        assert_eq!(relative_entropy_coherence(&state(0.3, 0.0, 0.0, 0.2)), 0.0);
    }

    #[test]
    fn deficit_never_exceeds_relative_entropy() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let cfg = OptimizerConfig::default();
        for _ in 0..100 {
            let s = random_state(&mut rng);
            let r = all_measures(&s, &cfg).unwrap();
            assert!(r.deficit >= 0.0);
            assert!(r.deficit <= r.c_rel + 1e-9, "{r:?}");
            assert_abs_diff_eq!(r.c_rel, r.entropy_diag - r.entropy_rho, epsilon = 1e-12);
            assert!((0.0..=2.0 + 1e-12).contains(&r.entropy_rho));
        }
    }

    #[test]
    fn rejects_bad_optimizer_config() {
        let cfg = OptimizerConfig {
            grid_points: 4,
            ..Default::default()
        };
        assert!(one_way_deficit(&state(0.0, 0.0, 0.0, 0.0), &cfg).is_err());
    }

    fn physical_state() -> impl Strategy<Value = XState> {
        (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
            .prop_filter_map("unphysical", |(a, b, c, d)| XState::new(a, b, c, d).ok())
    }

    proptest! {
        #[test]
        fn measured_spectrum_is_normalized(s in physical_state(), theta in 0.0..PI, phi in 0.0..2.0 * PI) {
            let xi = post_measurement_spectrum(&s, MeasurementAngles { theta, phi });
            prop_assert!(xi.iter().all(|&v| v >= -1e-12));
            prop_assert!((xi.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            // a projective measurement never lowers the entropy
            prop_assert!(shannon(&xi) >= spectrum_entropy(&s) - 1e-10);
        }

        #[test]
        fn measured_spectrum_angle_symmetries(s in physical_state(), theta in 0.0..PI, phi in 0.0..2.0 * PI) {
            let base = sorted(post_measurement_spectrum(&s, MeasurementAngles { theta, phi }));
            for (t, p) in [(theta, PI - phi), (theta, -phi), (PI - theta, phi)] {
                let other = sorted(post_measurement_spectrum(&s, MeasurementAngles { theta: t, phi: p }));
                for (a, b) in base.iter().zip(&other) {
                    prop_assert!((a - b).abs() <= 1e-12);
                }
            }
        }

        #[test]
        fn measures_invariant_under_sz_flip(s in physical_state()) {
            let cfg = OptimizerConfig { grid_points: 16, ..Default::default() };
            let a = all_measures(&s, &cfg).unwrap();
            let b = all_measures(&s.flipped(), &cfg).unwrap();
            prop_assert!((a.deficit - b.deficit).abs() <= 1e-9);
            prop_assert!((a.c_rel - b.c_rel).abs() <= 1e-12);
            prop_assert!((a.c_l1 - b.c_l1).abs() <= 1e-15);
        }
    }
}
