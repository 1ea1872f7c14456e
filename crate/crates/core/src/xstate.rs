//! The two-site reduced density matrix in X form.
//!
//! In the basis `|↑↑>, |↑↓>, |↓↑>, |↓↓>`:
//!
//! ```text
//!        ⎡ 1+2sz+zz     0         0      xx-yy   ⎤
//! ρ = ¼ ⎢    0       1-zz      xx+yy      0     ⎥
//!        ⎢    0       xx+yy     1-zz       0     ⎥
//!        ⎣  xx-yy       0         0     1-2sz+zz ⎦
//! ```
//!
//! Only the four expectation values are stored; the matrix is derived.

use crate::correlators::CorrelatorSet;
use crate::{Error, Result};

/// Eigenvalues above this (but below zero) are reported as exactly zero.
pub const CLAMP_WINDOW: f64 = 1e-12;
/// Eigenvalues below this make a state unphysical.
pub const PHYSICALITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    sz: f64,
    xx: f64,
    yy: f64,
    zz: f64,
}

/// Eigenvalues of the X state: `eta` from the outer block (`|↑↑>, |↓↓>`),
/// `xi` from the inner block (`|↑↓>, |↓↑>`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPair {
    pub eta: [f64; 2],
    pub xi: [f64; 2],
}

impl SpectrumPair {
    pub fn values(&self) -> [f64; 4] {
        [self.eta[0], self.eta[1], self.xi[0], self.xi[1]]
    }
}

impl XState {
    /// Builds and validates a state from its expectation values.
    pub fn new(sz: f64, xx: f64, yy: f64, zz: f64) -> Result<Self> {
        if ![sz, xx, yy, zz].iter().all(|v| v.is_finite()) {
            return Err(Error::Domain("X-state expectation values must be finite"));
        }
        let state = Self { sz, xx, yy, zz };
        let min_eigenvalue = state
            .raw_spectrum()
            .values()
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_eigenvalue < -PHYSICALITY_TOL {
            return Err(Error::Physicality { min_eigenvalue });
        }
        Ok(state)
    }

    pub fn assemble(corr: &CorrelatorSet) -> Result<Self> {
        Self::new(corr.sz, corr.xx, corr.yy, corr.zz)
    }

    pub fn sz(&self) -> f64 {
        self.sz
    }

    pub fn xx(&self) -> f64 {
        self.xx
    }

    pub fn yy(&self) -> f64 {
        self.yy
    }

    pub fn zz(&self) -> f64 {
        self.zz
    }

    /// The derived 4×4 density matrix (row-major).
    pub fn matrix(&self) -> [[f64; 4]; 4] {
        let d = self.diagonal_spectrum();
        let outer = 0.25 * (self.xx - self.yy);
        let inner = 0.25 * (self.xx + self.yy);
        [
            [d[0], 0.0, 0.0, outer],
            [0.0, d[2], inner, 0.0],
            [0.0, inner, d[3], 0.0],
            [outer, 0.0, 0.0, d[1]],
        ]
    }

    fn raw_spectrum(&self) -> SpectrumPair {
        let root = libm::hypot(2.0 * self.sz, self.xx - self.yy);
        let outer = 1.0 + self.zz;
        let inner = 1.0 - self.zz;
        let off = self.xx + self.yy;
        SpectrumPair {
            eta: [0.25 * (outer + root), 0.25 * (outer - root)],
            xi: [0.25 * (inner + off), 0.25 * (inner - off)],
        }
    }

    /// Exact eigenvalues, with values in `[-1e-12, 0)` clamped to zero.
    pub fn spectrum(&self) -> SpectrumPair {
        let clamp = |v: f64| {
            if (-CLAMP_WINDOW..0.0).contains(&v) {
                0.0
            } else {
                v
            }
        };
        let raw = self.raw_spectrum();
        SpectrumPair {
            eta: raw.eta.map(clamp),
            xi: raw.xi.map(clamp),
        }
    }

    /// Main diagonal `(ζ0, ζ1, ε, ε)`, i.e. the spectrum of the fully
    /// dephased state.
    pub fn diagonal_spectrum(&self) -> [f64; 4] {
        let eps = 0.25 * (1.0 - self.zz);
        [
            0.25 * (1.0 + self.zz + 2.0 * self.sz),
            0.25 * (1.0 + self.zz - 2.0 * self.sz),
            eps,
            eps,
        ]
    }

    /// Diagonal of either single-site reduced state, `((1+sz)/2, (1-sz)/2)`.
    pub fn single_spin_reduced(&self) -> [f64; 2] {
        [0.5 * (1.0 + self.sz), 0.5 * (1.0 - self.sz)]
    }

    /// The state conjugated by `σˣ⊗σˣ`, which maps `sz → -sz`.
    pub fn flipped(&self) -> Self {
        Self {
            sz: -self.sz,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::{Matrix4, SymmetricEigen};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sorted(mut v: [f64; 4]) -> [f64; 4] {
        v.sort_by(f64::total_cmp);
        v
    }

    fn dense_eigenvalues(state: &XState) -> [f64; 4] {
        let m = state.matrix();
        let mat = Matrix4::from_fn(|i, j| m[i][j]);
        let eig = SymmetricEigen::new(mat);
        sorted([
            eig.eigenvalues[0],
            eig.eigenvalues[1],
            eig.eigenvalues[2],
            eig.eigenvalues[3],
        ])
    }

    fn random_state(rng: &mut ChaCha8Rng) -> XState {
        loop {
            let v: [f64; 4] = core::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            if let Ok(s) = XState::new(v[0], v[1], v[2], v[3]) {
                return s;
            }
        }
    }

    #[test]
    fn maximally_mixed() {
        let s = XState::new(0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(s.diagonal_spectrum(), [0.25; 4]);
        assert_eq!(s.spectrum().values(), [0.25; 4]);
        assert_eq!(s.single_spin_reduced(), [0.5, 0.5]);
    }

    #[test]
    fn classically_correlated_state() {
        let s = XState::new(0.0, 1.0, 0.0, 0.0).unwrap();
        let m = s.matrix();
        for i in 0..4 {
            assert_eq!(m[i][i], 0.25);
            assert_eq!(m[i][3 - i], 0.25);
        }
        let sp = s.spectrum();
        assert_eq!(sp.eta, [0.5, 0.0]);
        assert_eq!(sp.xi, [0.5, 0.0]);
        let dense = dense_eigenvalues(&s);
        for (d, e) in dense.iter().zip([0.0, 0.0, 0.5, 0.5]) {
            assert_abs_diff_eq!(*d, e, epsilon = 1e-15);
        }
    }

    #[test]
    fn polarized_product_state() {
        let s = XState::new(-1.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(s.diagonal_spectrum(), [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(s.single_spin_reduced(), [0.0, 1.0]);
        assert_eq!(s.matrix()[3][3], 1.0);
    }

    #[test]
    fn rejects_unphysical() {
        assert!(matches!(
            XState::new(0.0, 1.0, 1.0, 1.0),
            Err(Error::Physicality { .. })
        ));
        assert!(XState::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
        let c = CorrelatorSet {
            n: 1,
            sz: 0.9,
            xx: 0.0,
            yy: 0.0,
            zz: 0.0,
        };
        assert!(XState::assemble(&c).is_err());
    }

    #[test]
    fn clamps_tiny_negative_eigenvalues() {
        // xi_1 = (1 - zz - xx - yy)/4 = -4e-13/4
        let s = XState::new(0.0, 0.5, 0.5 + 2e-13, 2e-13).unwrap();
        assert_eq!(s.spectrum().xi[1], 0.0);
    }

    #[test]
    fn analytic_spectrum_matches_dense_eigensolve() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let s = random_state(&mut rng);
            let analytic = sorted(s.spectrum().values());
            let dense = dense_eigenvalues(&s);
            for (a, d) in analytic.iter().zip(&dense) {
                assert_abs_diff_eq!(a, d, epsilon = 1e-12);
            }
            let total: f64 = analytic.iter().sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn single_spin_matches_partial_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let s = random_state(&mut rng);
            let m = s.matrix();
            // trace out the second site: indices (a b) -> a*2 + b
            let first = [m[0][0] + m[1][1], m[2][2] + m[3][3]];
            let second = [m[0][0] + m[2][2], m[1][1] + m[3][3]];
            let off_first = m[0][2] + m[1][3];
            let off_second = m[0][1] + m[2][3];
            let r = s.single_spin_reduced();
            for k in 0..2 {
                assert_abs_diff_eq!(first[k], r[k], epsilon = 1e-14);
                assert_abs_diff_eq!(second[k], r[k], epsilon = 1e-14);
            }
            assert_eq!(off_first, 0.0);
            assert_eq!(off_second, 0.0);
        }
    }

    #[test]
    fn swap_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        // SWAP exchanges |↑↓> and |↓↑>
        let perm = [0usize, 2, 1, 3];
        for _ in 0..200 {
            let m = random_state(&mut rng).matrix();
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(m[perm[i]][perm[j]], m[i][j]);
                }
            }
        }
    }

    #[test]
    fn diagonal_sums_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..200 {
            let s = random_state(&mut rng);
            let total: f64 = s.diagonal_spectrum().iter().sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-15);
            let m = s.matrix();
            let d = s.diagonal_spectrum();
            assert_eq!([m[0][0], m[3][3], m[1][1], m[2][2]], d);
        }
    }
}
