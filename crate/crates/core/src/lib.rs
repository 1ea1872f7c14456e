//! Thermodynamic-limit two-site correlations of the anisotropic XY chain in a
//! transverse field, and the quantum-correlation measures evaluated on them.
//!
//! The crate is `no_std` (with `alloc`). Transcendental functions come from
//! [`libm`], so results are bit-reproducible across hosts.
//!
//! Layers, bottom-up:
//!
//! - [`quadrature`]: composite Gauss-Legendre integration with node doubling.
//! - [`correlators`]: magnetization, `F_k` coefficients and the Toeplitz
//!   determinants giving `<σ0ˣσnˣ>`, `<σ0ʸσnʸ>`, plus `<σ0ᶻσnᶻ>`.
//! - [`xstate`]: the X-shaped two-site density matrix and its exact spectra.
//! - [`measures`]: entropy, one-way quantum deficit and coherence measures.
//! - [`sweep`]: parameter grids, λ-derivatives and critical-point location.
#![cfg_attr(not(test), no_std)]
// `!(x <= tol)` style checks are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod correlators;
mod error;
pub mod linalg;
pub mod measures;
pub mod optimize;
pub mod quadrature;
pub mod sweep;
pub mod xstate;

pub use correlators::{ChainParams, CorrelatorSet, FTable};
pub use error::{Error, Result};
pub use measures::{MeasureResult, MeasurementAngles, OptimizerConfig};
pub use quadrature::QuadratureConfig;
pub use sweep::{CriticalPointEstimate, DerivativeRecord, Measure, SweepGrid, SweepRecord};
pub use xstate::{SpectrumPair, XState};
