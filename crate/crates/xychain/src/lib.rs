//! Standard-library companion to `xychain-core`: exact-diagonalization
//! oracles, multi-threaded sweeps, CSV/plot output and the `xychain` CLI.

pub mod cli;
pub mod config;
pub mod oracle;
pub mod output;
pub mod parallel;
