//! Batch front end for `billiard-core`: spectra, Weyl fits, density grids
//! and δ continuation sweeps written as CSV or JSON.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use error::CliError;
