//! Quantum spectra of circular billiards and their variants.
//!
//! The crate covers the full circular well, the half circle, the circle with
//! a radial baffle, circular wedges of opening angle `(1 + f)π`, and annuli
//! (with or without a baffle). Everything is computed in natural units
//! `ħ = 2μ = R = 1`, so an eigenvalue is simply `E = z²` where `z = kR` is a
//! zero of the relevant radial condition. [`Units`] converts at the edges.
//!
//! Modules, bottom up:
//!
//! - [`specfun`]: real-order Bessel functions, spherical Bessel functions,
//!   bracketed zero enumeration and the annulus cross-product determinant.
//! - [`spectra`]: angular channels and complete spectra below a cutoff.
//! - [`weyl`]: area/perimeter ledger, smooth level counting and least-squares
//!   fits of `N(E) = aE + b√E`.
//! - [`wavefield`]: normalized eigenfunctions, densities and expectation values.
//! - [`deltamodel`]: the 1D well and angular ring with a repulsive δ coupling,
//!   tracked branch by branch from zero to infinite strength.
//!
//! The crate is `no_std` (with `alloc`); the `billiard-cli` crate carries IO.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod deltamodel;
mod error;
pub mod quadrature;
pub mod roots;
pub mod specfun;
pub mod spectra;
mod units;
pub mod wavefield;
pub mod weyl;

pub use error::{Error, Result};
pub use units::Units;
