//! Ro-vibrational energies of diatomic molecules on the q-deformed
//! Schiöberg (equivalently Tietz-Hua) potential.
//!
//! * [`params`] and [`potential`]: potential parameters from spectroscopic
//!   constants and the equivalent forms of the curve.
//! * [`rotational`]: exponential factorisation of the centrifugal barrier.
//! * [`spectrum`]: closed-form energy levels and ground-state wavefunction.
//! * [`oracle`]: independent finite-difference eigensolver.
//! * [`database`] and [`cli`]: molecule tables and the command-line driver.

// `!(x > 0.0)` is used deliberately so NaN is rejected with the rest.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod database;
pub mod error;
pub mod lambert;
pub mod oracle;
pub mod params;
pub mod potential;
pub mod rotational;
pub mod spectrum;
pub mod units;

pub use error::{Error, Result};
pub use params::{derive, DerivedParams, SpectroscopicParams};
pub use potential::{PForm, PotentialModel};
pub use spectrum::{ClosedForm, EnergyLevel};
