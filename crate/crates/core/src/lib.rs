//! Calogero-Sutherland particles on a ring with interactions cut off at `r` neighbors.
//!
//! `n` particles on a circle of circumference `L` interact with their `r`
//! nearest neighbors on each side through inverse-square two-body terms and
//! attractive three-body `cot cot` terms. This crate provides:
//!
//! * [`params`]: model parameters, interaction pairs and triples, the closed
//!   forms for the three-body count and the ground-state energy;
//! * [`wavefunction`]: the ground-state amplitude and symmetric trial factors
//!   with two independent derivative paths;
//! * [`oracle`]: the potential, the local energy `H psi / psi` and the
//!   residual statistics that confirm or refute an eigenvalue;
//! * [`poly`] and [`basis`]: exact Laurent polynomials with coefficients
//!   linear in `beta`, plus symmetric and cyclic bases;
//! * [`spectral`]: exact action of the transformed operator `H1` and its
//!   degree-graded pencil eigenproblem.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// `!(x >= bound)` is used on purpose so that NaN fails domain checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod basis;
pub mod config;
pub mod error;
pub mod jet;
pub mod oracle;
pub mod params;
pub mod poly;
pub mod spectral;
pub mod wavefunction;

pub use config::{sample_configurations, Configuration, Sampled};
pub use error::{Error, Result};
pub use params::{ground_energy, triple_count_formula, GroundEnergy, Model, ModelParams, PairList, Regime, TripleList};
pub use wavefunction::StateSpec;
