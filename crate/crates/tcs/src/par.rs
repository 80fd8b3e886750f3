//! Sample evaluation over a rayon pool.
//!
//! Samples are split into fixed-size chunks whose statistics are merged in
//! chunk order, so the result does not depend on the thread count.

use rayon::prelude::*;
use tcs_core::config::Configuration;
use tcs_core::oracle::{local_energy, EnergyStats};
use tcs_core::params::Model;
use tcs_core::wavefunction::StateSpec;
use tcs_core::{Error, Result};

pub const CHUNK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// One pass in sample order on the calling thread.
    Sequential,
    /// Parallel over fixed chunks, merged in order.
    Chunked,
}

fn chunk_stats(model: &Model, spec: &StateSpec, configs: &[Configuration]) -> Result<(EnergyStats, u64)> {
    let mut stats = EnergyStats::default();
    let mut rejected = 0;
    for c in configs {
        match local_energy(model, spec, c) {
            Ok(e) => stats.push(e),
            Err(Error::NodeProximity { .. }) => rejected += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((stats, rejected))
}

/// Local-energy statistics and the node-rejection count.
pub fn accumulate(model: &Model, spec: &StateSpec, configs: &[Configuration], mode: Reduction) -> Result<(EnergyStats, u64)> {
    let (stats, rejected) = match mode {
        Reduction::Sequential => chunk_stats(model, spec, configs)?,
        Reduction::Chunked => configs
            .par_chunks(CHUNK)
            .map(|c| chunk_stats(model, spec, c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold((EnergyStats::default(), 0), |(s, r), (cs, cr)| (s.merge(&cs), r + cr)),
    };
    if stats.count == 0 {
        return Err(Error::AllSamplesRejected { rejected: rejected as usize });
    }
    Ok((stats, rejected))
}
