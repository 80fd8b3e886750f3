//! Particle configurations on the circle and their seeded sampler.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// Rejected draws tolerated by [`sample_configurations`] before giving up.
pub const MAX_REJECTIONS: u64 = 1_000_000;

/// Particle positions on `[0, L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub x: Vec<f64>,
    /// Smallest cyclic separation between any two particles.
    pub min_sep: f64,
}

/// Smallest cyclic gap between any two of `x` on a circle of length `length`.
pub fn min_cyclic_separation(x: &[f64], length: f64) -> f64 {
    if x.len() < 2 {
        return length;
    }
    let mut s: Vec<f64> = x.iter().map(|&v| crate::params::wrap(v, length)).collect();
    s.sort_by(f64::total_cmp);
    let wrap = length - (s[s.len() - 1] - s[0]);
    s.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::min)
}

impl Configuration {
    /// Wraps positions into `[0, L)` and checks their separation against `floor`.
    pub fn new(x: Vec<f64>, length: f64, floor: f64) -> Result<Self> {
        let x: Vec<f64> = x.into_iter().map(|v| crate::params::wrap(v, length)).collect();
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::ParameterDomain(format!("non-finite position in {x:?}")));
        }
        let min_sep = min_cyclic_separation(&x, length);
        if !(min_sep > 0.0 && min_sep >= floor) {
            return Err(Error::ParameterDomain(format!(
                "minimum separation {min_sep:e} is below the floor {floor:e}"
            )));
        }
        Ok(Self { x, min_sep })
    }

    /// `n` particles at `offset + j L / n`.
    pub fn equally_spaced(n: usize, length: f64, offset: f64) -> Self {
        let x = (0..n)
            .map(|j| crate::params::wrap(offset + j as f64 * length / n as f64, length))
            .collect();
        Self { x, min_sep: length / n as f64 }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Reflection `x -> L - x`, wrapped back into `[0, L)`.
    pub fn reflected(&self, length: f64) -> Self {
        Self {
            x: self.x.iter().map(|&v| crate::params::wrap(length - v, length)).collect(),
            min_sep: self.min_sep,
        }
    }

    /// Rigid rotation by `shift`.
    pub fn rotated(&self, shift: f64, length: f64) -> Self {
        Self {
            x: self.x.iter().map(|&v| crate::params::wrap(v + shift, length)).collect(),
            min_sep: self.min_sep,
        }
    }
}

/// Output of [`sample_configurations`] with its rejection statistics.
#[derive(Debug, Clone)]
pub struct Sampled {
    pub configs: Vec<Configuration>,
    /// Total number of draws, accepted or not.
    pub attempts: u64,
}

impl Sampled {
    pub fn acceptance_rate(&self) -> f64 {
        self.configs.len() as f64 / self.attempts as f64
    }
}

/// Draws `count` configurations with i.i.d. uniform positions, rejecting any
/// draw whose minimum cyclic separation is below `min_sep_frac * L`.
///
/// Positions are returned sorted, so labels increase around the circle.
/// The output depends only on the arguments.
pub fn sample_configurations(
    params: &ModelParams,
    count: usize,
    seed: u64,
    min_sep_frac: f64,
) -> Result<Sampled> {
    if count < 1 {
        return Err(Error::ParameterDomain("sample count must be >= 1".into()));
    }
    if !(min_sep_frac > 0.0 && min_sep_frac < 1.0 / params.n as f64) {
        return Err(Error::ParameterDomain(format!(
            "min_sep_frac = {min_sep_frac} must lie in (0, 1/n) = (0, {})",
            1.0 / params.n as f64
        )));
    }
    let length = params.length;
    let floor = min_sep_frac * length;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut configs = Vec::with_capacity(count);
    let mut attempts = 0u64;
    let mut buf = Vec::with_capacity(params.n);
    while configs.len() < count {
        attempts += 1;
        if attempts - configs.len() as u64 > MAX_REJECTIONS {
            return Err(Error::SamplingExhausted { attempts: attempts - 1 - configs.len() as u64 });
        }
        buf.clear();
        buf.extend((0..params.n).map(|_| rng.random::<f64>() * length));
        buf.sort_by(f64::total_cmp);
        let min_sep = min_cyclic_separation(&buf, length);
        if min_sep >= floor {
            configs.push(Configuration { x: buf.clone(), min_sep });
        }
    }
    Ok(Sampled { configs, attempts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> ModelParams {
        ModelParams::with_default_length(n, 2, 1.0).unwrap()
    }

    #[test]
    fn deterministic_given_seed() {
        let a = sample_configurations(&p(6), 1000, 42, 1e-3).unwrap();
        let b = sample_configurations(&p(6), 1000, 42, 1e-3).unwrap();
        assert_eq!(a.configs, b.configs);
        assert_eq!(a.attempts, b.attempts);
        let c = sample_configurations(&p(6), 10, 43, 1e-3).unwrap();
        assert_ne!(a.configs[0], c.configs[0]);
    }

    #[test]
    fn infeasible_floor_rejected() {
        for n in 3..8 {
            assert!(matches!(
                sample_configurations(&p(n), 1, 0, 0.5),
                Err(Error::ParameterDomain(_))
            ));
        }
        assert!(sample_configurations(&p(6), 0, 0, 1e-3).is_err());
    }

    #[test]
    fn acceptance_rate_for_six_particles() {
        let s = sample_configurations(&p(6), 2000, 7, 1e-3).unwrap();
        // Exact probability is (1 - n delta)^(n-1) = 0.994^5 ~ 0.970.
        assert!(s.acceptance_rate() > 0.9, "rate {}", s.acceptance_rate());
    }

    #[test]
    fn exhausts_on_nearly_infeasible_floor() {
        // (1 - 6 * 0.166)^5 is ~1e-12, so a million draws cannot succeed.
        let r = sample_configurations(&p(6), 1, 3, 0.166);
        assert!(matches!(r, Err(Error::SamplingExhausted { .. })));
    }

    #[test]
    fn samples_respect_floor_and_order() {
        let s = sample_configurations(&p(9), 200, 11, 0.01).unwrap();
        let length = 2.0 * core::f64::consts::PI;
        for c in &s.configs {
            assert!(c.min_sep >= 0.01 * length);
            assert!(c.x.windows(2).all(|w| w[0] < w[1]));
            assert!(c.x.iter().all(|&v| (0.0..length).contains(&v)));
        }
    }

    #[test]
    fn separation_helper() {
        let length = 10.0;
        assert!((min_cyclic_separation(&[0.5, 9.8, 5.0], length) - 0.7).abs() < 1e-12);
        assert!(Configuration::new(alloc::vec![1.0, 1.0, 3.0], length, 0.0).is_err());
        let c = Configuration::new(alloc::vec![-1.0, 1.0, 12.0], length, 0.1).unwrap();
        assert!((c.x[0] - 9.0).abs() < 1e-12 && (c.x[2] - 2.0).abs() < 1e-12);
    }
}
