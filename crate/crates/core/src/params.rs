//! Model parameters and interaction geometry.
//!
//! Particles carry 0-based labels `0..n` arranged around the circle. Every
//! range constraint is measured with the cyclic index distance
//! `min(|i-j|, n-|i-j|)`.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

/// Whether the range actually truncates the interaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `r < c`: genuine truncation, three-body terms present.
    Truncated,
    /// `r >= c`: every particle sees every other one (Sutherland limit).
    Full,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Truncated => "truncated",
            Regime::Full => "full",
        }
    }
}

/// `x` reduced into `[0, length)`.
#[inline]
pub fn wrap(x: f64, length: f64) -> f64 {
    num_traits::Euclid::rem_euclid(&x, &length)
}

/// Cyclic index distance between labels `a` and `b` on a ring of `n`.
#[inline]
pub fn cyclic_distance(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b) % n;
    d.min(n - d)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub n: usize,
    /// Requested range.
    pub r: usize,
    /// Circumference.
    pub length: f64,
    pub beta: f64,
    /// Two-body coupling `beta (beta - 1)`.
    pub g: f64,
    /// Three-body coupling `beta^2`.
    pub big_g: f64,
    /// Half-count threshold, `floor(n / 2)`.
    pub c: usize,
    /// `min(r, floor(n / 2))`.
    pub r_eff: usize,
    /// Boundary parameter; `None` in the full regime where it carries no meaning.
    pub k: Option<usize>,
    pub regime: Regime,
}

impl ModelParams {
    pub fn new(n: usize, r: usize, length: f64, beta: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParameterDomain(format!("particle count n = {n} must be >= 3")));
        }
        if r < 1 {
            return Err(Error::ParameterDomain(format!("range r = {r} must be >= 1")));
        }
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::ParameterDomain(format!("circumference L = {length} must be positive")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::ParameterDomain(format!("exponent beta = {beta} must be positive")));
        }
        let c = n / 2;
        let regime = if r >= c { Regime::Full } else { Regime::Truncated };
        let k = match regime {
            Regime::Full => None,
            Regime::Truncated => {
                assert!(2 * r + 2 <= n, "truncated regime requires 2r + 2 <= n");
                Some((3 * r + 1).saturating_sub(n))
            }
        };
        Ok(Self {
            n,
            r,
            length,
            beta,
            g: beta * (beta - 1.0),
            big_g: beta * beta,
            c,
            r_eff: r.min(c),
            k,
            regime,
        })
    }

    /// Same model with the default circumference `2 pi`.
    pub fn with_default_length(n: usize, r: usize, beta: f64) -> Result<Self> {
        Self::new(n, r, 2.0 * PI, beta)
    }

    /// Returns a copy with a different exponent.
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(self.n, self.r, self.length, beta)
    }

    /// Returns a copy with a different range.
    pub fn with_range(&self, r: usize) -> Result<Self> {
        Self::new(self.n, r, self.length, self.beta)
    }

    /// Number of interaction partners of each particle: `2 r` when
    /// truncated, `n - 1` in the full regime.
    pub fn neighbor_count(&self) -> usize {
        (2 * self.r_eff).min(self.n - 1)
    }

    /// Whether two labels lie inside each other's neighborhood.
    #[inline]
    pub fn in_range(&self, a: usize, b: usize) -> bool {
        let d = cyclic_distance(a, b, self.n);
        d >= 1 && d <= self.r_eff
    }

    /// `beta^2 pi^2 / L^2`, the physical unit of the ground-state energy.
    pub fn energy_unit(&self) -> f64 {
        self.beta * self.beta * PI * PI / (self.length * self.length)
    }
}

/// Interacting pairs; each unordered pair appears exactly once.
///
/// Canonical order: for `a = 0..n` and `step = 1..=r_eff`, the pair
/// `(a, a + step mod n)`. Antipodal pairs (`2 step == n`) are kept only for
/// `a < n / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairList {
    pub pairs: Vec<(usize, usize)>,
}

impl PairList {
    pub fn new(params: &ModelParams) -> Self {
        let n = params.n;
        let mut pairs = Vec::new();
        for a in 0..n {
            for step in 1..=params.r_eff {
                if 2 * step == n && a >= n / 2 {
                    continue;
                }
                pairs.push((a, (a + step) % n));
            }
        }
        Self { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.pairs.iter()
    }
}

/// A three-body term `(i, center, k)`: both ends in range of the center,
/// the ends out of range of each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triple {
    pub i: usize,
    pub center: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleList {
    pub triples: Vec<Triple>,
}

impl TripleList {
    pub fn new(params: &ModelParams) -> Self {
        let n = params.n;
        let mut triples = Vec::new();
        if params.regime == Regime::Full {
            return Self { triples };
        }
        for center in 0..n {
            let neighbors: Vec<usize> = (0..n).filter(|&b| params.in_range(center, b)).collect();
            for (x, &i) in neighbors.iter().enumerate() {
                for &k in &neighbors[x + 1..] {
                    if cyclic_distance(i, k, n) > params.r_eff {
                        triples.push(Triple { i, center, k });
                    }
                }
            }
        }
        Self { triples }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }
}

/// Parameters bundled with their pair and triple lists, built once and
/// shared by every evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub params: ModelParams,
    pub pairs: PairList,
    pub triples: TripleList,
}

impl Model {
    pub fn new(params: ModelParams) -> Self {
        let pairs = PairList::new(&params);
        let triples = TripleList::new(&params);
        Self { params, pairs, triples }
    }

    pub fn n(&self) -> usize {
        self.params.n
    }
}

/// Closed-form count of three-body terms, `(n/2)(r - k)(r + k + 1)`.
pub fn triple_count_formula(params: &ModelParams) -> Result<usize> {
    let Some(k) = params.k else {
        return Err(Error::Regime(format!(
            "no three-body count formula in the full regime (n = {}, r = {})",
            params.n, params.r
        )));
    };
    let twice = params.n * (params.r - k) * (params.r + k + 1);
    assert!(twice.is_multiple_of(2), "triple count must be an integer");
    Ok(twice / 2)
}

/// Ground-state energy, both in units of `beta^2 pi^2 / L^2` and physical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundEnergy {
    /// Always an integer; see [`ground_energy`].
    pub reduced: u64,
    pub physical: f64,
}

/// `n [r(r+1)/2 + k(k+1)/6]` when truncated, `n (n^2 - 1) / 6` when full.
pub fn ground_energy(params: &ModelParams) -> GroundEnergy {
    let n = params.n as u64;
    let reduced = match params.k {
        Some(k) => {
            let (r, k) = (params.r as u64, k as u64);
            let sixfold = n * (3 * r * (r + 1) + k * (k + 1));
            assert!(sixfold.is_multiple_of(6), "ground energy must be an integer multiple of the unit");
            sixfold / 6
        }
        None => n * (n * n - 1) / 6,
    };
    GroundEnergy {
        reduced,
        physical: reduced as f64 * params.energy_unit(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, r: usize, beta: f64) -> ModelParams {
        ModelParams::with_default_length(n, r, beta).unwrap()
    }

    #[test]
    fn derive_examples() {
        let a = p(6, 2, 1.0);
        assert_eq!(a.k, Some(1));
        assert_eq!(a.regime, Regime::Truncated);
        assert_eq!((a.g, a.big_g), (0.0, 1.0));

        let b = p(7, 3, 1.0);
        assert_eq!(b.c, 3);
        assert_eq!(b.regime, Regime::Full);
        assert_eq!(b.k, None);

        let c = p(9, 2, 2.0);
        assert_eq!(c.k, Some(0));
        assert_eq!((c.g, c.big_g), (2.0, 4.0));
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(matches!(ModelParams::new(2, 1, 1.0, 1.0), Err(Error::ParameterDomain(_))));
        assert!(matches!(ModelParams::new(5, 0, 1.0, 1.0), Err(Error::ParameterDomain(_))));
        assert!(matches!(ModelParams::new(5, 1, 0.0, 1.0), Err(Error::ParameterDomain(_))));
        assert!(matches!(ModelParams::new(5, 1, 1.0, -0.5), Err(Error::ParameterDomain(_))));
        assert!(matches!(ModelParams::new(5, 1, f64::NAN, 1.0), Err(Error::ParameterDomain(_))));
    }

    #[test]
    fn admissibility_follows_from_positive_beta() {
        // g = (beta - 1/2)^2 - 1/4 touches -1/4 at beta = 1/2.
        for beta in [1e-6, 0.3, 0.5, 1.0, 7.0] {
            let m = p(5, 1, beta);
            assert!(m.g >= -0.25 && m.big_g >= 0.0);
            assert_eq!(m.g > -0.25, beta != 0.5);
        }
    }

    #[test]
    fn pair_counts() {
        assert_eq!(PairList::new(&p(6, 2, 1.0)).len(), 12);
        assert_eq!(PairList::new(&p(4, 2, 1.0)).len(), 6);
        assert_eq!(PairList::new(&p(5, 7, 1.0)).len(), 10);
        assert_eq!(PairList::new(&p(8, 4, 1.0)).len(), 28);
    }

    #[test]
    fn triple_examples() {
        assert_eq!(TripleList::new(&p(6, 2, 1.0)).len(), 12);
        let nn = TripleList::new(&p(6, 1, 1.0));
        assert_eq!(nn.len(), 6);
        for t in nn.iter() {
            let mut ends = [t.i, t.k];
            ends.sort();
            let mut want = [(t.center + 5) % 6, (t.center + 1) % 6];
            want.sort();
            assert_eq!(ends, want);
        }
        assert!(TripleList::new(&p(7, 3, 1.0)).is_empty());
    }

    #[test]
    fn triple_formula_examples() {
        assert_eq!(triple_count_formula(&p(12, 2, 1.0)).unwrap(), 36);
        assert_eq!(triple_count_formula(&p(8, 3, 1.0)).unwrap(), 24);
        assert_eq!(triple_count_formula(&p(6, 2, 1.0)).unwrap(), 12);
        assert!(matches!(triple_count_formula(&p(7, 3, 1.0)), Err(Error::Regime(_))));
    }

    #[test]
    fn ground_energy_examples() {
        assert_eq!(ground_energy(&p(8, 3, 1.0)).reduced, 56);
        assert_eq!(ground_energy(&p(7, 2, 1.0)).reduced, 21);
        assert_eq!(ground_energy(&p(9, 3, 1.0)).reduced, 57);
        assert_eq!(ground_energy(&p(4, 2, 1.0)).reduced, 10);
        let e = ground_energy(&p(8, 3, 1.0));
        assert!((e.physical - 56.0 * 0.25).abs() < 1e-12);
    }

    #[test]
    fn energy_limits() {
        for n in 3..=14 {
            assert_eq!(ground_energy(&p(n, 1, 1.0)).reduced, if n >= 4 { n as u64 } else { 4 });
            let full = (n * (n * n - 1) / 6) as u64;
            for r in n / 2..n + 3 {
                assert_eq!(ground_energy(&p(n, r, 2.0)).reduced, full);
            }
        }
    }
}
