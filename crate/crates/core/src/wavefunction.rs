//! Ground-state amplitude and the symmetric trial factors multiplying it.
//!
//! Everything is evaluated in the log domain for the ground state. Each
//! quantity has two independent derivative paths: closed-form formulas and
//! propagation of [`Jet`] dual numbers through the value computation.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::jet::{ComplexJet, Jet, RealJet};
use crate::params::Model;

/// Smallest admissible pair factor `sin(theta)`.
pub const SIN_FLOOR: f64 = 1e-300;

/// A trial factor is rejected when `|phi|` falls below this fraction of its scale.
pub const NODE_RATIO: f64 = 1e-10;

/// Pair angle `pi ((x_a - x_b) mod L) / L`, always in `[0, pi)`.
#[inline]
fn pair_angle(xa: f64, xb: f64, length: f64) -> f64 {
    PI * crate::params::wrap(xa - xb, length) / length
}

fn checked_sin(theta: f64, a: usize, b: usize) -> Result<f64> {
    let s = libm::sin(theta);
    if !(s >= SIN_FLOOR) {
        return Err(Error::SeparationUnderflow { a, b });
    }
    Ok(s)
}

/// `log psi_0`, with unit normalization.
pub fn log_psi0(model: &Model, config: &Configuration) -> Result<f64> {
    let p = &model.params;
    let mut acc = 0.0;
    for &(a, b) in model.pairs.iter() {
        let s = checked_sin(pair_angle(config.x[a], config.x[b], p.length), a, b)?;
        acc += libm::log(s);
    }
    Ok(p.beta * acc)
}

/// Log-amplitude of the ground state with its gradient and `Delta psi_0 / psi_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Psi0Derivatives {
    pub log: f64,
    pub grad: Vec<f64>,
    pub lap_ratio: f64,
}

/// Closed-form gradient and Laplacian ratio of `psi_0`.
pub fn psi0_derivatives(model: &Model, config: &Configuration) -> Result<Psi0Derivatives> {
    let p = &model.params;
    let n = p.n;
    let w = PI / p.length;
    let mut log = 0.0;
    let mut grad = vec![0.0; n];
    let mut curv = vec![0.0; n];
    for &(a, b) in model.pairs.iter() {
        let theta = pair_angle(config.x[a], config.x[b], p.length);
        let s = checked_sin(theta, a, b)?;
        let cot = libm::cos(theta) / s;
        let csc2 = 1.0 / (s * s);
        log += libm::log(s);
        grad[a] += cot;
        grad[b] -= cot;
        curv[a] += csc2;
        curv[b] += csc2;
    }
    let mut lap_ratio = 0.0;
    for m in 0..n {
        grad[m] *= p.beta * w;
        lap_ratio += grad[m] * grad[m] - p.beta * w * w * curv[m];
    }
    Ok(Psi0Derivatives { log: p.beta * log, grad, lap_ratio })
}

pub fn grad_log_psi0(model: &Model, config: &Configuration) -> Result<Vec<f64>> {
    psi0_derivatives(model, config).map(|d| d.grad)
}

pub fn laplacian_ratio_psi0(model: &Model, config: &Configuration) -> Result<f64> {
    psi0_derivatives(model, config).map(|d| d.lap_ratio)
}

/// Same quantities as [`psi0_derivatives`], propagated through dual numbers.
pub fn psi0_derivatives_dual(model: &Model, config: &Configuration) -> Result<Psi0Derivatives> {
    let p = &model.params;
    let n = p.n;
    let w = PI / p.length;
    let mut grad = vec![0.0; n];
    let mut lap = 0.0;
    let mut log = 0.0;
    for m in 0..n {
        let mut acc = RealJet::constant(0.0);
        for &(a, b) in model.pairs.iter() {
            if a != m && b != m {
                continue;
            }
            let xa = if a == m { RealJet::variable(config.x[a]) } else { RealJet::constant(config.x[a]) };
            let xb = if b == m { RealJet::variable(config.x[b]) } else { RealJet::constant(config.x[b]) };
            let mut theta = (xa - xb).scale(w);
            theta.v = pair_angle(config.x[a], config.x[b], p.length);
            checked_sin(theta.v, a, b)?;
            acc = acc + theta.sin().ln();
        }
        grad[m] = p.beta * acc.d;
        lap += grad[m] * grad[m] + p.beta * acc.dd;
    }
    for &(a, b) in model.pairs.iter() {
        log += libm::log(libm::sin(pair_angle(config.x[a], config.x[b], p.length)));
    }
    Ok(Psi0Derivatives { log: p.beta * log, grad, lap_ratio: lap })
}

/// Symbolic label of a candidate symmetric factor `phi` with `psi = psi_0 phi`.
///
/// `e_k` are elementary symmetric polynomials in `z_j = exp(2 pi i x_j / L)`
/// and `a = n / (1 + nu beta)` with `nu` the neighbor count.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    /// `phi = 1`.
    Ground,
    /// `e_1`.
    E1,
    /// `e_{n-1}`.
    ENm1,
    /// `e_n`, a pure phase.
    EN,
    /// `e_1 e_{n-1} - a e_n`.
    Combo,
    /// `sum_i cos u_i`, `u_i = 2 pi x_i / L`.
    CosSum,
    /// `sum_i sin u_i`.
    SinSum,
    /// `e_1 e_{n-1} / e_n - a`, the zero-momentum real state.
    NonDegZero,
    /// `(prod_i z_i)^q` times the base factor.
    Boosted { base: Box<StateSpec>, q: i32 },
    /// Explicit Laurent polynomial in `z`: (exponents, coefficient) terms.
    Monomials(Vec<(Vec<i32>, f64)>),
}

impl StateSpec {
    pub fn boosted(base: StateSpec, q: i32) -> Self {
        StateSpec::Boosted { base: Box::new(base), q }
    }

    /// The state `phi(1/z)` up to a constant factor, written with boosts so
    /// that every factor stays a named state.
    pub fn parity_image(&self) -> StateSpec {
        match self {
            StateSpec::Ground | StateSpec::NonDegZero | StateSpec::CosSum | StateSpec::SinSum => self.clone(),
            StateSpec::E1 => StateSpec::boosted(StateSpec::ENm1, -1),
            StateSpec::ENm1 => StateSpec::boosted(StateSpec::E1, -1),
            StateSpec::EN => StateSpec::boosted(StateSpec::Ground, -1),
            StateSpec::Combo => StateSpec::boosted(StateSpec::NonDegZero, -1),
            StateSpec::Boosted { base, q } => match base.parity_image() {
                StateSpec::Boosted { base: inner, q: s } => StateSpec::boosted(*inner, s - q),
                other => StateSpec::boosted(other, -q),
            },
            StateSpec::Monomials(terms) => {
                StateSpec::Monomials(terms.iter().map(|(e, c)| (e.iter().map(|&k| -k).collect(), *c)).collect())
            }
        }
    }

    /// Short stable name.
    pub fn name(&self) -> alloc::string::String {
        use alloc::format;
        match self {
            StateSpec::Ground => "ground".into(),
            StateSpec::E1 => "e1".into(),
            StateSpec::ENm1 => "en-1".into(),
            StateSpec::EN => "en".into(),
            StateSpec::Combo => "combo".into(),
            StateSpec::CosSum => "cos-sum".into(),
            StateSpec::SinSum => "sin-sum".into(),
            StateSpec::NonDegZero => "nondeg-zero".into(),
            StateSpec::Boosted { base, q } => format!("boost({},{q})", base.name()),
            StateSpec::Monomials(t) => format!("poly[{} terms]", t.len()),
        }
    }
}

/// One product `coef * prod_f e_{k_f} * z^phase`.
#[derive(Debug, Clone)]
struct Term {
    coef: Complex64,
    factors: Vec<usize>,
    phase: Vec<i32>,
}

fn expand(spec: &StateSpec, model: &Model) -> Vec<Term> {
    let n = model.n();
    let p = &model.params;
    let a = n as f64 / (1.0 + p.neighbor_count() as f64 * p.beta);
    let zero = vec![0; n];
    let minus = vec![-1; n];
    let t = |coef: Complex64, factors: Vec<usize>, phase: &Vec<i32>| Term { coef, factors, phase: phase.clone() };
    let one = Complex64::new(1.0, 0.0);
    match spec {
        StateSpec::Ground => vec![t(one, vec![], &zero)],
        StateSpec::E1 => vec![t(one, vec![1], &zero)],
        StateSpec::ENm1 => vec![t(one, vec![n - 1], &zero)],
        StateSpec::EN => vec![t(one, vec![n], &zero)],
        StateSpec::Combo => vec![t(one, vec![1, n - 1], &zero), t(-one * a, vec![n], &zero)],
        StateSpec::CosSum => vec![t(one * 0.5, vec![1], &zero), t(one * 0.5, vec![n - 1], &minus)],
        StateSpec::SinSum => {
            let h = Complex64::new(0.0, 0.5);
            vec![t(-h, vec![1], &zero), t(h, vec![n - 1], &minus)]
        }
        StateSpec::NonDegZero => vec![t(one, vec![1, n - 1], &minus), t(-one * a, vec![], &zero)],
        StateSpec::Boosted { base, q } => {
            let mut terms = expand(base, model);
            for term in &mut terms {
                term.phase.iter_mut().for_each(|e| *e += q);
            }
            terms
        }
        StateSpec::Monomials(list) => list
            .iter()
            .map(|(e, c)| {
                assert_eq!(e.len(), n, "monomial exponent length must equal n");
                t(one * *c, vec![], e)
            })
            .collect(),
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Upper bound of `|phi|` on the torus, used to judge node proximity.
fn scale_of(terms: &[Term], n: usize) -> f64 {
    terms
        .iter()
        .map(|t| t.coef.norm() * t.factors.iter().map(|&k| binomial(n, k)).product::<f64>())
        .sum()
}

/// Elementary symmetric polynomials `e_0..=e_n` of `z` by expanding `prod (1 + z_j t)`.
pub fn elementary_values<T>(z: &[T]) -> Vec<T>
where
    T: Copy + num_traits::Zero + num_traits::One + core::ops::Mul<Output = T> + core::ops::Add<Output = T>,
{
    let mut e = vec![T::zero(); z.len() + 1];
    e[0] = T::one();
    for (j, &zj) in z.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            e[k] = e[k] + zj * e[k - 1];
        }
    }
    e
}

/// `phi`, `grad phi / phi` and `Delta phi / phi` at one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiData {
    pub value: Complex64,
    pub grad_ratio: Vec<Complex64>,
    pub lap_ratio: Complex64,
}

/// Upper bound of `|phi|` on the torus; `phi_scale / |phi|` bounds the
/// conditioning of the derivative ratios.
pub fn phi_scale(spec: &StateSpec, model: &Model) -> f64 {
    scale_of(&expand(spec, model), model.n())
}

fn z_values(config: &Configuration, length: f64) -> Vec<Complex64> {
    config
        .x
        .iter()
        .map(|&x| Complex64::from_polar(1.0, 2.0 * PI * x / length))
        .collect()
}

fn node_check(value: Complex64, terms: &[Term], n: usize) -> Result<()> {
    let ratio = value.norm() / scale_of(terms, n);
    if !(ratio >= NODE_RATIO) {
        return Err(Error::NodeProximity { ratio });
    }
    Ok(())
}

/// Closed-form derivatives: `d e_k / d x_m = i w z_m e_{k-1}(z without z_m)`
/// and the same again for the second derivative times `i w`.
pub fn phi_eval(spec: &StateSpec, model: &Model, config: &Configuration) -> Result<PhiData> {
    let n = model.n();
    let terms = expand(spec, model);
    let z = z_values(config, model.params.length);
    let iw = Complex64::new(0.0, 2.0 * PI / model.params.length);
    let e_all = elementary_values(&z);
    let e_minus: Vec<Vec<Complex64>> = (0..n)
        .map(|m| {
            let rest: Vec<Complex64> = z.iter().enumerate().filter(|&(j, _)| j != m).map(|(_, &v)| v).collect();
            elementary_values(&rest)
        })
        .collect();

    let phase_value = |phase: &[i32]| -> Complex64 {
        z.iter().zip(phase).map(|(zj, &e)| zj.powi(e)).product()
    };
    let value: Complex64 = terms
        .iter()
        .map(|t| t.coef * t.factors.iter().map(|&k| e_all[k]).product::<Complex64>() * phase_value(&t.phase))
        .sum();
    node_check(value, &terms, n)?;

    let mut grad_ratio = vec![Complex64::new(0.0, 0.0); n];
    let mut lap = Complex64::new(0.0, 0.0);
    for m in 0..n {
        let mut sum = Jet::constant(Complex64::new(0.0, 0.0));
        for t in &terms {
            let mut acc = ComplexJet::constant(t.coef);
            for &k in &t.factors {
                let dk = if k == 0 { Complex64::new(0.0, 0.0) } else { z[m] * e_minus[m][k - 1] };
                acc = acc * Jet { v: e_all[k], d: iw * dk, dd: iw * iw * dk };
            }
            let pv = phase_value(&t.phase);
            let em = t.phase[m] as f64;
            acc = acc * Jet { v: pv, d: iw * em * pv, dd: iw * iw * em * em * pv };
            sum = sum + acc;
        }
        grad_ratio[m] = sum.d / value;
        lap += sum.dd / value;
    }
    Ok(PhiData { value, grad_ratio, lap_ratio: lap })
}

/// Dual-number path: every `z_j` becomes a jet and the `e_k` recurrence is
/// run in jet arithmetic.
pub fn phi_eval_dual(spec: &StateSpec, model: &Model, config: &Configuration) -> Result<PhiData> {
    let n = model.n();
    let terms = expand(spec, model);
    let w = 2.0 * PI / model.params.length;
    let mut grad_ratio = vec![Complex64::new(0.0, 0.0); n];
    let mut lap = Complex64::new(0.0, 0.0);
    let mut value = Complex64::new(0.0, 0.0);
    for m in 0..n {
        let z: Vec<ComplexJet> = config
            .x
            .iter()
            .enumerate()
            .map(|(j, &x)| {
                let xj = if j == m { RealJet::variable(x) } else { RealJet::constant(x) };
                xj.scale(w).cis()
            })
            .collect();
        let e = elementary_values(&z);
        let mut sum = ComplexJet::constant(Complex64::new(0.0, 0.0));
        for t in &terms {
            let mut acc = ComplexJet::constant(t.coef);
            for &k in &t.factors {
                acc = acc * e[k];
            }
            for (j, &p) in t.phase.iter().enumerate() {
                if p != 0 {
                    acc = acc * z[j].powi(p);
                }
            }
            sum = sum + acc;
        }
        if m == 0 {
            value = sum.v;
            node_check(value, &terms, n)?;
        }
        grad_ratio[m] = sum.d / sum.v;
        lap += sum.dd / sum.v;
    }
    Ok(PhiData { value, grad_ratio, lap_ratio: lap })
}

/// Log-modulus of `psi_0`, the phase of `phi`, the complex log-gradient of
/// `psi = psi_0 phi` and `Delta psi / psi`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeData {
    pub log_mod: f64,
    pub phase: Complex64,
    pub grad: Vec<Complex64>,
    pub lap_ratio: Complex64,
}

fn combine(psi0: Psi0Derivatives, phi: PhiData) -> AmplitudeData {
    let mut cross = Complex64::new(0.0, 0.0);
    let grad = psi0
        .grad
        .iter()
        .zip(&phi.grad_ratio)
        .map(|(&g0, &gp)| {
            cross += gp * g0;
            gp + g0
        })
        .collect();
    AmplitudeData {
        log_mod: psi0.log,
        phase: phi.value / phi.value.norm(),
        grad,
        lap_ratio: phi.lap_ratio + cross * 2.0 + psi0.lap_ratio,
    }
}

/// Amplitude data of `psi_0 phi` through the closed-form path.
pub fn amplitude(model: &Model, spec: &StateSpec, config: &Configuration) -> Result<AmplitudeData> {
    Ok(combine(psi0_derivatives(model, config)?, phi_eval(spec, model, config)?))
}

/// Amplitude data of `psi_0 phi` through the dual-number path.
pub fn amplitude_dual(model: &Model, spec: &StateSpec, config: &Configuration) -> Result<AmplitudeData> {
    Ok(combine(psi0_derivatives_dual(model, config)?, phi_eval_dual(spec, model, config)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ModelParams;

    fn model(n: usize, r: usize, beta: f64) -> Model {
        Model::new(ModelParams::with_default_length(n, r, beta).unwrap())
    }

    fn config(x: &[f64]) -> Configuration {
        Configuration::new(x.to_vec(), 2.0 * PI, 0.0).unwrap()
    }

    #[test]
    fn equally_spaced_log_psi0() {
        let m = model(4, 1, 1.0);
        let c = Configuration::equally_spaced(4, 2.0 * PI, 0.0);
        let got = log_psi0(&m, &c).unwrap();
        assert!((got + 2.0 * libm::log(2.0)).abs() < 1e-14);
        let g = grad_log_psi0(&m, &c).unwrap();
        assert!(g.iter().all(|v| v.abs() < 1e-14));
    }

    #[test]
    fn equally_spaced_is_critical_point() {
        for (n, r) in [(5, 1), (6, 2), (7, 3), (9, 2), (8, 4)] {
            let m = model(n, r, 1.7);
            let c = Configuration::equally_spaced(n, 2.0 * PI, 0.3);
            let g = grad_log_psi0(&m, &c).unwrap();
            assert!(g.iter().all(|v| v.abs() < 1e-12), "{n} {r}: {g:?}");
        }
    }

    #[test]
    fn linear_in_beta_and_rotation_invariant() {
        let c = config(&[0.1, 0.9, 2.0, 3.3, 4.0, 5.5]);
        let a = log_psi0(&model(6, 2, 1.0), &c).unwrap();
        let b = log_psi0(&model(6, 2, 2.0), &c).unwrap();
        assert!((b - 2.0 * a).abs() < 1e-13);
        let rot = c.rotated(1.234, 2.0 * PI);
        assert!((log_psi0(&model(6, 2, 1.0), &rot).unwrap() - a).abs() < 1e-12);
    }

    #[test]
    fn coincident_particles_underflow() {
        let m = model(4, 1, 1.0);
        let c = Configuration { x: vec![1.0, 1.0, 2.0, 3.0], min_sep: 0.0 };
        assert!(matches!(log_psi0(&m, &c), Err(Error::SeparationUnderflow { .. })));
    }

    #[test]
    fn ground_factor_is_trivial() {
        let m = model(6, 2, 1.0);
        let c = config(&[0.1, 0.9, 2.0, 3.3, 4.0, 5.5]);
        let d = phi_eval(&StateSpec::Ground, &m, &c).unwrap();
        assert_eq!(d.value, Complex64::new(1.0, 0.0));
        assert!(d.grad_ratio.iter().all(|g| g.norm() == 0.0));
        assert_eq!(d.lap_ratio, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn e1_node_at_equal_spacing() {
        let m = model(6, 2, 1.0);
        let c = Configuration::equally_spaced(6, 2.0 * PI, 0.2);
        assert!(matches!(phi_eval(&StateSpec::E1, &m, &c), Err(Error::NodeProximity { .. })));
        assert!(matches!(phi_eval_dual(&StateSpec::E1, &m, &c), Err(Error::NodeProximity { .. })));
    }

    #[test]
    fn en_is_pure_phase() {
        let n = 5;
        let m = model(n, 1, 1.0);
        let c = config(&[0.2, 1.0, 2.5, 4.1, 5.0]);
        let d = phi_eval(&StateSpec::EN, &m, &c).unwrap();
        assert!((d.value.norm() - 1.0).abs() < 1e-14);
        assert!((d.lap_ratio + Complex64::new(n as f64, 0.0)).norm() < 1e-12);
        assert!(d.grad_ratio.iter().all(|g| (g - Complex64::i()).norm() < 1e-13));
    }

    #[test]
    fn cos_sum_matches_trig_form() {
        let m = model(6, 2, 1.0);
        let x = [0.1, 0.9, 2.0, 3.3, 4.0, 5.5];
        let c = config(&x);
        let cos = phi_eval(&StateSpec::CosSum, &m, &c).unwrap().value;
        let sin = phi_eval(&StateSpec::SinSum, &m, &c).unwrap().value;
        let want_c: f64 = x.iter().map(|v| libm::cos(*v)).sum();
        let want_s: f64 = x.iter().map(|v| libm::sin(*v)).sum();
        assert!((cos - Complex64::new(want_c, 0.0)).norm() < 1e-13);
        assert!((sin - Complex64::new(want_s, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn nondeg_zero_is_real_and_parity_even() {
        let m = model(6, 2, 1.0);
        let c = config(&[0.1, 0.9, 2.0, 3.3, 4.0, 5.5]);
        let a = phi_eval(&StateSpec::NonDegZero, &m, &c).unwrap().value;
        let b = phi_eval(&StateSpec::NonDegZero, &m, &c.reflected(2.0 * PI)).unwrap().value;
        assert!(a.im.abs() < 1e-13);
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn dual_path_agrees_on_a_sample() {
        let m = model(7, 2, 2.5);
        let c = config(&[0.1, 0.8, 1.7, 2.2, 3.6, 4.9, 5.8]);
        for spec in [StateSpec::Combo, StateSpec::NonDegZero, StateSpec::boosted(StateSpec::ENm1, -1)] {
            let a = phi_eval(&spec, &m, &c).unwrap();
            let b = phi_eval_dual(&spec, &m, &c).unwrap();
            assert!((a.value - b.value).norm() < 1e-12 * a.value.norm());
            assert!((a.lap_ratio - b.lap_ratio).norm() < 1e-11 * (1.0 + a.lap_ratio.norm()));
        }
        let a = psi0_derivatives(&m, &c).unwrap();
        let b = psi0_derivatives_dual(&m, &c).unwrap();
        assert!((a.lap_ratio - b.lap_ratio).abs() < 1e-11 * (1.0 + a.lap_ratio.abs()));
    }
}
