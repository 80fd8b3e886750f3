//! Exact action of the transformed operator on symmetric Laurent
//! polynomials, its degree-graded spectrum and the parity and boost maps.

pub mod h1;
pub mod pencil;
pub mod symmetry;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::oracle::{momentum_degree, predicted_excitation};
use crate::params::ModelParams;
use crate::poly::{elementary_symmetric, rational_from_f64, recip, Coeff, Exponent, LaurentPoly, Rational};
use crate::wavefunction::StateSpec;

pub use h1::{exact_eigenvalue, H1Operator};
pub use pencil::{build_pencil, solve_pencil, Candidate, CandidateClass, Pencil, PencilLevel, PencilSolution, CERTIFY_TOL};
pub use symmetry::{boost_shift_check, parity_partner, BoostCheck, BoostFormula, ParityCheck, SymCombination};

/// `a = n / (1 + nu beta)` as an exact rational.
pub fn combo_constant(params: &ModelParams, beta: Rational) -> Rational {
    let n = params.n as i128;
    let nu = params.neighbor_count() as i128;
    Rational::from_integer(n) * recip(Rational::from_integer(1) + Rational::from_integer(nu) * beta)
}

/// Exact Laurent polynomial of a named factor. `beta` is needed only for
/// the states whose coefficients depend on it. Trigonometric sums are
/// returned up to a constant factor: `cos` as `e_1 + e_{n-1}/e_n` and `sin`
/// as `e_1 - e_{n-1}/e_n`.
pub fn exact_polynomial(spec: &StateSpec, params: &ModelParams, beta: Option<Rational>) -> Result<LaurentPoly<Coeff>> {
    let n = params.n;
    let e = |k: usize| elementary_symmetric(k, n);
    let inv_en = Exponent(vec![-1; n]);
    let need_beta = || {
        beta.or_else(|| rational_from_f64(params.beta))
            .ok_or_else(|| Error::ParameterDomain(format!("beta = {} has no exact rational form", params.beta)))
    };
    Ok(match spec {
        StateSpec::Ground => LaurentPoly::one(n),
        StateSpec::E1 => e(1)?,
        StateSpec::ENm1 => e(n - 1)?,
        StateSpec::EN => e(n)?,
        StateSpec::Combo => {
            let a = combo_constant(params, need_beta()?);
            e(1)?.mul(&e(n - 1)?)?.sub(&e(n)?.scale(&Coeff::rational(a))?)
        }
        StateSpec::CosSum => e(1)?.add(&e(n - 1)?.shift(&inv_en)),
        StateSpec::SinSum => e(1)?.sub(&e(n - 1)?.shift(&inv_en)),
        StateSpec::NonDegZero => {
            let a = combo_constant(params, need_beta()?);
            e(1)?.mul(&e(n - 1)?)?.shift(&inv_en).sub(&LaurentPoly::constant(n, Coeff::rational(a)))
        }
        StateSpec::Boosted { base, q } => exact_polynomial(base, params, beta)?.shift(&Exponent(vec![*q; n])),
        StateSpec::Monomials(terms) => {
            let mut p = LaurentPoly::zero(n);
            for (exp, c) in terms {
                if exp.len() != n {
                    return Err(Error::ParameterDomain(format!("exponent {exp:?} does not have {n} entries")));
                }
                let c = rational_from_f64(*c)
                    .ok_or_else(|| Error::ParameterDomain(format!("coefficient {c} is not finite")))?;
                p.add_term(Exponent(exp.clone()), Coeff::rational(c));
            }
            p
        }
    })
}

/// Named polynomial states of degree `d` with a closed-form eigenvalue:
/// boosts of the ground state, `e_1`, `e_{n-1}` and of the zero-momentum
/// state. The last is Laurent, so only its boosts with `q >= 1` appear.
pub fn closed_form_states(n: usize, d: usize) -> Vec<StateSpec> {
    let mut out = Vec::new();
    for (base, bd) in [
        (StateSpec::Ground, 0),
        (StateSpec::NonDegZero, 0),
        (StateSpec::E1, 1),
        (StateSpec::ENm1, n - 1),
    ] {
        if d >= bd && (d - bd).is_multiple_of(n) {
            let q = ((d - bd) / n) as i32;
            if q == 0 && base == StateSpec::NonDegZero {
                continue;
            }
            out.push(match (q, &base) {
                (0, _) => base,
                (1, StateSpec::Ground) => StateSpec::EN,
                (1, StateSpec::NonDegZero) => StateSpec::Combo,
                _ => StateSpec::boosted(base, q),
            });
        }
    }
    out
}

/// A pencil eigenvector as a combination of symmetric orbit sums.
pub fn vector_combination(pencil: &Pencil, v: &[f64]) -> SymCombination {
    SymCombination::new(pencil.sym.n, pencil.sym.labels.iter().cloned().zip(v.iter().copied()).collect())
}

/// A pencil eigenvector expanded into monomials, for the local-energy oracle.
pub fn vector_state(pencil: &Pencil, v: &[f64]) -> StateSpec {
    let p = vector_combination(pencil, v).polynomial();
    StateSpec::Monomials(p.iter().map(|(e, c)| (e.0.clone(), *c)).collect())
}

/// A certified level with the closed-form states it accounts for.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumLevel {
    pub lambda: f64,
    pub multiplicity: usize,
    pub residual: f64,
    pub matches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub degree: usize,
    pub dim_sym: usize,
    pub dim_cyc: usize,
    pub beta: f64,
    /// Total momentum `(2 pi / L) d`.
    pub momentum: f64,
    pub square_reducible: bool,
    pub levels: Vec<SpectrumLevel>,
    pub spurious: usize,
    pub ambiguous: usize,
    /// Closed-form predictions at this degree that no certified level matched.
    pub unmatched: Vec<String>,
}

/// Certified symmetric spectrum of `H1` at degree `d`.
pub fn spectrum(op: &H1Operator, d: usize, tol: f64) -> Result<SpectrumReport> {
    let pencil = build_pencil(op, d)?;
    let sol = solve_pencil(&pencil, op.params.beta, tol)?;
    Ok(spectrum_from(op, &pencil, &sol))
}

/// Report for an already solved pencil.
pub fn spectrum_from(op: &H1Operator, pencil: &Pencil, sol: &PencilSolution) -> SpectrumReport {
    let d = pencil.degree;
    let beta = sol.beta;
    let mut levels: Vec<SpectrumLevel> = sol
        .levels
        .iter()
        .map(|l| SpectrumLevel { lambda: l.lambda, multiplicity: l.multiplicity, residual: l.residual, matches: Vec::new() })
        .collect();
    let mut unmatched = Vec::new();
    for spec in closed_form_states(op.n(), d) {
        debug_assert_eq!(momentum_degree(&spec, op.n()), Some(d as i64));
        let Some(lambda) = predicted_excitation(&spec, &op.params) else { continue };
        match levels.iter_mut().find(|l| (l.lambda - lambda).abs() <= 1e-8 * (1.0 + lambda.abs())) {
            Some(l) => l.matches.push(spec.name()),
            None => unmatched.push(spec.name()),
        }
    }
    SpectrumReport {
        degree: d,
        dim_sym: pencil.sym.len(),
        dim_cyc: pencil.cyc.len(),
        beta,
        momentum: 2.0 * PI / op.params.length * d as f64,
        square_reducible: pencil.is_square_reducible(),
        levels,
        spurious: sol.candidates.iter().filter(|c| c.class == CandidateClass::Spurious).count(),
        ambiguous: sol.ambiguous(),
        unmatched,
    }
}
