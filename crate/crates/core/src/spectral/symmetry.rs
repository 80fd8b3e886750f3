//! Parity `z -> 1/z` and Galilei boosts `phi -> (prod z)^q phi`.

use alloc::format;
use alloc::vec::Vec;

use super::h1::{exact_eigenvalue, H1Operator};
use crate::basis::monomial_symmetric;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Coefficient, Degree, Exponent, LaurentPoly, Rational};

/// `p(1/z)`.
pub fn parity_image<C: Coefficient>(p: &LaurentPoly<C>) -> LaurentPoly<C> {
    p.map_exponents(|e| Exponent(e.0.iter().map(|&k| -k).collect()))
}

/// `(prod z)^q p`.
pub fn boost<C: Coefficient>(p: &LaurentPoly<C>, q: i32) -> LaurentPoly<C> {
    p.shift(&Exponent(alloc::vec![q; p.nvars()]))
}

/// Smallest boost `s >= 0` making every exponent non-negative, and the result.
pub fn reduce_by_boost<C: Coefficient>(p: &LaurentPoly<C>) -> (LaurentPoly<C>, i32) {
    let lowest = p.iter().flat_map(|(e, _)| e.0.iter().copied()).min().unwrap_or(0);
    let s = (-lowest).max(0);
    (boost(p, s), s)
}

fn homogeneous_degree<C: Coefficient>(p: &LaurentPoly<C>) -> Result<i64> {
    match p.degree() {
        Degree::Homogeneous(d) => Ok(d),
        other => Err(Error::ParameterDomain(format!("expected a homogeneous polynomial, got {other:?}"))),
    }
}

fn require_eigenvalue(op: &H1Operator, p: &LaurentPoly<Coeff>, beta: Option<Rational>, what: &str) -> Result<Coeff> {
    exact_eigenvalue(op, p, beta)?.ok_or_else(|| Error::NotEigenvector(format!("{what}: {p}")))
}

/// Whether `q` is a scalar multiple of `p`.
fn proportional(p: &LaurentPoly<Coeff>, q: &LaurentPoly<Coeff>) -> bool {
    match (p.leading(), q.coefficient(p.leading().map(|(e, _)| e).unwrap_or(&Exponent::zero(p.nvars())))) {
        (Some((_, cp)), Some(cq)) if cp.is_beta_free() && cq.is_beta_free() => {
            let ratio = Coeff::rational(cq.a / cp.a);
            p.scale(&ratio).map(|s| &s == q).unwrap_or(false)
        }
        _ => false,
    }
}

/// Outcome of [`parity_partner`].
#[derive(Debug, Clone, PartialEq)]
pub struct ParityCheck {
    /// Momentum of the input, in units of `2 pi / L`.
    pub degree: i64,
    pub lambda: Coeff,
    /// Eigenvalue of `p(1/z)`, which carries momentum `-degree`.
    pub image_lambda: Coeff,
    /// `p(1/z)` boosted back to a polynomial.
    pub partner: LaurentPoly<Coeff>,
    pub boost: i32,
    pub partner_degree: i64,
    pub partner_lambda: Coeff,
    /// `lambda + 2 s (-degree) + n s^2`.
    pub expected_partner_lambda: Coeff,
    /// `p(1/z)` is a multiple of `p`: the state is its own parity image.
    pub self_conjugate: bool,
}

impl ParityCheck {
    /// `+kappa` and `-kappa` states with one energy.
    pub fn is_degenerate_pair(&self) -> bool {
        self.degree != 0 && self.image_lambda == self.lambda && !self.self_conjugate
    }

    /// Zero momentum and mapped onto itself.
    pub fn is_nondegenerate(&self) -> bool {
        self.degree == 0 && self.self_conjugate && self.image_lambda == self.lambda
    }

    pub fn boost_consistent(&self) -> bool {
        self.partner_lambda == self.expected_partner_lambda
    }
}

/// Certifies that the parity image of an eigenpolynomial is again an
/// eigenpolynomial with the same eigenvalue, and that its polynomial form
/// obtained by boosting carries the boost-shifted eigenvalue.
pub fn parity_partner(op: &H1Operator, p: &LaurentPoly<Coeff>, beta: Option<Rational>) -> Result<ParityCheck> {
    let degree = homogeneous_degree(p)?;
    let lambda = require_eigenvalue(op, p, beta, "input")?;
    let image = parity_image(p);
    let image_lambda = require_eigenvalue(op, &image, beta, "parity image")?;
    let (partner, s) = reduce_by_boost(&image);
    let partner_lambda = require_eigenvalue(op, &partner, beta, "boosted parity image")?;
    let n = op.n() as i64;
    let shift = 2 * s as i64 * (-degree) + n * (s as i64) * (s as i64);
    Ok(ParityCheck {
        degree,
        lambda,
        image_lambda,
        self_conjugate: proportional(p, &image),
        partner_degree: degree_after(degree, s, n),
        partner,
        boost: s,
        partner_lambda,
        expected_partner_lambda: image_lambda.add(&Coeff::int(shift)),
    })
}

fn degree_after(degree: i64, s: i32, n: i64) -> i64 {
    -degree + n * s as i64
}

/// Which closed form a measured boost shift agrees with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostFormula {
    /// `2 q d + n q^2`.
    Operator,
    /// `2 n q d + (n q)^2`, the published form with `kappa = (2 pi / L) d`.
    Published,
    Both,
    Neither,
}

impl BoostFormula {
    pub fn as_str(self) -> &'static str {
        match self {
            BoostFormula::Operator => "2qd+Nq^2",
            BoostFormula::Published => "2Nqd+(Nq)^2",
            BoostFormula::Both => "both",
            BoostFormula::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoostCheck {
    pub degree: i64,
    pub q: i32,
    pub lambda_base: Coeff,
    pub lambda_boosted: Coeff,
    pub shift: Coeff,
    pub operator_formula: i64,
    pub published_formula: i64,
    pub matches: BoostFormula,
}

pub fn boost_formulas(n: i64, d: i64, q: i64) -> (i64, i64) {
    (2 * q * d + n * q * q, 2 * n * q * d + n * n * q * q)
}

fn classify_shift(shift: f64, operator: i64, published: i64, tol: f64) -> BoostFormula {
    let near = |v: i64| (shift - v as f64).abs() <= tol * (1.0 + (v as f64).abs());
    match (near(operator), near(published)) {
        (true, true) => BoostFormula::Both,
        (true, false) => BoostFormula::Operator,
        (false, true) => BoostFormula::Published,
        (false, false) => BoostFormula::Neither,
    }
}

/// Certifies that `(prod z)^q p` is an eigenpolynomial and measures the
/// eigenvalue shift.
pub fn boost_shift_check(op: &H1Operator, p: &LaurentPoly<Coeff>, q: i32, beta: Option<Rational>) -> Result<BoostCheck> {
    let degree = homogeneous_degree(p)?;
    let lambda_base = require_eigenvalue(op, p, beta, "base")?;
    let lambda_boosted = require_eigenvalue(op, &boost(p, q), beta, "boosted")?;
    let shift = lambda_boosted.sub(&lambda_base);
    let (operator_formula, published_formula) = boost_formulas(op.n() as i64, degree, q as i64);
    let matches = if !shift.is_beta_free() {
        BoostFormula::Neither
    } else {
        let exact = |v: i64| shift.a == Rational::from_integer(v as i128);
        match (exact(operator_formula), exact(published_formula)) {
            (true, true) => BoostFormula::Both,
            (true, false) => BoostFormula::Operator,
            (false, true) => BoostFormula::Published,
            (false, false) => BoostFormula::Neither,
        }
    };
    Ok(BoostCheck { degree, q, lambda_base, lambda_boosted, shift, operator_formula, published_formula, matches })
}

/// A numeric symmetric polynomial `sum_i v_i m_{label_i}` with the exact
/// `H1` images of its orbit sums, so residuals never rely on floating
/// division.
#[derive(Debug, Clone)]
pub struct SymCombination {
    pub n: usize,
    pub terms: Vec<(Vec<i32>, f64)>,
}

impl SymCombination {
    pub fn new(n: usize, terms: Vec<(Vec<i32>, f64)>) -> Self {
        Self { n, terms }
    }

    pub fn degree(&self) -> i64 {
        self.terms.first().map_or(0, |(l, _)| l.iter().map(|&k| k as i64).sum())
    }

    /// Drops negligible coefficients relative to the largest.
    pub fn pruned(&self, rel: f64) -> Self {
        let big = self.terms.iter().map(|(_, v)| v.abs()).fold(0.0, f64::max);
        Self {
            n: self.n,
            terms: self.terms.iter().filter(|(_, v)| v.abs() > rel * big).cloned().collect(),
        }
    }

    pub fn polynomial(&self) -> LaurentPoly<f64> {
        let mut p = LaurentPoly::zero(self.n);
        for (label, v) in &self.terms {
            p.axpy(*v, &monomial_symmetric(label).evaluate_beta(0.0));
        }
        p
    }

    /// Relative residual `|H1 p - lambda p| / |p|` at a numeric `beta`.
    pub fn residual(&self, op: &H1Operator, lambda: f64, beta: f64) -> Result<f64> {
        let mut hp = LaurentPoly::zero(self.n);
        for (label, v) in &self.terms {
            hp.axpy(*v, &op.apply_numeric(&monomial_symmetric(label), beta)?);
        }
        let p = self.polynomial();
        hp.axpy(-lambda, &p);
        Ok(hp.norm() / p.norm())
    }

    /// Relabels every orbit sum through `f`.
    pub fn map_labels<F: Fn(&[i32]) -> Vec<i32>>(&self, f: F) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(l, v)| (f(l), *v)).collect() }
    }

    pub fn parity_image(&self) -> Self {
        self.map_labels(|l| l.iter().map(|&k| -k).collect())
    }

    pub fn boosted(&self, q: i32) -> Self {
        self.map_labels(|l| l.iter().map(|&k| k + q).collect())
    }
}

/// Numeric counterpart of [`ParityCheck`] for pencil eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericParity {
    pub degree: i64,
    pub lambda: f64,
    /// Residual of `p(1/z)` at `lambda`.
    pub image_residual: f64,
    pub boost: i32,
    pub partner_degree: i64,
    pub partner_lambda: f64,
    /// Residual of the boosted image at the shifted eigenvalue.
    pub partner_residual: f64,
}

pub fn parity_partner_numeric(op: &H1Operator, v: &SymCombination, lambda: f64, beta: f64) -> Result<NumericParity> {
    let v = v.pruned(1e-13);
    let degree = v.degree();
    let image = v.parity_image();
    let s = v.terms.iter().flat_map(|(l, _)| l.iter().copied()).max().unwrap_or(0).max(0);
    let partner = image.boosted(s);
    let n = op.n() as i64;
    let partner_lambda = lambda + (2 * s as i64 * (-degree) + n * (s as i64) * (s as i64)) as f64;
    Ok(NumericParity {
        degree,
        lambda,
        image_residual: image.residual(op, lambda, beta)?,
        boost: s,
        partner_degree: degree_after(degree, s, n),
        partner_lambda,
        partner_residual: partner.residual(op, partner_lambda, beta)?,
    })
}

/// Numeric counterpart of [`BoostCheck`]: the boosted vector's residual at
/// both candidate shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericBoost {
    pub degree: i64,
    pub q: i32,
    pub lambda_base: f64,
    /// Rayleigh-quotient estimate of the boosted eigenvalue.
    pub lambda_boosted: f64,
    pub residual_operator: f64,
    pub residual_published: f64,
    pub matches: BoostFormula,
}

pub fn boost_shift_numeric(op: &H1Operator, v: &SymCombination, lambda: f64, q: i32, beta: f64, tol: f64) -> Result<NumericBoost> {
    let v = v.pruned(1e-13);
    let degree = v.degree();
    let boosted = v.boosted(q);
    let mut hp = LaurentPoly::zero(op.n());
    for (label, c) in &boosted.terms {
        hp.axpy(*c, &op.apply_numeric(&monomial_symmetric(label), beta)?);
    }
    let p = boosted.polynomial();
    let dot: f64 = p.iter().map(|(e, c)| c * hp.coefficient(e).copied().unwrap_or(0.0)).sum();
    let lambda_boosted = dot / (p.norm() * p.norm());
    let (op_shift, pub_shift) = boost_formulas(op.n() as i64, degree, q as i64);
    let residual_operator = boosted.residual(op, lambda + op_shift as f64, beta)?;
    let residual_published = boosted.residual(op, lambda + pub_shift as f64, beta)?;
    let certified = residual_operator.min(residual_published) < tol;
    let matches = if certified {
        classify_shift(lambda_boosted - lambda, op_shift, pub_shift, 1e-9)
    } else {
        BoostFormula::Neither
    };
    Ok(NumericBoost { degree, q, lambda_base: lambda, lambda_boosted, residual_operator, residual_published, matches })
}
