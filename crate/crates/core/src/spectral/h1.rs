use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::{ModelParams, PairList};
use crate::poly::{Coeff, Coefficient, Exponent, LaurentPoly, Rational};

/// The similarity-transformed operator acting on the symmetric factor,
///
/// `H1 = sum_j D_j^2 + beta sum_{(a,b)} (z_a + z_b)/(z_a - z_b) (D_a - D_b)`,
///
/// with the sum over interacting pairs. Eigenvalues are in reduced units.
#[derive(Debug, Clone)]
pub struct H1Operator {
    pub params: ModelParams,
    pub drift_pairs: Vec<(usize, usize)>,
}

impl H1Operator {
    pub fn new(params: &ModelParams) -> Self {
        Self {
            params: params.clone(),
            drift_pairs: PairList::new(params).pairs,
        }
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    /// `sum_j D_j^2 p`.
    pub fn kinetic<C: Coefficient>(&self, p: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(p.nvars());
        for (e, c) in p.iter() {
            let w: i64 = e.0.iter().map(|&k| (k as i64) * (k as i64)).sum();
            out.add_term(e.clone(), c.mul_int(w));
        }
        out
    }

    /// The drift sum without its `beta` prefactor. Each pair term is an exact
    /// division; a non-zero remainder means `p` is outside the domain.
    pub fn drift(&self, p: &LaurentPoly<Coeff>) -> Result<LaurentPoly<Coeff>> {
        let n = p.nvars();
        let mut out = LaurentPoly::zero(n);
        for &(a, b) in &self.drift_pairs {
            let t = p.apply_d_diff(a, b);
            if t.is_zero() {
                continue;
            }
            let num = t.shift(&Exponent::unit(n, a)).add(&t.shift(&Exponent::unit(n, b)));
            out = out.add(&num.exact_divide(a, b)?);
        }
        Ok(out)
    }

    /// Exact `H1 p` with `beta` kept symbolic; `p` must be beta-free.
    pub fn apply(&self, p: &LaurentPoly<Coeff>) -> Result<LaurentPoly<Coeff>> {
        if p.nvars() != self.n() {
            return Err(Error::ParameterDomain(format!(
                "polynomial has {} variables, operator acts on {}",
                p.nvars(),
                self.n()
            )));
        }
        Ok(self.kinetic(p).add(&self.drift(p)?.times_beta()?))
    }

    /// `H1 p` evaluated at a numeric `beta`.
    pub fn apply_numeric(&self, p: &LaurentPoly<Coeff>, beta: f64) -> Result<LaurentPoly<f64>> {
        Ok(self.apply(p)?.evaluate_beta(beta))
    }
}

/// If `p` is an eigenvector of `H1`, its eigenvalue.
///
/// With `beta = Some(q)` both `H1 p` and `p` are compared after substituting
/// `beta = q`; otherwise the identity must hold for all `beta`. `p` must be
/// beta-free.
pub fn exact_eigenvalue(op: &H1Operator, p: &LaurentPoly<Coeff>, beta: Option<Rational>) -> Result<Option<Coeff>> {
    if !p.is_beta_free() {
        return Err(Error::ParameterDomain("eigenvector candidates must have beta-free coefficients".into()));
    }
    let Some((lead, c)) = p.leading() else {
        return Err(Error::ParameterDomain("the zero polynomial has no eigenvalue".into()));
    };
    let mut image = op.apply(p)?;
    if let Some(b) = beta {
        image = image.substitute(b);
    }
    let lambda = image.coefficient(lead).copied().unwrap_or_else(Coeff::zero).div_rational(c.a);
    Ok((image == p.scale(&lambda)?).then_some(lambda))
}
