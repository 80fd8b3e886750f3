//! Sparse multivariate Laurent polynomials in `z_1..z_n`.
//!
//! The default coefficient ring is [`Coeff`], an exact form `a + b beta`
//! with rational `a`, `b`. Floating coefficients (`f64`) are supported for
//! numerically combined polynomials.
//!
//! Canonical text form: terms in descending graded-lexicographic order
//! joined by `" + "`, each term `(a+b*B)` optionally followed by
//! `*z1^2*z3` style factors (1-based variables, `^1` omitted, negative
//! exponents written `^-2`). The zero polynomial is `0`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rationals used for coefficients.
pub type Rational = Ratio<i128>;

/// Exact conversion of a finite `f64` into a rational, if the denominator fits.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some(Rational::zero());
    }
    let bits = x.to_bits();
    let sign: i128 = if bits >> 63 == 0 { 1 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i128;
    let (mantissa, e) = if exp == 0 { (frac, -1074) } else { (frac | (1i128 << 52), exp - 1075) };
    if e >= 0 {
        if e > 70 {
            return None;
        }
        Some(Rational::from_integer(sign * (mantissa << e)))
    } else {
        let tz = mantissa.trailing_zeros() as i32;
        let shift = -e;
        let cancel = tz.min(shift);
        let (m, s) = (mantissa >> cancel, shift - cancel);
        if s > 125 {
            return None;
        }
        Some(Rational::new(sign * m, 1i128 << s))
    }
}

/// Exponent vector of a Laurent monomial.
///
/// Ordered graded-lexicographically: total degree first, then entries from
/// the first variable on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(pub Vec<i32>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Exponent(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&v| v as i64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ring operations a polynomial coefficient has to provide.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
    fn try_mul(&self, other: &Self) -> Result<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Coefficient for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: i64) -> Self {
        self * k as f64
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
}

/// Exact coefficient `a + b beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coeff {
    pub a: Rational,
    pub b: Rational,
}

impl Coeff {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn int(a: i64) -> Self {
        Self { a: Rational::from_integer(a as i128), b: Rational::zero() }
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    /// `a + b beta` from integers.
    pub fn linear(a: i64, b: i64) -> Self {
        Self {
            a: Rational::from_integer(a as i128),
            b: Rational::from_integer(b as i128),
        }
    }

    pub fn is_beta_free(&self) -> bool {
        self.b.is_zero()
    }

    /// Multiplies by `beta`; only a beta-free coefficient can be lifted.
    pub fn times_beta(&self) -> Result<Self> {
        if !self.is_beta_free() {
            return Err(Error::CoefficientOverflow);
        }
        Ok(Self { a: Rational::zero(), b: self.a })
    }

    pub fn at(&self, beta: Rational) -> Rational {
        self.a + self.b * beta
    }

    pub fn eval(&self, beta: f64) -> f64 {
        ratio_to_f64(&self.a) + ratio_to_f64(&self.b) * beta
    }

    /// Exact quotient by a beta-free coefficient.
    pub fn div_rational(&self, d: Rational) -> Self {
        Self { a: self.a / d, b: self.b / d }
    }
}

pub fn ratio_to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

impl Coefficient for Coeff {
    fn zero() -> Self {
        Self { a: Rational::zero(), b: Rational::zero() }
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self { a: self.a + other.a, b: self.b + other.b }
    }
    fn neg(&self) -> Self {
        Self { a: -self.a, b: -self.b }
    }
    fn mul_int(&self, k: i64) -> Self {
        let k = Rational::from_integer(k as i128);
        Self { a: self.a * k, b: self.b * k }
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.b.is_zero() && !other.b.is_zero() {
            return Err(Error::CoefficientOverflow);
        }
        Ok(Self {
            a: self.a * other.a,
            b: self.a * other.b + self.b * other.a,
        })
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}*B", fmt_rational(&self.a), sign, fmt_rational(&self.b.abs()))
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.parse().map_err(|_| bad())?;
            let d: i128 = d.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Coeff {
    type Err = Error;

    /// Parses `a+b*B` or `a-b*B`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_suffix("*B")
            .ok_or_else(|| Error::Parse(format!("coefficient {s:?} must end in *B")))?;
        // The split sign is the last '+' or '-' that is not the leading sign.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .last()
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse(format!("coefficient {s:?} lacks a beta part")))?;
        let a = parse_rational(&body[..split])?;
        let b = parse_rational(&body[split + 1..])?;
        let b = if &body[split..split + 1] == "-" { -b } else { b };
        Ok(Coeff { a, b })
    }
}

/// Homogeneity of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    /// The zero polynomial.
    Zero,
    Homogeneous(i64),
    Mixed,
}

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<C: Coefficient = Coeff> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(Exponent::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn monomial(exp: Exponent, c: C) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The variable `z_j` (0-based).
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(Exponent::unit(nvars, j), C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Option<&C> {
        self.terms.get(e)
    }

    pub fn leading(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exp: Exponent, c: C) {
        assert_eq!(exp.len(), self.nvars, "exponent length must match the variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(cur) => {
                let sum = cur.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *cur = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.try_mul(s)?);
        }
        Ok(out)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.map_coefficients(|c| c.mul_int(k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1.try_mul(c2)?);
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &Exponent) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect(),
        }
    }

    pub fn map_coefficients<F: FnMut(&C) -> C>(&self, mut f: F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Applies an exponent map that is a bijection on monomials.
    pub fn map_exponents<F: FnMut(&Exponent) -> Exponent>(&self, mut f: F) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect(),
        }
    }

    pub fn degree(&self) -> Degree {
        let mut it = self.terms.keys().map(Exponent::degree);
        let Some(first) = it.next() else {
            return Degree::Zero;
        };
        if it.all(|d| d == first) {
            Degree::Homogeneous(first)
        } else {
            Degree::Mixed
        }
    }

    /// Euler operator `D_j = z_j d/dz_j`.
    pub fn apply_d(&self, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul_int(e.0[j] as i64));
        }
        out
    }

    /// `(D_a - D_b) p`.
    pub fn apply_d_diff(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul_int((e.0[a] - e.0[b]) as i64));
        }
        out
    }

    /// Quotient and remainder of division by `z_a - z_b` as a polynomial in
    /// `z_a`. The remainder is free of `z_a` beyond the lowest power present.
    pub fn divide_linear(&self, a: usize, b: usize) -> (Self, Self) {
        assert_ne!(a, b);
        let mut slices: BTreeMap<i32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest.0[a];
            rest.0[a] = 0;
            slices.entry(k).or_insert_with(|| Self::zero(self.nvars)).add_term(rest, c.clone());
        }
        let mut quotient = Self::zero(self.nvars);
        let Some((&lo, _)) = slices.iter().next() else {
            return (quotient, Self::zero(self.nvars));
        };
        let hi = *slices.keys().next_back().unwrap();
        let zb = Exponent::unit(self.nvars, b);
        let mut carry = Self::zero(self.nvars);
        let mut remainder = Self::zero(self.nvars);
        for k in (lo..=hi).rev() {
            let mut cur = carry.shift(&zb);
            if let Some(slice) = slices.get(&k) {
                cur = cur.add(slice);
            }
            if k == lo {
                remainder = cur;
                break;
            }
            let mut ea = Exponent::zero(self.nvars);
            ea.0[a] = k - 1;
            quotient = quotient.add(&cur.shift(&ea));
            carry = cur;
        }
        let mut ea = Exponent::zero(self.nvars);
        ea.0[a] = lo;
        (quotient, remainder.shift(&ea))
    }
}

impl LaurentPoly<Coeff> {
    /// Exact quotient by `z_a - z_b`.
    pub fn exact_divide(&self, a: usize, b: usize) -> Result<Self> {
        let (q, r) = self.divide_linear(a, b);
        if !r.is_zero() {
            return Err(Error::NotDivisible { a: a + 1, b: b + 1, remainder: r.to_string() });
        }
        Ok(q)
    }

    pub fn is_beta_free(&self) -> bool {
        self.terms.values().all(Coeff::is_beta_free)
    }

    /// Substitutes an exact value of `beta`; the result is beta-free.
    pub fn substitute(&self, beta: Rational) -> Self {
        self.map_coefficients(|c| Coeff::rational(c.at(beta)))
    }

    /// Evaluates every coefficient at a numeric `beta`.
    pub fn evaluate_beta(&self, beta: f64) -> LaurentPoly<f64> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.eval(beta));
        }
        out
    }

    /// Multiplies every coefficient by `beta`.
    pub fn times_beta(&self) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.times_beta()?);
        }
        Ok(out)
    }

    /// Numeric value at the point `z`, for a numeric `beta`.
    pub fn evaluate_at(&self, z: &[num_complex::Complex64], beta: f64) -> num_complex::Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let m: num_complex::Complex64 = z.iter().zip(&e.0).map(|(zj, &k)| zj.powi(k)).product();
                m * c.eval(beta)
            })
            .sum()
    }
}

impl LaurentPoly<f64> {
    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.terms.values().map(|c| c * c).sum())
    }

    /// Adds `s * other` in place.
    pub fn axpy(&mut self, s: f64, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), s * c);
        }
    }
}

impl fmt::Display for LaurentPoly<Coeff> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (j, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*z{}", j + 1)?,
                    _ => write!(f, "*z{}^{}", j + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl LaurentPoly<Coeff> {
    /// Parses the canonical text form for a polynomial in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let s = s.trim();
        let mut p = Self::zero(nvars);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let term = term.trim();
            let rest = term
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("term {term:?} must start with '('")))?;
            let close = rest.find(')').ok_or_else(|| Error::Parse(format!("unclosed term {term:?}")))?;
            let c: Coeff = rest[..close].parse()?;
            let mut e = Exponent::zero(nvars);
            for factor in rest[close + 1..].split('*').filter(|f| !f.is_empty()) {
                let factor = factor
                    .strip_prefix('z')
                    .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
                let (var, pow) = match factor.split_once('^') {
                    Some((v, k)) => (v, k.parse::<i32>().map_err(|_| Error::Parse(format!("bad power in {factor:?}")))?),
                    None => (factor, 1),
                };
                let var: usize = var.parse().map_err(|_| Error::Parse(format!("bad variable {var:?}")))?;
                if var == 0 || var > nvars {
                    return Err(Error::Parse(format!("variable z{var} outside 1..={nvars}")));
                }
                e.0[var - 1] += pow;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Elementary symmetric polynomial `e_k(z_1..z_n)` with unit coefficients.
pub fn elementary_symmetric(k: usize, n: usize) -> Result<LaurentPoly<Coeff>> {
    if k > n {
        return Err(Error::ParameterDomain(format!("e_{k} needs k <= n = {n}")));
    }
    let mut p = LaurentPoly::zero(n);
    for s in subsets(n, k) {
        let mut e = Exponent::zero(n);
        for j in s {
            e.0[j] = 1;
        }
        p.add_term(e, Coeff::int(1));
    }
    Ok(p)
}

/// Power sum `p_k = sum_j z_j^k`.
pub fn power_sum(k: i32, n: usize) -> LaurentPoly<Coeff> {
    let mut p = LaurentPoly::zero(n);
    for j in 0..n {
        let mut e = Exponent::zero(n);
        e.0[j] = k;
        p.add_term(e, Coeff::int(1));
    }
    p
}

/// `1 / x` for a non-zero rational.
pub fn recip(x: Rational) -> Rational {
    Rational::one() / x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, j: usize) -> LaurentPoly {
        LaurentPoly::var(n, j)
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (z(2, 0), z(2, 1));
        let prod = a.add(&b).mul(&a.sub(&b)).unwrap();
        let want = a.mul(&a).unwrap().sub(&b.mul(&b).unwrap());
        assert_eq!(prod, want);
        assert_eq!(prod.to_string(), "(1+0*B)*z1^2 + (-1+0*B)*z2^2");
    }

    #[test]
    fn beta_terms_cancel() {
        let beta = Coeff::linear(0, 1);
        let p = z(2, 0).scale(&beta).unwrap();
        let q = z(2, 0).scale(&beta.neg()).unwrap();
        assert!(p.add(&q).is_zero());
    }

    #[test]
    fn beta_squared_is_rejected() {
        let beta = Coeff::linear(0, 1);
        let p = z(2, 0).scale(&beta).unwrap();
        assert_eq!(p.mul(&p), Err(Error::CoefficientOverflow));
        assert_eq!(p.times_beta(), Err(Error::CoefficientOverflow));
    }

    #[test]
    fn euler_operator() {
        let p = LaurentPoly::monomial(Exponent(vec![3, 1]), Coeff::int(1));
        assert_eq!(p.apply_d(0), p.mul_int(3));
        let en = elementary_symmetric(4, 4).unwrap();
        for j in 0..4 {
            assert_eq!(en.apply_d(j), en);
        }
    }

    #[test]
    fn exact_division() {
        let (a, b) = (z(3, 0), z(3, 1));
        let p = a.mul(&a).unwrap().sub(&b.mul(&b).unwrap());
        assert_eq!(p.exact_divide(0, 1).unwrap(), a.add(&b));
        let e2 = elementary_symmetric(2, 3).unwrap();
        assert!(e2.apply_d_diff(0, 1).exact_divide(0, 1).is_ok());
        let bad = z(3, 0).sub(&z(3, 2));
        assert!(matches!(bad.exact_divide(0, 1), Err(Error::NotDivisible { a: 1, b: 2, .. })));
    }

    #[test]
    fn laurent_division() {
        // (z1^-1 - z2^-1) = -(z1 - z2) / (z1 z2)
        let n = 2;
        let p = LaurentPoly::from_terms(n, [(Exponent(vec![-1, 0]), Coeff::int(1)), (Exponent(vec![0, -1]), Coeff::int(-1))]);
        let q = p.exact_divide(0, 1).unwrap();
        assert_eq!(q, LaurentPoly::monomial(Exponent(vec![-1, -1]), Coeff::int(-1)));
    }

    #[test]
    fn elementary_counts() {
        assert_eq!(elementary_symmetric(0, 5).unwrap(), LaurentPoly::one(5));
        assert_eq!(elementary_symmetric(2, 4).unwrap().len(), 6);
        let e5 = elementary_symmetric(5, 5).unwrap();
        assert_eq!(e5.len(), 1);
        assert_eq!(e5.to_string(), "(1+0*B)*z1*z2*z3*z4*z5");
        assert!(elementary_symmetric(6, 5).is_err());
    }

    #[test]
    fn text_round_trip() {
        let s = "(1/2-3*B)*z1^2*z3^-1 + (-4+0*B)*z2 + (0+1*B)";
        let p = LaurentPoly::parse(s, 3).unwrap();
        assert_eq!(p.to_string(), s);
        assert!(LaurentPoly::parse("(1+0*B)*z4", 3).is_err());
        assert!(LaurentPoly::parse("1*z1", 3).is_err());
        assert_eq!(LaurentPoly::parse("0", 3).unwrap(), LaurentPoly::zero(3));
    }

    #[test]
    fn dyadic_rationals() {
        assert_eq!(rational_from_f64(2.5), Some(Rational::new(5, 2)));
        assert_eq!(rational_from_f64(-0.125), Some(Rational::new(-1, 8)));
        assert_eq!(rational_from_f64(3.0), Some(Rational::from_integer(3)));
        assert_eq!(rational_from_f64(f64::NAN), None);
        let third = rational_from_f64(1.0 / 3.0).unwrap();
        assert_eq!(ratio_to_f64(&third), 1.0 / 3.0);
    }
}
