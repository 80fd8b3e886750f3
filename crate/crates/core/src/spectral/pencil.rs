//! Degree-graded pencil `A v = lambda E v`.
//!
//! For `1 < r < c` the drift only has the cyclic symmetry of the pair list,
//! so `H1` maps symmetric polynomials into cyclic-invariant ones rather than
//! back into the symmetric space. `A` holds the cyclic coordinates of `H1`
//! applied to each symmetric basis element and `E` embeds the symmetric
//! basis into the cyclic one; symmetric eigenvectors are the solutions of
//! the rectangular pencil.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use super::h1::H1Operator;
use crate::basis::{BasisKind, BasisSet};
use crate::error::{Error, Result};
use crate::poly::{ratio_to_f64, Coefficient, Rational};

/// Default certification threshold on the full-space residual.
pub const CERTIFY_TOL: f64 = 1e-10;
/// Candidates above this residual are clearly spurious; between the two
/// thresholds they are ambiguous.
pub const SPURIOUS_FLOOR: f64 = 1e-4;

#[derive(Debug, Clone)]
pub struct Pencil {
    pub degree: usize,
    pub sym: BasisSet,
    pub cyc: BasisSet,
    /// Beta-free part of `A`, `dim_cyc x dim_sym`, row-major.
    pub a_const: Vec<Vec<Rational>>,
    /// Coefficient of `beta` in `A`.
    pub a_beta: Vec<Vec<Rational>>,
    /// Embedding `E`, entries 0 or 1.
    pub embed: Vec<Vec<u8>>,
}

/// Builds the exact pencil of degree `d`.
pub fn build_pencil(op: &H1Operator, d: usize) -> Result<Pencil> {
    let n = op.n();
    let sym = BasisSet::new(BasisKind::Symmetric, n, d);
    let cyc = BasisSet::new(BasisKind::CyclicInvariant, n, d);
    let (rows, cols) = (cyc.len(), sym.len());
    let mut a_const = vec![vec![Rational::zero(); cols]; rows];
    let mut a_beta = vec![vec![Rational::zero(); cols]; rows];
    let mut embed = vec![vec![0u8; cols]; rows];
    for (j, elem) in sym.elements.iter().enumerate() {
        let image = cyc.project(&op.apply(elem)?);
        if !image.residual.is_zero() {
            return Err(Error::ProjectionResidual(format!(
                "H1 m_{:?} leaves the cyclic space: {}",
                sym.labels[j], image.residual
            )));
        }
        for (i, c) in image.coords.iter().enumerate() {
            a_const[i][j] = c.a;
            a_beta[i][j] = c.b;
        }
        let emb = cyc.project(elem);
        debug_assert!(emb.residual.is_zero());
        for (i, c) in emb.coords.iter().enumerate() {
            if !c.is_zero() {
                embed[i][j] = 1;
            }
        }
    }
    Ok(Pencil { degree: d, sym, cyc, a_const, a_beta, embed })
}

impl Pencil {
    pub fn dims(&self) -> (usize, usize) {
        (self.sym.len(), self.cyc.len())
    }

    pub fn a_at(&self, beta: f64) -> DMatrix<f64> {
        let (cols, rows) = self.dims();
        DMatrix::from_fn(rows, cols, |i, j| ratio_to_f64(&self.a_const[i][j]) + beta * ratio_to_f64(&self.a_beta[i][j]))
    }

    pub fn e_matrix(&self) -> DMatrix<f64> {
        let (cols, rows) = self.dims();
        DMatrix::from_fn(rows, cols, |i, j| self.embed[i][j] as f64)
    }

    /// Whether the image of every symmetric element is itself symmetric,
    /// i.e. `A = E B` for a square `B` (checked exactly, for all `beta`).
    pub fn is_square_reducible(&self) -> bool {
        let (cols, rows) = self.dims();
        // Each symmetric orbit splits into cyclic orbits; the coordinates of
        // a symmetric image are constant across the cyclic orbits it covers.
        for j in 0..cols {
            for k in 0..cols {
                let mut first: Option<(Rational, Rational)> = None;
                for i in 0..rows {
                    if self.embed[i][k] == 0 {
                        continue;
                    }
                    let v = (self.a_const[i][j], self.a_beta[i][j]);
                    match first {
                        None => first = Some(v),
                        Some(f) if f != v => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateClass {
    Certified,
    Spurious,
    Ambiguous,
}

/// One eigenvalue of the least-squares operator `E^+ A` and its residual in
/// the full cyclic space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub lambda: Complex64,
    pub residual: f64,
    pub class: CandidateClass,
}

/// A certified eigenvalue with a basis of its eigenvectors, given as
/// coordinates in the symmetric basis normalized to `|E v| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilLevel {
    pub lambda: f64,
    pub multiplicity: usize,
    /// Largest residual `|A v - lambda E v| / |E v|` over the vectors.
    pub residual: f64,
    pub vectors: Vec<Vec<f64>>,
}

#[derive(Debug, Clone)]
pub struct PencilSolution {
    pub beta: f64,
    pub levels: Vec<PencilLevel>,
    pub candidates: Vec<Candidate>,
}

impl PencilSolution {
    pub fn ambiguous(&self) -> usize {
        self.candidates.iter().filter(|c| c.class == CandidateClass::Ambiguous).count()
    }

    pub fn certified_count(&self) -> usize {
        self.levels.iter().map(|l| l.multiplicity).sum()
    }

    /// Level within `eps` of `lambda`.
    pub fn level_near(&self, lambda: f64, eps: f64) -> Option<&PencilLevel> {
        self.levels.iter().find(|l| (l.lambda - lambda).abs() <= eps * (1.0 + lambda.abs()))
    }
}

fn classify(residual: f64, tol: f64) -> CandidateClass {
    if residual < tol {
        CandidateClass::Certified
    } else if residual > SPURIOUS_FLOOR {
        CandidateClass::Spurious
    } else {
        CandidateClass::Ambiguous
    }
}

/// Singular values (ascending) and right singular vectors of the scaled
/// residual operator `(A - lambda E) W^-1` with `W = diag |E e_j|`.
fn scaled_svd(a: &DMatrix<f64>, e: &DMatrix<f64>, w: &[f64], lambda: f64) -> Vec<(f64, Vec<f64>)> {
    let mut m = a - e * lambda;
    for (j, &wj) in w.iter().enumerate() {
        m.column_mut(j).scale_mut(1.0 / wj);
    }
    let svd = m.svd(false, true);
    let vt = svd.v_t.expect("right singular vectors were requested");
    let mut out: Vec<(f64, Vec<f64>)> = svd
        .singular_values
        .iter()
        .enumerate()
        .map(|(k, &s)| (s, vt.row(k).iter().zip(w).map(|(x, wj)| x / wj).collect()))
        .collect();
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

fn rayleigh(a: &DMatrix<f64>, e: &DMatrix<f64>, v: &[f64]) -> f64 {
    let v = nalgebra::DVector::from_column_slice(v);
    let (av, ev) = (a * &v, e * &v);
    ev.dot(&av) / ev.dot(&ev)
}

/// Solves the pencil at a numeric `beta`.
///
/// Candidates are the eigenvalues of the square least-squares operator
/// `E^+ A`. Each real candidate cluster is refined and certified by the
/// smallest singular values of `(A - lambda E)` measured relative to `|E v|`
/// in the full cyclic space; only those below `tol` become levels.
pub fn solve_pencil(pencil: &Pencil, beta: f64, tol: f64) -> Result<PencilSolution> {
    let a = pencil.a_at(beta);
    let e = pencil.e_matrix();
    let cols = a.ncols();
    let w: Vec<f64> = (0..cols).map(|j| e.column(j).norm()).collect();
    if let Some(j) = w.iter().position(|&x| !(x >= 1.0)) {
        return Err(Error::RankDeficient(format!("embedding column {j} is empty")));
    }
    // E has orthogonal columns, so E^+ = diag(1/w^2) E^T.
    let mut b = e.transpose() * &a;
    for (i, &wi) in w.iter().enumerate() {
        b.row_mut(i).scale_mut(1.0 / (wi * wi));
    }
    let mut eig: Vec<Complex64> = b.complex_eigenvalues().iter().copied().collect();
    eig.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));

    let mut candidates = Vec::new();
    let mut levels = Vec::new();
    let mut i = 0;
    while i < eig.len() {
        let lam = eig[i];
        if lam.im.abs() > 1e-9 * (1.0 + lam.re.abs()) {
            let residual = scaled_svd(&a, &e, &w, lam.re)[0].0;
            candidates.push(Candidate { lambda: lam, residual, class: classify(residual, tol).min_spurious() });
            i += 1;
            continue;
        }
        let mut j = i + 1;
        while j < eig.len()
            && eig[j].im.abs() <= 1e-9 * (1.0 + eig[j].re.abs())
            && (eig[j].re - eig[j - 1].re).abs() <= 1e-7 * (1.0 + lam.re.abs())
        {
            j += 1;
        }
        let size = j - i;
        let mut lambda = eig[i..j].iter().map(|c| c.re).sum::<f64>() / size as f64;
        let mut sv = scaled_svd(&a, &e, &w, lambda);
        for _ in 0..2 {
            lambda = rayleigh(&a, &e, &sv[0].1);
            sv = scaled_svd(&a, &e, &w, lambda);
        }
        let certified: Vec<&(f64, Vec<f64>)> = sv.iter().take_while(|(s, _)| *s < tol).collect();
        if !certified.is_empty() {
            levels.push(PencilLevel {
                lambda,
                multiplicity: certified.len(),
                residual: certified.iter().map(|(s, _)| *s).fold(0.0, f64::max),
                vectors: certified.iter().map(|(_, v)| v.clone()).collect(),
            });
        }
        for k in 0..size {
            let residual = sv.get(k).map_or(f64::INFINITY, |x| x.0);
            candidates.push(Candidate {
                lambda: Complex64::new(lambda, 0.0),
                residual,
                class: classify(residual, tol),
            });
        }
        i = j;
    }
    Ok(PencilSolution { beta, levels, candidates })
}

impl CandidateClass {
    /// Complex candidates can never be certified as real eigenvalues.
    fn min_spurious(self) -> Self {
        match self {
            CandidateClass::Certified => CandidateClass::Ambiguous,
            other => other,
        }
    }
}
