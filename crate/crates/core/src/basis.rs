//! Symmetric and cyclic-invariant orbit-sum bases of homogeneous polynomials.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::poly::{Coeff, Coefficient, Exponent, LaurentPoly};

/// Partitions of `d` into at most `max_parts` parts, parts in descending
/// order, listed in reverse lexicographic order (`[d]` first).
pub fn partitions(d: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=cap.min(rem)).rev() {
            cur.push(part);
            rec(rem - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Lexicographically largest rotation of `e`.
pub fn cyclic_canonical(e: &[i32]) -> Vec<i32> {
    let n = e.len();
    (0..n.max(1))
        .map(|s| (0..n).map(|j| e[(j + s) % n]).collect::<Vec<i32>>())
        .max()
        .unwrap_or_default()
}

/// Entries sorted in descending order.
pub fn symmetric_canonical(e: &[i32]) -> Vec<i32> {
    let mut v = e.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Distinct permutations of `v`, starting from its ascending arrangement.
pub fn distinct_permutations(v: &[i32]) -> Vec<Vec<i32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Monomial symmetric function: the sum of `z^e` over the distinct
/// permutations of `label` (entries may be negative).
pub fn monomial_symmetric(label: &[i32]) -> LaurentPoly<Coeff> {
    LaurentPoly::from_terms(
        label.len(),
        distinct_permutations(label).into_iter().map(|e| (Exponent(e), Coeff::int(1))),
    )
}

/// Sum of `z^e` over the distinct rotations of `label`.
pub fn cyclic_orbit_sum(label: &[i32]) -> LaurentPoly<Coeff> {
    let n = label.len();
    let mut p = LaurentPoly::zero(n);
    let mut seen = Vec::new();
    for s in 0..n {
        let e: Vec<i32> = (0..n).map(|j| label[(j + n - s) % n]).collect();
        if !seen.contains(&e) {
            seen.push(e.clone());
            p.add_term(Exponent(e), Coeff::int(1));
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Full permutation orbits, indexed by partitions.
    Symmetric,
    /// Rotation orbits, indexed by canonical rotations.
    CyclicInvariant,
}

/// Orbit-sum basis of the degree-`d` homogeneous polynomials in `n`
/// variables that are invariant under the chosen group.
#[derive(Debug, Clone)]
pub struct BasisSet {
    pub kind: BasisKind,
    pub n: usize,
    pub degree: usize,
    /// Canonical representative of each orbit.
    pub labels: Vec<Vec<i32>>,
    pub elements: Vec<LaurentPoly<Coeff>>,
    index: BTreeMap<Vec<i32>, usize>,
}

impl BasisSet {
    pub fn new(kind: BasisKind, n: usize, degree: usize) -> Self {
        let labels: Vec<Vec<i32>> = match kind {
            BasisKind::Symmetric => partitions(degree, n)
                .into_iter()
                .map(|p| {
                    let mut v: Vec<i32> = p.into_iter().map(|x| x as i32).collect();
                    v.resize(n, 0);
                    v
                })
                .collect(),
            BasisKind::CyclicInvariant => {
                let mut out = Vec::new();
                compositions(degree, n, &mut Vec::new(), &mut |e| {
                    if cyclic_canonical(e) == e {
                        out.push(e.to_vec());
                    }
                });
                out.sort_by(|a, b| b.cmp(a));
                out
            }
        };
        let elements = labels
            .iter()
            .map(|l| match kind {
                BasisKind::Symmetric => monomial_symmetric(l),
                BasisKind::CyclicInvariant => cyclic_orbit_sum(l),
            })
            .collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Self { kind, n, degree, labels, elements, index }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Index of the orbit containing the monomial `e`, if it belongs to this basis.
    pub fn orbit_of(&self, e: &[i32]) -> Option<usize> {
        if e.len() != self.n || e.iter().any(|&v| v < 0) || e.iter().map(|&v| v as i64).sum::<i64>() != self.degree as i64 {
            return None;
        }
        let canon = match self.kind {
            BasisKind::Symmetric => symmetric_canonical(e),
            BasisKind::CyclicInvariant => cyclic_canonical(e),
        };
        self.index.get(&canon).copied()
    }

    /// Expresses `p` in this basis. Coordinates are read off the canonical
    /// representative of each orbit; the residual is `p` minus their span
    /// image and vanishes exactly when `p` lies in the span.
    pub fn project<C: Coefficient>(&self, p: &LaurentPoly<C>) -> Projection<C> {
        let mut coords = vec![C::zero(); self.len()];
        for (i, label) in self.labels.iter().enumerate() {
            if let Some(c) = p.coefficient(&Exponent(label.clone())) {
                coords[i] = c.clone();
            }
        }
        let mut residual = p.clone();
        for (c, elem) in coords.iter().zip(&self.elements) {
            if c.is_zero() {
                continue;
            }
            for (e, _) in elem.iter() {
                residual.add_term(e.clone(), c.neg());
            }
        }
        Projection { coords, residual }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Projection<C: Coefficient> {
    pub coords: Vec<C>,
    pub residual: LaurentPoly<C>,
}

fn compositions(d: usize, slots: usize, cur: &mut Vec<i32>, f: &mut dyn FnMut(&[i32])) {
    if slots == 1 {
        cur.push(d as i32);
        f(cur);
        cur.pop();
        return;
    }
    for first in (0..=d).rev() {
        cur.push(first as i32);
        compositions(d - first, slots - 1, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::elementary_symmetric;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(2, 3), vec![vec![2], vec![1, 1]]);
        assert_eq!(partitions(6, 6).len(), 11);
        assert_eq!(partitions(8, 8).len(), 22);
        assert_eq!(partitions(6, 2).len(), 4);
        assert_eq!(partitions(0, 3), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(BasisSet::new(BasisKind::Symmetric, 3, 2).len(), 2);
        let cyc = BasisSet::new(BasisKind::CyclicInvariant, 6, 1);
        assert_eq!(cyc.len(), 1);
        assert_eq!(cyc.elements[0], elementary_symmetric(1, 6).unwrap());
        // Brute-force orbit count over all 35 compositions.
        let c44 = BasisSet::new(BasisKind::CyclicInvariant, 4, 4);
        let mut all = Vec::new();
        compositions(4, 4, &mut Vec::new(), &mut |e| all.push(cyclic_canonical(e)));
        all.sort();
        all.dedup();
        assert_eq!(c44.len(), all.len());
    }

    #[test]
    fn project_square_of_e1() {
        let e1 = elementary_symmetric(1, 3).unwrap();
        let sq = e1.mul(&e1).unwrap();
        let basis = BasisSet::new(BasisKind::Symmetric, 3, 2);
        let proj = basis.project(&sq);
        assert!(proj.residual.is_zero());
        assert_eq!(proj.coords, vec![Coeff::int(1), Coeff::int(2)]);
    }

    #[test]
    fn projection_reports_residual() {
        let basis = BasisSet::new(BasisKind::Symmetric, 3, 1);
        let p = LaurentPoly::<Coeff>::var(3, 0);
        let proj = basis.project(&p);
        // z1 is the canonical representative, so the residual is -(z2 + z3).
        assert_eq!(proj.coords, vec![Coeff::int(1)]);
        let want = LaurentPoly::<Coeff>::var(3, 1).add(&LaurentPoly::var(3, 2)).neg();
        assert_eq!(proj.residual, want);
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 1, 0]).len(), 12);
        assert_eq!(monomial_symmetric(&[1, -1, 0]).len(), 6);
    }
}
