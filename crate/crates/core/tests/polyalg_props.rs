use proptest::prelude::*;
use tcs_core::basis::{BasisKind, BasisSet};
use tcs_core::poly::{elementary_symmetric, power_sum, Coeff, Degree, Exponent, LaurentPoly, Rational};

const NVARS: usize = 3;

fn coeff(beta_free: bool) -> impl Strategy<Value = Coeff> {
    let b_range = if beta_free { 0..=0i64 } else { -3..=3i64 };
    (-4..=4i64, 1..=3i64, b_range).prop_map(|(a, den, b)| Coeff::new(Rational::new(a as i128, den as i128), Rational::from_integer(b as i128)))
}

fn poly(beta_free: bool) -> impl Strategy<Value = LaurentPoly<Coeff>> {
    prop::collection::vec((prop::collection::vec(-2..=3i32, NVARS), coeff(beta_free)), 0..6)
        .prop_map(|terms| LaurentPoly::from_terms(NVARS, terms.into_iter().map(|(e, c)| (Exponent(e), c))))
}

/// Homogeneous of degree `d`: the last exponent absorbs the difference.
fn homogeneous(d: i32) -> impl Strategy<Value = LaurentPoly<Coeff>> {
    prop::collection::vec((prop::collection::vec(-2..=3i32, NVARS - 1), coeff(false)), 1..6).prop_map(move |terms| {
        LaurentPoly::from_terms(
            NVARS,
            terms.into_iter().map(|(mut e, c)| {
                let s: i32 = e.iter().sum();
                e.push(d - s);
                (Exponent(e), c)
            }),
        )
    })
}

fn linear_factor(a: usize, b: usize) -> LaurentPoly<Coeff> {
    LaurentPoly::var(NVARS, a).sub(&LaurentPoly::var(NVARS, b))
}

proptest! {
    #[test]
    fn multiplication_is_associative(p in poly(true), q in poly(true), s in poly(false)) {
        let left = p.mul(&q).unwrap().mul(&s).unwrap();
        let right = p.mul(&q.mul(&s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(p in poly(true), q in poly(false), s in poly(false)) {
        prop_assert_eq!(p.mul(&q.add(&s)).unwrap(), p.mul(&q).unwrap().add(&p.mul(&s).unwrap()));
    }

    #[test]
    fn addition_is_commutative_with_inverse(p in poly(false), q in poly(false)) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn divide_undoes_multiply(p in poly(false), a in 0..NVARS, off in 1..NVARS) {
        let b = (a + off) % NVARS;
        let product = linear_factor(a, b).mul(&p).unwrap();
        prop_assert_eq!(product.exact_divide(a, b).unwrap(), p);
    }

    #[test]
    fn euler_identity(d in -3..=5i32, p in homogeneous(0)) {
        let p = p.shift(&Exponent(vec![d, 0, 0]));
        prop_assume!(!p.is_zero());
        prop_assert_eq!(p.degree(), Degree::Homogeneous(d as i64));
        let mut sum = LaurentPoly::zero(NVARS);
        for j in 0..NVARS {
            sum = sum.add(&p.apply_d(j));
        }
        prop_assert_eq!(sum, p.mul_int(d as i64));
    }

    #[test]
    fn text_form_round_trips(p in poly(false)) {
        let text = p.to_string();
        prop_assert_eq!(LaurentPoly::parse(&text, NVARS).unwrap(), p);
    }

    #[test]
    fn beta_substitution_is_a_ring_map(p in poly(true), q in poly(false), num in -5..=5i128, den in 1..=4i128) {
        let beta = Rational::new(num, den);
        prop_assert_eq!(p.mul(&q).unwrap().substitute(beta), p.substitute(beta).mul(&q.substitute(beta)).unwrap());
    }
}

#[test]
fn beta_squared_is_rejected() {
    let p = LaurentPoly::monomial(Exponent(vec![1, 0, 0]), Coeff::linear(0, 1));
    assert!(p.mul(&p).is_err());
}

#[test]
fn pruned_beta_terms() {
    let z1 = LaurentPoly::monomial(Exponent(vec![1, 0, 0]), Coeff::linear(0, 1));
    assert!(z1.add(&z1.neg()).is_zero());
}

#[test]
fn non_divisible_reports_remainder() {
    let p = linear_factor(0, 2);
    assert!(p.exact_divide(0, 1).is_err());
}

#[test]
fn newton_identities() {
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    for n in 1..=8 {
        for k in 1..=n {
            let mut rhs = LaurentPoly::<Coeff>::zero(n);
            for i in 1..=k {
                let term = elementary_symmetric(k - i, n).unwrap().mul(&power_sum(i as i32, n)).unwrap();
                rhs = if i % 2 == 1 { rhs.add(&term) } else { rhs.sub(&term) };
            }
            assert_eq!(rhs, elementary_symmetric(k, n).unwrap().mul_int(k as i64), "n={n} k={k}");
        }
    }
}

#[test]
fn elementary_term_counts() {
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for n in 1..=8 {
        for k in 0..=n {
            assert_eq!(elementary_symmetric(k, n).unwrap().len(), binom(n, k));
        }
    }
    assert!(elementary_symmetric(5, 4).is_err());
}

#[test]
fn e2_times_e1_matches_brute_force() {
    let n = 3;
    let e1 = elementary_symmetric(1, n).unwrap();
    let e2 = elementary_symmetric(2, n).unwrap();
    let mut want = LaurentPoly::<Coeff>::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                want.add_term(Exponent(e), Coeff::int(1));
            }
        }
    }
    assert_eq!(e2.mul(&e1).unwrap(), want);
}

#[test]
fn symmetric_basis_elements_are_independent_orbits() {
    // Distinct orbit sums share no monomial, so independence reduces to
    // disjoint supports.
    for kind in [BasisKind::Symmetric, BasisKind::CyclicInvariant] {
        for n in 2..=5 {
            for d in 0..=5 {
                let basis = BasisSet::new(kind, n, d);
                let mut seen = std::collections::BTreeSet::new();
                for elem in &basis.elements {
                    for (e, _) in elem.iter() {
                        assert!(seen.insert(e.clone()), "{kind:?} n={n} d={d}");
                    }
                }
                let total = (0..n - 1).fold(1usize, |acc, i| acc * (d + n - 1 - i) / (i + 1));
                if kind == BasisKind::CyclicInvariant {
                    // Every composition of d lies in exactly one rotation orbit.
                    assert_eq!(seen.len(), total, "n={n} d={d}");
                }
            }
        }
    }
}
