mod oracle;

use lascoux_core::arith::{falling_factorial, lagrange_interpolate, pfaffian, SkewMatrix};
use lascoux_core::{Polynomial, PsiSource, PsiTable, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use oracle::r;
use proptest::prelude::*;

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone() * sign
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-20i64..20, 1i64..5), 0..max_len).prop_map(|cs| {
        Polynomial::from_coeffs(
            cs.into_iter()
                .map(|(p, q)| Rational::new(p.into(), q.into()))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn pfaffian_squares_to_determinant(half in 0usize..4, vals in prop::collection::vec(-9i64..10, 15)) {
        let dim = 2 * half;
        let mut it = vals.iter();
        let m = SkewMatrix::from_fn(dim, |_, _| r(*it.next().unwrap()));
        let full: Vec<Vec<BigInt>> = (0..dim)
            .map(|k| (0..dim).map(|l| m.entry(k, l).to_integer()).collect())
            .collect();
        let pf = pfaffian(&m);
        prop_assert_eq!(&pf * &pf, Rational::from_integer(bareiss_det(full)));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(6), b in poly_strategy(5)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn interpolation_reproduces_polynomials(p in poly_strategy(8), start in -5i64..5) {
        let len = p.degree().map_or(1, |d| d + 1) as i64;
        let pts: Vec<_> = (start..start + len).map(|x| (x, p.eval_int(x))).collect();
        prop_assert_eq!(lagrange_interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn falling_factorial_counts_arrangements(k in 0u32..8, extra in 0u32..8) {
        let m = k + extra;
        let value = falling_factorial(&Polynomial::var(), k).eval_int(m.into());
        let expected: BigInt = (m - k + 1..=m).map(BigInt::from).product();
        prop_assert_eq!(value, Rational::from_integer(expected));
    }

    #[test]
    fn psi_is_order_independent(sets in prop::collection::vec(prop::collection::btree_set(0u32..12, 1..5), 1..6)) {
        let sets: Vec<_> = sets.into_iter().map(|s| oracle::set(&s.into_iter().collect::<Vec<_>>())).collect();
        let mut forward = PsiTable::new();
        let a: Vec<_> = sets.iter().map(|s| forward.psi(s).unwrap()).collect();
        let mut backward = PsiTable::new();
        let mut b: Vec<_> = sets.iter().rev().map(|s| backward.psi(s).unwrap()).collect();
        b.reverse();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn psi_integrality_exhaustive() {
    // every set with elements ≤ 20 and at most 5 elements
    let mut table = PsiTable::new();
    let mut count = 0usize;
    for mask in 0u32..(1 << 21) {
        if mask.count_ones() > 5 || mask == 0 {
            continue;
        }
        let elems: Vec<u32> = (0..21).filter(|i| mask >> i & 1 == 1).collect();
        table.psi(&oracle::set(&elems)).expect("integral");
        count += 1;
    }
    assert_eq!(count, 21 + 210 + 1330 + 5985 + 20349);
    assert!(table.non_positive().is_empty());
}

#[test]
fn psi_is_deterministic_across_threads() {
    let sets: Vec<_> = [vec![0, 3, 7, 9], vec![2, 4, 5, 11, 13], vec![1, 6, 10]]
        .iter()
        .map(|v| oracle::set(v))
        .collect();
    let mut cold = PsiTable::new();
    let expected: Vec<_> = sets.iter().map(|s| cold.psi(s).unwrap()).collect();
    let warm: Vec<_> = sets.iter().map(|s| cold.psi(s).unwrap()).collect();
    assert_eq!(expected, warm);
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let sets = sets.clone();
            std::thread::spawn(move || {
                let mut t = PsiTable::new();
                sets.iter().map(|s| t.psi(s).unwrap()).collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), expected);
    }
}
