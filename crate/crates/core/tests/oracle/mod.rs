//! Test-only reference computations that avoid the crate's polynomial
//! machinery: plain Lagrange interpolation over rationals and the ML-degree
//! sum evaluated directly from ψ values.

#![allow(dead_code)]

use lascoux_core::ml_degree::{cardinalities, enumerate_index_sets};
use lascoux_core::{IndexSet, PsiSource, PsiTable, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn r(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Ascending coefficients of the Lagrange polynomial through `points`,
/// built as Σ y_k Π_{m≠k} (x - x_m)/(x_k - x_m).
pub fn lagrange_coeffs(points: &[(i64, Rational)]) -> Vec<Rational> {
    let len = points.len();
    let mut out = vec![Rational::zero(); len];
    for (k, (xk, yk)) in points.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (m, (xm, _)) in points.iter().enumerate() {
            if m == k {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (e, c) in basis.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * r(*xm);
            }
            basis = next;
            denom *= r(xk - xm);
        }
        let scale = yk / denom;
        for (e, c) in basis.iter().enumerate() {
            out[e] += c * &scale;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// φ(n, d) at a positive integer `n` straight from ψ values:
/// Σ_s (s/n) Σ_I ψ_I ψ_{[n] \ I}, with the term dropped when I ⊄ [n].
pub fn phi_from_psi(table: &mut PsiTable, n: u32, d: u32) -> Rational {
    let mut acc = Rational::zero();
    for s in cardinalities(d) {
        let mut inner = BigInt::zero();
        for set in enumerate_index_sets(s, d - s).members {
            if let Some(c) = set.complement_in(n) {
                let lp = if c.is_empty() {
                    BigInt::one()
                } else {
                    table.psi(&c).unwrap()
                };
                inner += table.psi(&set).unwrap() * lp;
            }
        }
        acc += Rational::new(inner * BigInt::from(s), BigInt::from(n));
    }
    acc
}

/// Coefficients of φ(·, d) interpolated from ψ-only values at n = d+1..=2d+2.
pub fn phi_coeffs_from_psi(table: &mut PsiTable, d: u32) -> Vec<Rational> {
    let pts: Vec<(i64, Rational)> = (d + 1..=2 * d + 2)
        .map(|n| (i64::from(n), phi_from_psi(table, n, d)))
        .collect();
    lagrange_coeffs(&pts)
}

pub fn set(v: &[u32]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}
