//! ML-degree polynomials
//!
//! ```text
//! φ(n, d) = Σ_{s ≥ 1, s(s+1)/2 ≤ d} s · (Σ_{|I| = s, ΣI = d-s} ψ_I LP_I(n)) / n
//! ```

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{pow2, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::identities::mc;
use crate::index_set::IndexSet;
use crate::lascoux::{lp_poly, lp_singleton_poly, ClosedForms, Route};
use crate::psi::PsiSource;

/// All index sets of a fixed cardinality and element sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSetFamily {
    pub s: u32,
    pub total: u32,
    pub members: Vec<IndexSet>,
}

/// Partitions of `total` into exactly `s` distinct non-negative parts, each as
/// an increasing [`IndexSet`], in lexicographic order.
pub fn enumerate_index_sets(s: u32, total: u32) -> IndexSetFamily {
    fn go(remaining: u32, total: u32, low: u32, prefix: &mut Vec<u32>, out: &mut Vec<IndexSet>) {
        if remaining == 0 {
            if total == 0 {
                out.push(IndexSet::from_sorted_unchecked(prefix.clone()));
            }
            return;
        }
        // the smallest completion from `a` is a + (a+1) + ... + (a+remaining-1)
        let tail = remaining * (remaining - 1) / 2;
        let mut a = low;
        while u64::from(a) * u64::from(remaining) + u64::from(tail) <= u64::from(total) {
            prefix.push(a);
            go(remaining - 1, total - a, a + 1, prefix, out);
            prefix.pop();
            a += 1;
        }
    }
    let mut members = Vec::new();
    if s > 0 {
        go(s, total, 0, &mut Vec::new(), &mut members);
    }
    IndexSetFamily { s, total, members }
}

/// `φ(·, d)` together with evaluations at requested integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiResult {
    pub d: u32,
    pub phi: Polynomial,
    pub evaluations: BTreeMap<i64, Rational>,
}

impl PhiResult {
    pub fn with_evaluations(mut self, at: &[i64]) -> Self {
        for &n in at {
            self.evaluations.insert(n, self.phi.eval_int(n));
        }
        self
    }
}

/// Cardinalities `s ≥ 1` with `s(s+1)/2 ≤ d`.
pub fn cardinalities(d: u32) -> impl Iterator<Item = u32> {
    (1..).take_while(move |s| s * (s + 1) / 2 <= d)
}

/// Builds `φ(·, d)`. Each inner sum is divided by `n` before the factor `s`
/// is applied; the division must be exact.
pub fn phi_poly<S: PsiSource + ?Sized>(
    src: &mut S,
    forms: &mut ClosedForms,
    d: u32,
) -> Result<PhiResult> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let n = Polynomial::var();
    let mut phi = Polynomial::zero();
    for s in cardinalities(d) {
        let family = enumerate_index_sets(s, d - s);
        let mut inner = Polynomial::zero();
        for set in &family.members {
            let psi = Rational::from_integer(src.psi(set)?);
            let lp = lp_poly(src, forms, set, Route::Pfaffian)?;
            inner = &inner + &lp.poly.scale(&psi);
        }
        let reduced = inner.exact_div(&n)?;
        phi = &phi + &reduced.scale(&Rational::from_integer(s.into()));
    }
    Ok(PhiResult {
        d,
        phi,
        evaluations: BTreeMap::new(),
    })
}

/// `φ(0, d)` reduced to the terms with `|I| ≤ 2`:
/// `ψ_{d-1} · LP~_{d-1}(0) + 2 Σ_{0 ≤ i < (d-2)/2} ψ_{i, d-2-i} MC(i, d-2-i)`.
pub fn phi_at_zero_closed<S: PsiSource + ?Sized>(src: &mut S, d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let reduced = lp_singleton_poly(d - 1).poly.div_by_var()?;
    let mut acc = Rational::from_integer(pow2(d - 1)) * reduced.eval(&Rational::zero());
    let two = Rational::from_integer(2.into());
    let mut i = 0;
    while d >= 2 && 2 * i + 2 < d {
        let j = d - 2 - i;
        let set = IndexSet::new(alloc::vec![i, j])?;
        acc += &two * Rational::from_integer(src.psi(&set)?) * mc(i, j);
        i += 1;
    }
    Ok(acc)
}

/// `φ(-1, d)` from its single surviving term: `-ψ_{d-1} · LP_{d-1}(-1)`.
pub fn phi_at_minus_one_closed(d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let lp = lp_singleton_poly(d - 1).poly.eval(&-Rational::one());
    Ok(-(Rational::from_integer(pow2(d - 1)) * lp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::psi::PsiTable;

    fn sets(f: &IndexSetFamily) -> Vec<Vec<u32>> {
        f.members.iter().map(|s| s.as_slice().to_vec()).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(sets(&enumerate_index_sets(1, 1)), [[1]]);
        assert_eq!(sets(&enumerate_index_sets(2, 1)), [[0, 1]]);
        assert_eq!(sets(&enumerate_index_sets(2, 4)), [[0, 4], [1, 3]]);
        assert!(enumerate_index_sets(3, 2).members.is_empty());
        assert_eq!(sets(&enumerate_index_sets(3, 3)), [[0, 1, 2]]);
        assert!(enumerate_index_sets(0, 0).members.is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for s in 1..=4u32 {
            for total in 0..=14u32 {
                let mut brute = Vec::new();
                for mask in 0u32..(1 << (total + 1)) {
                    let v: Vec<u32> = (0..=total).filter(|i| mask >> i & 1 == 1).collect();
                    if v.len() as u32 == s && v.iter().sum::<u32>() == total {
                        brute.push(v);
                    }
                }
                brute.sort();
                assert_eq!(
                    sets(&enumerate_index_sets(s, total)),
                    brute,
                    "s={s} total={total}"
                );
            }
        }
    }

    #[test]
    fn small_degrees() {
        let mut t = PsiTable::new();
        let mut f = ClosedForms::new();
        assert_eq!(phi_poly(&mut t, &mut f, 1).unwrap().phi, Polynomial::one());
        assert_eq!(
            phi_poly(&mut t, &mut f, 2).unwrap().phi,
            Polynomial::from_ints(&[-1, 1])
        );
        assert_eq!(
            phi_poly(&mut t, &mut f, 3).unwrap().phi,
            Polynomial::from_ints(&[1, -2, 1])
        );
        assert_eq!(phi_poly(&mut t, &mut f, 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn closed_special_values() {
        let mut t = PsiTable::new();
        assert_eq!(phi_at_zero_closed(&mut t, 1).unwrap(), rat(1));
        assert_eq!(phi_at_zero_closed(&mut t, 2).unwrap(), rat(-1));
        assert_eq!(phi_at_zero_closed(&mut t, 7).unwrap(), rat(1));
        assert_eq!(phi_at_minus_one_closed(1).unwrap(), rat(1));
        assert_eq!(phi_at_minus_one_closed(2).unwrap(), rat(-2));
        assert_eq!(phi_at_minus_one_closed(5).unwrap(), rat(16));
    }

    #[test]
    fn evaluations() {
        let mut t = PsiTable::new();
        let mut f = ClosedForms::new();
        let r = phi_poly(&mut t, &mut f, 3)
            .unwrap()
            .with_evaluations(&[0, -1]);
        assert_eq!(r.evaluations[&0], rat(1));
        assert_eq!(r.evaluations[&-1], rat(4));
    }
}
