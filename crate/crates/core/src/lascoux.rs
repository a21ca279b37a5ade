//! Lascoux polynomials `LP_I(n)`: the polynomial agreeing with `ψ_{[n] \ I}`
//! whenever `I ⊆ [n]` and vanishing otherwise.
//!
//! Three constructions are provided and cross-checked against each other:
//! interpolation of the defining values, closed forms for one or two indices,
//! and the Pfaffian of the pair polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{
    factorial, falling_factorial, lagrange_interpolate, pfaffian, Polynomial, Rational, SkewMatrix,
};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::psi::{psi_empty, PsiSource};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    #[default]
    Interpolation,
    ClosedForm,
    Pfaffian,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Interpolation => "interpolation",
            Route::ClosedForm => "closed_form",
            Route::Pfaffian => "pfaffian",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LascouxPolynomial {
    pub index_set: IndexSet,
    pub poly: Polynomial,
    pub route: Route,
}

/// `LP_I(n)` from the definition: `ψ_{[n] \ I}` if `I ⊆ [n]`, else 0.
pub fn lp_value<S: PsiSource + ?Sized>(src: &mut S, set: &IndexSet, n: u32) -> Result<BigInt> {
    match set.complement_in(n) {
        Some(c) if c.is_empty() => Ok(psi_empty()),
        Some(c) => src.psi(&c),
        None => Ok(BigInt::zero()),
    }
}

/// `LP_{{i}}(n) = [n]_{i+1} / (i+1)!`, i.e. `binom(n, i+1)`.
pub fn lp_singleton_poly(i: u32) -> LascouxPolynomial {
    let denom = Rational::from_integer(factorial(i + 1));
    let poly = falling_factorial(&Polynomial::var(), i + 1).scale(&denom.recip());
    LascouxPolynomial {
        index_set: IndexSet::singleton(i),
        poly,
        route: Route::ClosedForm,
    }
}

/// Closed form of `LP_{{i,j}}(n)` for `i < j`:
///
/// ```text
/// (j-i) [n+1]_{j+2} / ((i+1)! (j+1)! (i+j+2)!) · Σ_{d=0}^{i} (-1)^d a_{i,d} (i+j+1-d)! [n]_{i-d}
/// ```
///
/// with `a_{i,d} = Π_{k<d} (i-k)(i-k+1)`.
pub fn lp_pair_poly(i: u32, j: u32) -> Result<LascouxPolynomial> {
    let index_set = IndexSet::new(alloc::vec![i, j])?;
    let n = Polynomial::var();
    let mut sum = Polynomial::zero();
    let mut a = BigInt::from(1);
    for d in 0..=i {
        if d > 0 {
            let k = d - 1;
            a *= BigInt::from(i - k) * BigInt::from(i - k + 1);
        }
        let mut c = &a * factorial(i + j + 1 - d);
        if d % 2 == 1 {
            c = -c;
        }
        let term = falling_factorial(&n, i - d).scale(&Rational::from_integer(c));
        sum = &sum + &term;
    }
    let prefactor = Rational::new(
        BigInt::from(j - i),
        factorial(i + 1) * factorial(j + 1) * factorial(i + j + 2),
    );
    let head = falling_factorial(&Polynomial::shifted_var(1), j + 2).scale(&prefactor);
    Ok(LascouxPolynomial {
        index_set,
        poly: &head * &sum,
        route: Route::ClosedForm,
    })
}

/// Memo of singleton and pair closed forms, shared by Pfaffian constructions.
#[derive(Clone, Debug, Default)]
pub struct ClosedForms {
    singles: BTreeMap<u32, Polynomial>,
    pairs: BTreeMap<(u32, u32), Polynomial>,
}

impl ClosedForms {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(&mut self, i: u32) -> &Polynomial {
        self.singles
            .entry(i)
            .or_insert_with(|| lp_singleton_poly(i).poly)
    }

    /// Pair polynomial for `i < j`.
    pub fn pair(&mut self, i: u32, j: u32) -> Result<&Polynomial> {
        match self.pairs.entry((i, j)) {
            alloc::collections::btree_map::Entry::Occupied(e) => Ok(e.into_mut()),
            alloc::collections::btree_map::Entry::Vacant(e) => {
                Ok(e.insert(lp_pair_poly(i, j)?.poly))
            }
        }
    }
}

/// Degree bound `ΣI + |I|` used by the interpolation route.
pub fn degree_bound(set: &IndexSet) -> u32 {
    u32::try_from(set.sum()).expect("index sum fits in u32") + set.len() as u32
}

/// Interpolates `LP_I` through `n = 0..=D` and confirms it at `D+1`, `D+2`.
pub fn lp_interpolated<S: PsiSource + ?Sized>(src: &mut S, set: &IndexSet) -> Result<Polynomial> {
    let bound = degree_bound(set);
    let mut points = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        points.push((i64::from(n), Rational::from_integer(lp_value(src, set, n)?)));
    }
    let poly = lagrange_interpolate(&points)?;
    for at in [bound + 1, bound + 2] {
        let expected = Rational::from_integer(lp_value(src, set, at)?);
        if poly.eval_int(i64::from(at)) != expected {
            return Err(Error::DegreeBoundViolated {
                set: set.clone(),
                at,
            });
        }
    }
    Ok(poly)
}

/// Pfaffian of the pair polynomials; odd sizes are bordered by a leading
/// row of singleton polynomials.
pub fn lp_pfaffian(forms: &mut ClosedForms, set: &IndexSet) -> Result<Polynomial> {
    let elems = set.as_slice();
    let odd = elems.len() % 2 == 1;
    let dim = elems.len() + usize::from(odd);
    let mut err = None;
    let m = SkewMatrix::from_fn(dim, |k, l| {
        let entry = if odd && k == 0 {
            Ok(forms.singleton(elems[l - 1]).clone())
        } else {
            let shift = usize::from(odd);
            forms.pair(elems[k - shift], elems[l - shift]).cloned()
        };
        entry.unwrap_or_else(|e| {
            err = Some(e);
            Polynomial::zero()
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(pfaffian(&m))
}

/// `LP_I` along the requested route.
pub fn lp_poly<S: PsiSource + ?Sized>(
    src: &mut S,
    forms: &mut ClosedForms,
    set: &IndexSet,
    route: Route,
) -> Result<LascouxPolynomial> {
    if set.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let poly = match route {
        Route::Interpolation => lp_interpolated(src, set)?,
        Route::Pfaffian => lp_pfaffian(forms, set)?,
        Route::ClosedForm => match set.as_slice() {
            [i] => forms.singleton(*i).clone(),
            [i, j] => forms.pair(*i, *j)?.clone(),
            other => return Err(Error::UnsupportedSize(other.len())),
        },
    };
    Ok(LascouxPolynomial {
        index_set: set.clone(),
        poly,
        route,
    })
}

/// Reduced polynomial `LP_I(n) / n`.
pub fn lp_tilde_poly<S: PsiSource + ?Sized>(
    src: &mut S,
    forms: &mut ClosedForms,
    set: &IndexSet,
    route: Route,
) -> Result<Polynomial> {
    let lp = lp_poly(src, forms, set, route)?;
    lp.poly.exact_div(&Polynomial::var())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::psi::PsiTable;
    use alloc::vec;

    fn set(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn definitional_values() {
        let mut t = PsiTable::new();
        assert_eq!(lp_value(&mut t, &set(&[0]), 2).unwrap(), BigInt::from(2));
        assert_eq!(lp_value(&mut t, &set(&[2]), 1).unwrap(), BigInt::zero());
        assert_eq!(lp_value(&mut t, &set(&[0, 1]), 2).unwrap(), BigInt::from(1));
        assert_eq!(
            lp_value(&mut t, &set(&[0, 1, 2]), 3).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(lp_value(&mut t, &set(&[0]), 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn singleton_forms() {
        assert_eq!(lp_singleton_poly(0).poly, Polynomial::var());
        let half = Polynomial::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(lp_singleton_poly(1).poly, half);
        let mut t = PsiTable::new();
        for i in 0..6u32 {
            let p = lp_singleton_poly(i).poly;
            for n in 0..i + 3 {
                let v = lp_value(&mut t, &set(&[i]), n).unwrap();
                assert_eq!(
                    p.eval_int(i64::from(n)),
                    Rational::from_integer(v),
                    "i={i} n={n}"
                );
            }
        }
        let reduced = lp_singleton_poly(2).poly.div_by_var().unwrap();
        assert_eq!(reduced.eval_int(0), ratio(1, 3));
    }

    #[test]
    fn pair_form() {
        let p = lp_pair_poly(0, 1).unwrap().poly;
        let expected = Polynomial::from_coeffs(vec![rat(0), ratio(-1, 6), rat(0), ratio(1, 6)]);
        assert_eq!(p, expected);
        assert_eq!(p.eval_int(2), rat(1));
        assert_eq!(p.div_by_var().unwrap().eval_int(0), ratio(-1, 6));
        assert!(lp_pair_poly(2, 2).is_err());
    }

    #[test]
    fn routes_for_small_sets() {
        let mut t = PsiTable::new();
        let mut f = ClosedForms::new();
        let s = set(&[0, 1]);
        let interp = lp_poly(&mut t, &mut f, &s, Route::Interpolation).unwrap();
        let closed = lp_poly(&mut t, &mut f, &s, Route::ClosedForm).unwrap();
        let pf = lp_poly(&mut t, &mut f, &s, Route::Pfaffian).unwrap();
        assert_eq!(interp.poly, closed.poly);
        assert_eq!(pf.poly, closed.poly);

        let one = set(&[1]);
        for route in [Route::Interpolation, Route::ClosedForm, Route::Pfaffian] {
            let lp = lp_poly(&mut t, &mut f, &one, route).unwrap();
            assert_eq!(lp.poly, lp_singleton_poly(1).poly, "{route}");
        }
    }

    #[test]
    fn pfaffian_triple_at_three() {
        let mut t = PsiTable::new();
        let mut f = ClosedForms::new();
        let s = set(&[0, 1, 2]);
        let pf = lp_poly(&mut t, &mut f, &s, Route::Pfaffian).unwrap();
        assert_eq!(pf.poly.eval_int(3), rat(1));
        let direct = lp_value(&mut t, &s, 3).unwrap();
        assert_eq!(Rational::from_integer(direct), rat(1));
    }

    #[test]
    fn errors() {
        let mut t = PsiTable::new();
        let mut f = ClosedForms::new();
        assert_eq!(
            lp_poly(&mut t, &mut f, &IndexSet::empty(), Route::Pfaffian),
            Err(Error::EmptyIndexSet)
        );
        assert_eq!(
            lp_poly(&mut t, &mut f, &set(&[0, 1, 2]), Route::ClosedForm),
            Err(Error::UnsupportedSize(3))
        );
    }

    #[test]
    fn reduced_polynomials() {
        let mut t = PsiTable::new();
        let mut f = ClosedForms::new();
        let r = lp_tilde_poly(&mut t, &mut f, &set(&[0]), Route::ClosedForm).unwrap();
        assert_eq!(r, Polynomial::one());
        let r = lp_tilde_poly(&mut t, &mut f, &set(&[0, 1]), Route::Interpolation).unwrap();
        // (n+1)(n-1)/6
        assert_eq!(
            r,
            Polynomial::from_coeffs(vec![ratio(-1, 6), rat(0), ratio(1, 6)])
        );
        let r = lp_tilde_poly(&mut t, &mut f, &set(&[1, 2]), Route::ClosedForm).unwrap();
        assert_eq!(r.eval_int(0), ratio(-1, 60));
    }
}
