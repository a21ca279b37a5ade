use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Polynomial, Rational};

/// The commutative-ring operations the Pfaffian expansion needs.
pub trait PfaffianRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl PfaffianRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl PfaffianRing for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Skew-symmetric matrix stored by its strictly upper triangle.
///
/// `entry(l, k) = -entry(k, l)` and the diagonal is zero by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix<T> {
    dim: usize,
    upper: Vec<T>,
}

impl<T: PfaffianRing> SkewMatrix<T> {
    /// Fills entry `(k, l)` for every `k < l` from `f(k, l)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
        for k in 0..dim {
            for l in k + 1..dim {
                upper.push(f(k, l));
            }
        }
        Self { dim, upper }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn slot(&self, k: usize, l: usize) -> usize {
        debug_assert!(k < l && l < self.dim);
        k * self.dim - k * (k + 1) / 2 + (l - k - 1)
    }

    pub fn entry(&self, k: usize, l: usize) -> T {
        use core::cmp::Ordering;
        match k.cmp(&l) {
            Ordering::Less => self.upper[self.slot(k, l)].clone(),
            Ordering::Greater => self.upper[self.slot(l, k)].neg(),
            Ordering::Equal => T::zero(),
        }
    }

    fn upper_ref(&self, k: usize, l: usize) -> &T {
        &self.upper[self.slot(k, l)]
    }
}

/// Pfaffian by expansion along the first row.
///
/// `Pf` of the empty matrix is 1 and odd dimensions give 0.
pub fn pfaffian<T: PfaffianRing>(m: &SkewMatrix<T>) -> T {
    if m.dim % 2 == 1 {
        return T::zero();
    }
    let idx: Vec<usize> = (0..m.dim).collect();
    expand(m, &idx)
}

fn expand<T: PfaffianRing>(m: &SkewMatrix<T>, idx: &[usize]) -> T {
    match idx {
        [] => T::one(),
        [a, b] => m.upper_ref(*a, *b).clone(),
        [first, rest @ ..] => {
            let mut acc = T::zero();
            let mut sub = Vec::with_capacity(rest.len() - 1);
            for (pos, &k) in rest.iter().enumerate() {
                let a = m.upper_ref(*first, k);
                if a.is_zero() {
                    continue;
                }
                sub.clear();
                sub.extend(rest.iter().copied().filter(|&x| x != k));
                let term = a.mul(&expand(m, &sub));
                acc = if pos % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn numeric(dim: usize, vals: &[i64]) -> SkewMatrix<Rational> {
        let mut it = vals.iter();
        SkewMatrix::from_fn(dim, |_, _| rat(*it.next().unwrap()))
    }

    #[test]
    fn small_cases() {
        assert_eq!(pfaffian(&numeric(0, &[])), rat(1));
        assert_eq!(pfaffian(&numeric(2, &[5])), rat(5));
        assert_eq!(pfaffian(&numeric(3, &[1, 2, 3])), rat(0));
    }

    #[test]
    fn four_by_four_numeric() {
        // a12 a13 a14 a23 a24 a34; perfect matchings give 3*1 - 3*4 + 1*2
        let m = numeric(4, &[3, 3, 1, 2, 4, 1]);
        assert_eq!(pfaffian(&m), rat(-7));
    }

    #[test]
    fn skew_symmetry() {
        let m = numeric(3, &[1, 2, 3]);
        assert_eq!(m.entry(2, 0), rat(-2));
        assert_eq!(m.entry(1, 1), rat(0));
        assert_eq!(m.entry(1, 2), rat(3));
    }

    #[test]
    fn four_by_four_symbolic() {
        // entries are distinct primes so every matching product is distinguishable
        let m = numeric(4, &[2, 3, 5, 7, 11, 13]);
        assert_eq!(pfaffian(&m), rat(2 * 13 - 3 * 11 + 5 * 7));
    }
}
