use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial in `n` with exact rational coefficients.
///
/// Coefficients are stored in ascending degree and the leading coefficient is
/// never zero; the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `n`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `n + c`
    pub fn shifted_var(c: i64) -> Self {
        Self::from_coeffs(vec![super::rat(c), Rational::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `n^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Long division; returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (m, c) in divisor.coeffs.iter().enumerate() {
                rem[k + m] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor`; fails with [`Error::NonzeroRemainder`]
    /// when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    /// Exact division by `n`, i.e. dropping a zero constant term.
    pub fn div_by_var(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if !c.is_zero() => Err(Error::NonzeroRemainder),
            Some(_) => Ok(Self {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    /// Largest `k` such that `divisor^k` divides `self` exactly, found by
    /// repeated division. The zero polynomial, and any constant divisor,
    /// report `usize::MAX`.
    pub fn multiplicity(&self, divisor: &Self) -> usize {
        if self.is_zero() || divisor.degree().unwrap_or(0) == 0 {
            return usize::MAX;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(divisor) {
            cur = q;
            k += 1;
        }
        k
    }
}

/// `base (base - 1) ... (base - k + 1)`, the constant 1 when `k = 0`.
pub fn falling_factorial(base: &Polynomial, k: u32) -> Polynomial {
    (0..k).fold(Polynomial::one(), |acc, m| {
        let factor = base - &Polynomial::constant(super::rat(i64::from(m)));
        &acc * &factor
    })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ if abs.is_integer() => write!(f, "{abs}*")?,
                _ => write!(f, "({abs})*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, Rational::zero());
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl core::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn canonical_form_trims_zeros() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), None);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn falling_factorial_examples() {
        let n = Polynomial::var();
        assert_eq!(falling_factorial(&n, 0), Polynomial::one());
        assert_eq!(falling_factorial(&n, 2), Polynomial::from_ints(&[0, -1, 1]));
        // (n+1) n (n-1) = n^3 - n, checked against a direct product
        let expected = &(&Polynomial::shifted_var(1) * &n) * &Polynomial::shifted_var(-1);
        assert_eq!(expected, Polynomial::from_ints(&[0, -1, 0, 1]));
        assert_eq!(falling_factorial(&Polynomial::shifted_var(1), 3), expected);
    }

    #[test]
    fn exact_division_examples() {
        let n = Polynomial::var();
        let q = Polynomial::from_ints(&[0, -1, 1]).exact_div(&n).unwrap();
        assert_eq!(q, Polynomial::from_ints(&[-1, 1]));
        let q = Polynomial::from_ints(&[0, -1, 0, 1])
            .exact_div(&Polynomial::shifted_var(1))
            .unwrap();
        assert_eq!(q, Polynomial::from_ints(&[0, -1, 1]));
        assert_eq!(
            Polynomial::from_ints(&[1, 0, 1]).exact_div(&n),
            Err(Error::NonzeroRemainder)
        );
        assert_eq!(
            Polynomial::from_ints(&[1, 0, 1]).div_by_var(),
            Err(Error::NonzeroRemainder)
        );
        assert_eq!(n.exact_div(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn multiplicity_counts_repeated_factors() {
        let n = Polynomial::var();
        let n1 = Polynomial::shifted_var(1);
        let p = &(&(&n * &n) * &n1) * &Polynomial::from_ints(&[3, 0, 1]);
        assert_eq!(p.multiplicity(&n), 2);
        assert_eq!(p.multiplicity(&n1), 1);
    }

    #[test]
    fn evaluation_and_display() {
        let p = Polynomial::from_coeffs(alloc::vec![ratio(-1, 6), rat(0), ratio(1, 6)]);
        assert_eq!(p.eval_int(2), ratio(1, 2));
        assert_eq!(alloc::format!("{p}"), "(1/6)*n^2 - 1/6");
        assert_eq!(
            alloc::format!("{}", Polynomial::from_ints(&[1, -2, 1])),
            "n^2 - 2*n + 1"
        );
    }
}
