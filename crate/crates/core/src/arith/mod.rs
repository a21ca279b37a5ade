//! Exact numeric substrate: big rationals, dense univariate polynomials in
//! `n`, Newton interpolation and Pfaffians.

mod interp;
mod pfaffian;
mod poly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use interp::lagrange_interpolate;
pub use pfaffian::{pfaffian, PfaffianRing, SkewMatrix};
pub use poly::{falling_factorial, Polynomial};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Lifts a machine integer into [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p / q` as an exact rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, m| acc * m)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, m| acc * (n - m) / (m + 1))
}

/// `2^e` as a big integer.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// `(-1)^e`
pub fn sign_pow(e: u64) -> i64 {
    if e.is_even() {
        1
    } else {
        -1
    }
}

/// Returns the integer value of `r`, or `None` if it has a denominator.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
