use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Unique polynomial of degree below `points.len()` through all `points`.
///
/// Built from exact Newton divided differences and expanded into the
/// monomial basis by Horner's scheme.
pub fn lagrange_interpolate(points: &[(i64, Rational)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    let mut xs: Vec<i64> = points.iter().map(|(x, _)| *x).collect();
    xs.sort_unstable();
    if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateAbscissa(w[0]));
    }

    // In-place divided differences: after pass k, table[m] = f[x_{m-k}..x_m].
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let len = points.len();
    for k in 1..len {
        for m in (k..len).rev() {
            let dx = points[m].0 - points[m - k].0;
            table[m] = (&table[m] - &table[m - 1]) / Rational::from_integer(BigInt::from(dx));
        }
    }

    let mut poly = Polynomial::constant(table[len - 1].clone());
    for m in (0..len - 1).rev() {
        poly = &poly * &Polynomial::shifted_var(-points[m].0);
        poly = &poly + &Polynomial::constant(table[m].clone());
    }
    Ok(poly)
}
