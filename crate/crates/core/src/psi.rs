//! Lascoux coefficients `ψ_I`.
//!
//! For a singleton `ψ_{i} = 2^i`. For `J = {j_0 < ... < j_r}`
//!
//! ```text
//! (r+1) ψ_J = 2 Σ_l ψ_{J with j_l lowered by one} + [j_0 = 0] ψ_{J \ {0}}
//! ```
//!
//! where `l` runs over every position, including `l = 0`, whose decrement
//! keeps `J` a strictly increasing sequence of non-negative integers.
//! `ψ_∅ = 1`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{pow2, Rational};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// Anything that can produce `ψ_I` values.
pub trait PsiSource {
    fn psi(&mut self, set: &IndexSet) -> Result<BigInt>;
}

impl<S: PsiSource + ?Sized> PsiSource for &mut S {
    fn psi(&mut self, set: &IndexSet) -> Result<BigInt> {
        (**self).psi(set)
    }
}

/// `ψ_∅`
pub fn psi_empty() -> BigInt {
    BigInt::one()
}

// Sets with all elements below 128 are keyed by their bitmask; this keeps the
// table small when complements of [n] with n around 20 are expanded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Mask(u128),
    Wide(Box<[u32]>),
}

impl Key {
    fn of(elems: &[u32]) -> Self {
        match elems.last() {
            Some(&m) if m >= 128 => Key::Wide(elems.into()),
            _ => Key::Mask(elems.iter().fold(0u128, |acc, &i| acc | (1u128 << i))),
        }
    }

    fn elements(&self) -> Vec<u32> {
        match self {
            Key::Wide(v) => v.to_vec(),
            Key::Mask(m) => (0..128).filter(|i| m >> i & 1 == 1).collect(),
        }
    }
}

/// Memo table of computed `ψ_I` values with hit and miss counters.
#[derive(Clone, Debug, Default)]
pub struct PsiTable {
    entries: HashMap<Key, BigInt>,
    hits: u64,
    misses: u64,
}

impl PsiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    /// Cached value without computing or touching the counters.
    pub fn get(&self, set: &IndexSet) -> Option<BigInt> {
        match set.len() {
            0 => Some(psi_empty()),
            1 => Some(pow2(set.as_slice()[0])),
            _ => self.entries.get(&Key::of(set.as_slice())).cloned(),
        }
    }

    /// Stores a value obtained elsewhere, e.g. from a persisted cache.
    pub fn insert(&mut self, set: &IndexSet, value: BigInt) {
        if set.len() >= 2 {
            self.entries.insert(Key::of(set.as_slice()), value);
        }
    }

    pub fn contains(&self, set: &IndexSet) -> bool {
        set.len() < 2 || self.entries.contains_key(&Key::of(set.as_slice()))
    }

    /// All stored entries, sorted by set.
    pub fn entries(&self) -> Vec<(IndexSet, BigInt)> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .map(|(k, v)| (IndexSet::from_sorted_unchecked(k.elements()), v.clone()))
            .collect();
        out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Stored entries that are not strictly positive. Positivity is observed
    /// but not guaranteed, so callers report these rather than fail.
    pub fn non_positive(&self) -> Vec<IndexSet> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .filter(|(_, v)| !v.is_positive())
            .map(|(k, _)| IndexSet::from_sorted_unchecked(k.elements()))
            .collect();
        out.sort_unstable();
        out
    }

    /// Merges entries from another table; values for shared keys must agree.
    pub fn absorb(&mut self, other: PsiTable) {
        for (k, v) in other.entries {
            let prev = self.entries.entry(k).or_insert_with(|| v.clone());
            debug_assert_eq!(*prev, v);
        }
    }

    fn compute(&mut self, elems: &mut Vec<u32>) -> Result<BigInt> {
        match elems.as_slice() {
            [] => return Ok(psi_empty()),
            [i] => return Ok(pow2(*i)),
            _ => {}
        }
        let key = Key::of(elems);
        if let Some(v) = self.entries.get(&key) {
            self.hits += 1;
            return Ok(v.clone());
        }
        self.misses += 1;

        let mut sum = BigInt::zero();
        for l in 0..elems.len() {
            let lowerable = if l == 0 {
                elems[0] >= 1
            } else {
                elems[l] - 1 > elems[l - 1]
            };
            if lowerable {
                elems[l] -= 1;
                sum += self.compute(elems)?;
                elems[l] += 1;
            }
        }
        let mut total = sum * 2u32;
        if elems[0] == 0 {
            let mut tail = elems[1..].to_vec();
            total += self.compute(&mut tail)?;
        }
        let (value, rem) = total.div_rem(&BigInt::from(elems.len()));
        if !rem.is_zero() {
            return Err(Error::NonIntegerPsi {
                set: IndexSet::from_sorted_unchecked(elems.clone()),
                divisor: elems.len(),
            });
        }
        self.entries.insert(key, value.clone());
        Ok(value)
    }
}

impl PsiSource for PsiTable {
    fn psi(&mut self, set: &IndexSet) -> Result<BigInt> {
        let mut scratch = set.as_slice().to_vec();
        self.compute(&mut scratch)
    }
}

/// `ψ_{a,b}` extended to ordered pairs with entries `≥ -1`:
/// `ψ_{a,a} = 0`, `ψ_{a,b} = -ψ_{b,a}`, and `ψ_{-1,a} = -ψ_{a,-1} = 2^{a-1}`.
///
/// The last rule gives the non-integer `ψ_{-1,0} = 1/2`, hence the rational
/// return type.
pub fn psi_ext_pair<S: PsiSource + ?Sized>(src: &mut S, a: i64, b: i64) -> Result<Rational> {
    let undefined = Error::UndefinedExtension(a, b);
    if a < -1 || b < -1 || (a == -1 && b == -1) {
        return Err(undefined);
    }
    let half_pow = |e: i64| -> Result<Rational> {
        let e = u32::try_from(e).map_err(|_| Error::UndefinedExtension(a, b))?;
        Ok(Rational::new(pow2(e), BigInt::from(2)))
    };
    if a == -1 {
        return half_pow(b);
    }
    if b == -1 {
        return Ok(-half_pow(a)?);
    }
    let (lo, hi, sign) = match a.cmp(&b) {
        core::cmp::Ordering::Equal => return Ok(Rational::zero()),
        core::cmp::Ordering::Less => (a, b, 1),
        core::cmp::Ordering::Greater => (b, a, -1),
    };
    let to_u32 = |x: i64| u32::try_from(x).map_err(|_| Error::UndefinedExtension(a, b));
    let set = IndexSet::from_sorted_unchecked(alloc::vec![to_u32(lo)?, to_u32(hi)?]);
    let v = src.psi(&set)?;
    Ok(Rational::from_integer(v * sign))
}
