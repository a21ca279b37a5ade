use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly increasing finite sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(elements));
        }
        Ok(Self(elements))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(i: u32) -> Self {
        Self(alloc::vec![i])
    }

    /// `[n] = {0, 1, ..., n-1}`
    pub fn range(n: u32) -> Self {
        Self((0..n).collect())
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self(elements)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_element(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&i| u64::from(i)).sum()
    }

    /// True when every element is below `n`.
    pub fn is_subset_of_range(&self, n: u32) -> bool {
        self.max_element().is_none_or(|m| m < n)
    }

    /// `[n] \ self`, or `None` unless `self ⊆ [n]`.
    pub fn complement_in(&self, n: u32) -> Option<Self> {
        if !self.is_subset_of_range(n) {
            return None;
        }
        let mut rest = self.0.iter().peekable();
        let out = (0..n)
            .filter(|x| {
                if rest.peek() == Some(&x) {
                    rest.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        Some(Self(out))
    }
}

impl TryFrom<Vec<u32>> for IndexSet {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<IndexSet> for Vec<u32> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}
