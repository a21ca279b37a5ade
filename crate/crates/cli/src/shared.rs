use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use lascoux_core::{IndexSet, PsiSource, PsiTable, Result};
use num_bigint::BigInt;

/// A [`PsiTable`] behind a read-write lock, usable from many threads.
///
/// Lookups of stored values take the read lock; a miss takes the write lock
/// and runs the recursion there, so every caller sees one consistent table.
#[derive(Debug, Default)]
pub struct SharedPsiTable {
    inner: RwLock<PsiTable>,
    read_hits: AtomicU64,
}

impl SharedPsiTable {
    pub fn new(table: PsiTable) -> Self {
        Self {
            inner: RwLock::new(table),
            read_hits: AtomicU64::new(0),
        }
    }

    pub fn into_inner(self) -> PsiTable {
        self.inner.into_inner().unwrap_or_else(|e| e.into_inner())
    }

    /// Hits served under the read lock plus hits inside the recursion.
    pub fn hits(&self) -> u64 {
        let inner = self.inner.read().unwrap_or_else(|e| e.into_inner());
        self.read_hits.load(Ordering::Relaxed) + inner.hits()
    }

    pub fn misses(&self) -> u64 {
        self.inner
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .misses()
    }
}

impl PsiSource for &SharedPsiTable {
    fn psi(&mut self, set: &IndexSet) -> Result<BigInt> {
        {
            let table = self.inner.read().unwrap_or_else(|e| e.into_inner());
            if set.len() >= 2 {
                if let Some(v) = table.get(set) {
                    self.read_hits.fetch_add(1, Ordering::Relaxed);
                    return Ok(v);
                }
            } else {
                return Ok(table.get(set).expect("trivial sets are always available"));
            }
        }
        self.inner
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .psi(set)
    }
}
