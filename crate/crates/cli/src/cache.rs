//! JSON-lines persistence for ψ values.
//!
//! One record per line: `{"set": [0, 3], "psi": "7"}`. The value is a decimal
//! string so consumers are not limited by integer width. Files are only ever
//! appended to.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use lascoux_core::{IndexSet, PsiTable};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot access psi cache {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}:{line}: corrupt psi cache record: {reason}")]
    Corrupt {
        path: PathBuf,
        line: usize,
        reason: String,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub set: IndexSet,
    pub psi: String,
}

/// A cache file plus the sets it already holds.
#[derive(Debug)]
pub struct PsiCache {
    path: PathBuf,
    stored: BTreeSet<IndexSet>,
}

impl PsiCache {
    /// Reads every record of `path` into `table`. A missing file is an empty
    /// cache; any malformed line aborts with its line number.
    pub fn load(path: &Path, table: &mut PsiTable) -> Result<Self, CacheError> {
        let mut stored = BTreeSet::new();
        let io_err = |source| CacheError::Io {
            path: path.to_owned(),
            source,
        };
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                return Ok(Self {
                    path: path.to_owned(),
                    stored,
                })
            }
            Err(e) => return Err(io_err(e)),
        };
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(io_err)?;
            if line.trim().is_empty() {
                continue;
            }
            let corrupt = |reason: String| CacheError::Corrupt {
                path: path.to_owned(),
                line: idx + 1,
                reason,
            };
            let rec: Record = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
            let value: BigInt = rec
                .psi
                .parse()
                .map_err(|_| corrupt(format!("'{}' is not a decimal integer", rec.psi)))?;
            table.insert(&rec.set, value);
            stored.insert(rec.set);
        }
        Ok(Self {
            path: path.to_owned(),
            stored,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.stored.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stored.is_empty()
    }

    /// Appends the table entries the file does not hold yet, in set order.
    /// Returns the number of records written.
    pub fn persist(&mut self, table: &PsiTable) -> Result<usize, CacheError> {
        let fresh: Vec<_> = table
            .entries()
            .into_iter()
            .filter(|(s, _)| !self.stored.contains(s))
            .collect();
        if fresh.is_empty() {
            return Ok(0);
        }
        let io_err = |source| CacheError::Io {
            path: self.path.clone(),
            source,
        };
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(io_err)?;
        let mut out = BufWriter::new(file);
        for (set, value) in &fresh {
            let rec = Record {
                set: set.clone(),
                psi: value.to_string(),
            };
            let line = serde_json::to_string(&rec).expect("records always serialize");
            writeln!(out, "{line}").map_err(io_err)?;
        }
        out.flush().map_err(io_err)?;
        let written = fresh.len();
        self.stored.extend(fresh.into_iter().map(|(s, _)| s));
        Ok(written)
    }
}
