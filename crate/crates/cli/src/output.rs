//! Serializable documents printed by the CLI. Rationals are always written
//! as exact decimal strings, `"p"` or `"p/q"`.

use std::collections::BTreeMap;

use lascoux_core::{Polynomial, Rational};
use serde::Serialize;

pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

pub fn coeff_strs(p: &Polynomial) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(rat_str).collect()
}

#[derive(Debug, Serialize)]
pub struct PsiDoc {
    pub set: Vec<u32>,
    pub psi: String,
}

#[derive(Debug, Serialize)]
pub struct LpDoc {
    pub set: Vec<u32>,
    pub route: String,
    pub coefficients: Vec<String>,
    pub evaluations: BTreeMap<i64, String>,
}

#[derive(Debug, Serialize)]
pub struct PhiDoc {
    pub d: u32,
    pub coefficients: Vec<String>,
    pub evaluations: BTreeMap<i64, String>,
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub d: u32,
    pub coefficients: Vec<String>,
    pub phi_at_zero: String,
    pub phi_at_minus_one: String,
}

/// Quotes a CSV field when it needs it.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn set_str(set: &[u32]) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}
