use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{Polynomial, Rational};
use crate::error::Result;
use crate::index_set::IndexSet;
use crate::lascoux::{self, ClosedForms, LascouxPolynomial, Route};
use crate::ml_degree::{self, PhiResult};
use crate::psi::{self, PsiSource, PsiTable};

/// Bundles a ψ source with the memo tables the polynomial constructions use.
///
/// The ψ source is usually an owned [`PsiTable`]; any [`PsiSource`] works,
/// which lets several engines share one synchronized table.
#[derive(Clone, Debug, Default)]
pub struct Engine<S = PsiTable> {
    source: S,
    forms: ClosedForms,
    phi_cache: BTreeMap<u32, Polynomial>,
}

impl Engine<PsiTable> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<S: PsiSource> Engine<S> {
    pub fn with_source(source: S) -> Self {
        Self {
            source,
            forms: ClosedForms::new(),
            phi_cache: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &S {
        &self.source
    }

    pub fn source_mut(&mut self) -> &mut S {
        &mut self.source
    }

    pub fn into_source(self) -> S {
        self.source
    }

    pub fn psi(&mut self, set: &IndexSet) -> Result<BigInt> {
        self.source.psi(set)
    }

    pub fn psi_ext_pair(&mut self, a: i64, b: i64) -> Result<Rational> {
        psi::psi_ext_pair(&mut self.source, a, b)
    }

    pub fn lp_value(&mut self, set: &IndexSet, n: u32) -> Result<BigInt> {
        lascoux::lp_value(&mut self.source, set, n)
    }

    pub fn lp_poly(&mut self, set: &IndexSet, route: Route) -> Result<LascouxPolynomial> {
        lascoux::lp_poly(&mut self.source, &mut self.forms, set, route)
    }

    pub fn lp_tilde_poly(&mut self, set: &IndexSet, route: Route) -> Result<Polynomial> {
        lascoux::lp_tilde_poly(&mut self.source, &mut self.forms, set, route)
    }

    pub fn phi_poly(&mut self, d: u32) -> Result<PhiResult> {
        if let Some(phi) = self.phi_cache.get(&d) {
            return Ok(PhiResult {
                d,
                phi: phi.clone(),
                evaluations: BTreeMap::new(),
            });
        }
        let r = ml_degree::phi_poly(&mut self.source, &mut self.forms, d)?;
        self.phi_cache.insert(d, r.phi.clone());
        Ok(r)
    }

    /// Evaluates the assembled polynomial, so reported values always agree
    /// with the reported coefficients.
    pub fn phi_value(&mut self, n: i64, d: u32) -> Result<Rational> {
        Ok(self.phi_poly(d)?.phi.eval_int(n))
    }

    pub fn phi_at_zero_closed(&mut self, d: u32) -> Result<Rational> {
        ml_degree::phi_at_zero_closed(&mut self.source, d)
    }

    pub fn phi_at_minus_one_closed(&mut self, d: u32) -> Result<Rational> {
        ml_degree::phi_at_minus_one_closed(d)
    }
}
