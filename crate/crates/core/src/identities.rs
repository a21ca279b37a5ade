//! `MC(i, j)` and instance checkers for the identities relating `ψ`, `MC`
//! and the reduced Lascoux polynomials at `n = 0` and `n = -1`.
//!
//! Each checker evaluates both sides of its identity through separate code
//! paths and collects every mismatch into a [`VerificationReport`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, pow2, ratio, sign_pow, Polynomial, Rational};
use crate::engine::Engine;
use crate::index_set::IndexSet;
use crate::lascoux::{degree_bound, Route};
use crate::ml_degree::enumerate_index_sets;
use crate::psi::PsiSource;

/// `MC(i, j) = (j-i)(-1)^{i+j} / ((i+1)(j+1) binom(i+j+2, i+1))`, for any
/// `i, j ≥ 0`.
pub fn mc(i: u32, j: u32) -> Rational {
    let num = (i64::from(j) - i64::from(i)) * sign_pow(u64::from(i) + u64::from(j));
    let den = BigInt::from(i + 1) * BigInt::from(j + 1) * binomial(i + j + 2, i + 1);
    Rational::new(BigInt::from(num), den)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Set(Vec<u32>),
    Text(String),
}

pub type Params = BTreeMap<String, Param>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of checking one identity over a parameter range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub range: BTreeMap<String, i64>,
    pub checked: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluded: Vec<Params>,
}

impl VerificationReport {
    fn new(suite: Suite, range: &[(&str, i64)]) -> Self {
        Self {
            suite: suite.name().into(),
            range: range.iter().map(|(k, v)| ((*k).into(), *v)).collect(),
            checked: 0,
            failures: Vec::new(),
            excluded: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        params: Params,
        lhs: &T,
        rhs: &T,
        detail: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                params,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                detail: Some(detail()),
            });
        }
    }

    fn error(&mut self, params: Params, err: &crate::Error) {
        self.checked += 1;
        self.failures.push(Failure {
            params,
            lhs: "error".into(),
            rhs: "value".into(),
            detail: Some(err.to_string()),
        });
    }
}

fn params<const N: usize>(items: [(&str, Param); N]) -> Params {
    items.into_iter().map(|(k, v)| (k.into(), v)).collect()
}

fn int(v: impl Into<i64>) -> Param {
    Param::Int(v.into())
}

fn rat_int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// The available checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Mc,
    Pascal,
    Sum,
    Induction,
    ValueAtZero,
    Conjecture,
    Divisibility,
    Routes,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Mc,
        Suite::Pascal,
        Suite::Sum,
        Suite::Induction,
        Suite::ValueAtZero,
        Suite::Conjecture,
        Suite::Divisibility,
        Suite::Routes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mc => "mc",
            Suite::Pascal => "pascal",
            Suite::Sum => "sum",
            Suite::Induction => "induction",
            Suite::ValueAtZero => "value-at-zero",
            Suite::Conjecture => "conjecture",
            Suite::Divisibility => "divisibility",
            Suite::Routes => "routes",
        }
    }

    /// Range used when none is given: grid size for the `MC`/`ψ` suites,
    /// largest `d` for the sum-type suites, largest index for the reduced
    /// values, and the largest `ΣI + |I|` for the polynomial suites.
    pub fn default_range(self) -> u32 {
        match self {
            Suite::Mc | Suite::Pascal | Suite::Sum | Suite::Induction => 40,
            Suite::ValueAtZero => 12,
            Suite::Conjecture => 30,
            Suite::Divisibility | Suite::Routes => 16,
        }
    }

    pub fn run<S: PsiSource>(self, engine: &mut Engine<S>, range: u32) -> VerificationReport {
        match self {
            Suite::Mc => verify_mc_recurrence(range, range),
            Suite::Pascal => verify_pascal_identity(engine, range, range),
            Suite::Sum => verify_sum_identity(engine, range),
            Suite::Induction => verify_induction_identity(engine, range),
            Suite::ValueAtZero => verify_value_at_zero(engine, range),
            Suite::Conjecture => verify_conjecture(engine, range),
            Suite::Divisibility => verify_divisibility(engine, range),
            Suite::Routes => verify_routes(engine, range),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// `MC(i+1, j) + MC(i, j+1) = -MC(i, j)` on the grid, plus antisymmetry
/// `MC(i, j) = -MC(j, i)`.
pub fn verify_mc_recurrence(imax: u32, jmax: u32) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Mc, &[("imax", imax.into()), ("jmax", jmax.into())]);
    for i in 0..=imax {
        for j in 0..=jmax {
            let (a, b) = (mc(i + 1, j), mc(i, j + 1));
            let lhs = &a + &b;
            let rhs = -mc(i, j);
            r.check(
                params([
                    ("i", int(i)),
                    ("j", int(j)),
                    ("check", Param::Text("recurrence".into())),
                ]),
                &lhs,
                &rhs,
                || format!("MC(i+1,j) = {a}, MC(i,j+1) = {b}"),
            );
            let swapped = -mc(j, i);
            r.check(
                params([
                    ("i", int(i)),
                    ("j", int(j)),
                    ("check", Param::Text("antisymmetry".into())),
                ]),
                &mc(i, j),
                &swapped,
                String::new,
            );
        }
    }
    r
}

/// `LP~_{i}(0) = (-1)^i/(i+1)` and `LP~_{i,j}(0) = MC(i, j)` for indices up to
/// `max_index`, with the left sides taken from the closed-form polynomials.
pub fn verify_value_at_zero<S: PsiSource>(
    engine: &mut Engine<S>,
    max_index: u32,
) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::ValueAtZero, &[("max_index", max_index.into())]);
    let zero = Rational::zero();
    for i in 0..=max_index {
        let p = engine.lp_tilde_poly(&IndexSet::singleton(i), Route::ClosedForm);
        let ps = params([("i", int(i))]);
        match p {
            Ok(p) => {
                let rhs = ratio(sign_pow(i.into()), i64::from(i) + 1);
                r.check(ps, &p.eval(&zero), &rhs, || format!("LP~ = {p}"));
            }
            Err(e) => r.error(ps, &e),
        }
        for j in i + 1..=max_index {
            let set = IndexSet::new(alloc::vec![i, j]).expect("i < j");
            let ps = params([("i", int(i)), ("j", int(j))]);
            match engine.lp_tilde_poly(&set, Route::ClosedForm) {
                Ok(p) => r.check(ps, &p.eval(&zero), &mc(i, j), || format!("LP~ = {p}")),
                Err(e) => r.error(ps, &e),
            }
        }
    }
    r
}

/// `ψ_{a,b} = ψ_{a-1,b} + ψ_{a,b-1}` for the extended pair convention.
/// `(0, 0)` is skipped and listed as excluded because it needs `ψ_{-1,0}`.
pub fn verify_pascal_identity<S: PsiSource>(
    engine: &mut Engine<S>,
    amax: u32,
    bmax: u32,
) -> VerificationReport {
    let mut r = VerificationReport::new(
        Suite::Pascal,
        &[("amax", amax.into()), ("bmax", bmax.into())],
    );
    for a in 0..=i64::from(amax) {
        for b in 0..=i64::from(bmax) {
            let ps = params([("a", int(a)), ("b", int(b))]);
            if a == 0 && b == 0 {
                r.excluded.push(ps);
                continue;
            }
            let terms = (
                engine.psi_ext_pair(a, b),
                engine.psi_ext_pair(a - 1, b),
                engine.psi_ext_pair(a, b - 1),
            );
            match terms {
                (Ok(lhs), Ok(left), Ok(down)) => {
                    let rhs = &left + &down;
                    r.check(ps, &lhs, &rhs, || {
                        format!("psi(a-1,b) = {left}, psi(a,b-1) = {down}")
                    });
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => r.error(ps, &e),
            }
        }
    }
    r
}

/// `Σ_{i=0}^{d} ψ_{i,d-i} MC(i, d-i)` over the extended pair convention.
fn diagonal_sum<S: PsiSource>(engine: &mut Engine<S>, d: u32) -> crate::Result<Rational> {
    let mut acc = Rational::zero();
    for i in 0..=d {
        let psi = engine.psi_ext_pair(i64::from(i), i64::from(d - i))?;
        acc += psi * mc(i, d - i);
    }
    Ok(acc)
}

/// `2^{d+1}(-1)^{d+1}(d+1) / ((d+2)(d+3))`
fn sum_identity_rhs(d: u32) -> Rational {
    let num = pow2(d + 1) * sign_pow(u64::from(d) + 1) * BigInt::from(d + 1);
    Rational::new(num, BigInt::from(d + 2) * BigInt::from(d + 3))
}

/// `(-1)^d (2^{d+1} - (d+2)) / (d+2)`
fn induction_rhs(d: u32) -> Rational {
    let num = (pow2(d + 1) - BigInt::from(d + 2)) * sign_pow(d.into());
    Rational::new(num, BigInt::from(d + 2))
}

/// Adjacent diagonal sums add up to `2^{d+1}(-1)^{d+1}(d+1)/((d+2)(d+3))`.
pub fn verify_sum_identity<S: PsiSource>(engine: &mut Engine<S>, dmax: u32) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Sum, &[("dmax", dmax.into())]);
    for d in 0..=dmax {
        let ps = params([("d", int(d))]);
        match (diagonal_sum(engine, d + 1), diagonal_sum(engine, d)) {
            (Ok(upper), Ok(lower)) => {
                let lhs = &upper + &lower;
                r.check(ps, &lhs, &sum_identity_rhs(d), || {
                    format!("sum at d+1 = {upper}, sum at d = {lower}")
                });
            }
            (Err(e), _) | (_, Err(e)) => r.error(ps, &e),
        }
    }
    r
}

/// `Σ_{i=0}^{d} ψ_{i,d-i} MC(i, d-i) = (-1)^d (2^{d+1} - (d+2)) / (d+2)`, and
/// for each `d` the induction step taking the closed form at `d` to `d+1`.
pub fn verify_induction_identity<S: PsiSource>(
    engine: &mut Engine<S>,
    dmax: u32,
) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Induction, &[("dmax", dmax.into())]);
    for d in 0..=dmax {
        let ps = params([("d", int(d)), ("check", Param::Text("identity".into()))]);
        match diagonal_sum(engine, d) {
            Ok(lhs) => r.check(ps, &lhs, &induction_rhs(d), String::new),
            Err(e) => r.error(ps, &e),
        }
        let stepped = sum_identity_rhs(d) - induction_rhs(d);
        r.check(
            params([("d", int(d)), ("check", Param::Text("step".into()))]),
            &stepped,
            &induction_rhs(d + 1),
            || format!("closed form at d = {}", induction_rhs(d)),
        );
    }
    r
}

/// `φ(0, d) = (-1)^{d-1}` and `φ(-1, d) = (-2)^{d-1}` through the assembled
/// polynomial and through the closed reductions, plus `deg φ(·, d) ≤ d - 1`.
pub fn verify_conjecture<S: PsiSource>(engine: &mut Engine<S>, dmax: u32) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Conjecture, &[("dmax", dmax.into())]);
    let text = |s: &str| Param::Text(s.into());
    for d in 1..=dmax {
        let at_zero = Rational::from_integer(BigInt::from(sign_pow(u64::from(d) - 1)));
        let at_minus_one = rat_int(pow2(d - 1) * sign_pow(u64::from(d) - 1));
        match engine.phi_poly(d) {
            Ok(res) => {
                let phi = &res.phi;
                r.check(
                    params([("d", int(d)), ("check", text("phi(0)"))]),
                    &phi.eval_int(0),
                    &at_zero,
                    || format!("phi = {phi}"),
                );
                r.check(
                    params([("d", int(d)), ("check", text("phi(-1)"))]),
                    &phi.eval_int(-1),
                    &at_minus_one,
                    || format!("phi = {phi}"),
                );
                let deg = phi.degree().map_or(-1, |k| k as i64);
                r.check(
                    params([("d", int(d)), ("check", text("degree"))]),
                    &(deg < i64::from(d)),
                    &true,
                    || format!("degree {deg}"),
                );
            }
            Err(e) => r.error(params([("d", int(d)), ("check", text("phi"))]), &e),
        }
        let ps = params([("d", int(d)), ("check", text("closed(0)"))]);
        match engine.phi_at_zero_closed(d) {
            Ok(v) => r.check(ps, &v, &at_zero, String::new),
            Err(e) => r.error(ps, &e),
        }
        let ps = params([("d", int(d)), ("check", text("closed(-1)"))]);
        match engine.phi_at_minus_one_closed(d) {
            Ok(v) => r.check(ps, &v, &at_minus_one, String::new),
            Err(e) => r.error(ps, &e),
        }
    }
    r
}

/// Non-empty index sets with `ΣI + |I| ≤ max_weight`, ordered by size and
/// then lexicographically.
pub fn sets_up_to_weight(max_weight: u32) -> Vec<IndexSet> {
    let mut out = Vec::new();
    for s in (1..).take_while(|s| s * (s + 1) / 2 <= max_weight) {
        for total in 0..=max_weight - s {
            out.extend(enumerate_index_sets(s, total).members);
        }
    }
    out
}

/// `n^{⌈r/2⌉}` and `(n+1)^{⌊r/2⌋}` divide `LP_I`, and `LP_I(n) = 0` for
/// `0 ≤ n ≤ max(I)`, over all `I` with `ΣI + |I| ≤ max_weight`.
pub fn verify_divisibility<S: PsiSource>(
    engine: &mut Engine<S>,
    max_weight: u32,
) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Divisibility, &[("max_weight", max_weight.into())]);
    let n = Polynomial::var();
    let n1 = Polynomial::shifted_var(1);
    for set in sets_up_to_weight(max_weight) {
        let key = Param::Set(set.as_slice().to_vec());
        let lp = match engine.lp_poly(&set, Route::Pfaffian) {
            Ok(lp) => lp.poly,
            Err(e) => {
                r.error(params([("set", key)]), &e);
                continue;
            }
        };
        let rlen = set.len() as u32;
        for (name, factor, power) in [("n", &n, rlen.div_ceil(2)), ("n+1", &n1, rlen / 2)] {
            let divides = divides_power(&lp, factor, power);
            r.check(
                params([
                    ("set", key.clone()),
                    ("factor", Param::Text(name.into())),
                    ("power", int(power)),
                ]),
                &divides,
                &true,
                || format!("LP = {lp}"),
            );
        }
        for at in 0..=set.max_element().unwrap_or(0) {
            r.check(
                params([("set", key.clone()), ("n", int(at))]),
                &lp.eval_int(at.into()),
                &Rational::zero(),
                String::new,
            );
        }
    }
    r
}

fn divides_power(p: &Polynomial, factor: &Polynomial, power: u32) -> bool {
    let mut cur = p.clone();
    for _ in 0..power {
        match cur.exact_div(factor) {
            Ok(q) => cur = q,
            Err(_) => return false,
        }
    }
    true
}

/// Interpolation and Pfaffian constructions of `LP_I` coincide, and match the
/// closed forms when `|I| ≤ 2`, over all `I` with `ΣI + |I| ≤ max_weight`.
pub fn verify_routes<S: PsiSource>(engine: &mut Engine<S>, max_weight: u32) -> VerificationReport {
    let mut r = VerificationReport::new(Suite::Routes, &[("max_weight", max_weight.into())]);
    for set in sets_up_to_weight(max_weight) {
        let key = Param::Set(set.as_slice().to_vec());
        debug_assert!(degree_bound(&set) <= max_weight);
        let interp = engine.lp_poly(&set, Route::Interpolation);
        let pf = engine.lp_poly(&set, Route::Pfaffian);
        let (interp, pf) = match (interp, pf) {
            (Ok(a), Ok(b)) => (a.poly, b.poly),
            (Err(e), _) | (_, Err(e)) => {
                r.error(params([("set", key)]), &e);
                continue;
            }
        };
        r.check(
            params([
                ("set", key.clone()),
                ("routes", Param::Text("interpolation=pfaffian".into())),
            ]),
            &interp,
            &pf,
            String::new,
        );
        if set.len() <= 2 {
            let ps = params([
                ("set", key),
                ("routes", Param::Text("interpolation=closed_form".into())),
            ]);
            match engine.lp_poly(&set, Route::ClosedForm) {
                Ok(c) => r.check(ps, &interp, &c.poly, String::new),
                Err(e) => r.error(ps, &e),
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    #[test]
    fn mc_values() {
        assert_eq!(mc(0, 1), ratio(-1, 6));
        // (-1)^{1+2} makes this negative
        assert_eq!(mc(1, 2), ratio(-1, 60));
        for i in 0..6 {
            assert_eq!(mc(i, i), rat(0));
        }
        assert_eq!(mc(1, 0), ratio(1, 6));
    }

    #[test]
    fn mc_recurrence_corner() {
        assert_eq!(mc(1, 0) + mc(0, 1), -mc(0, 0));
        assert_eq!(mc(1, 1) + mc(0, 2), -mc(0, 1));
    }

    #[test]
    fn sum_identity_first_cases() {
        let mut e = Engine::new();
        assert_eq!(diagonal_sum(&mut e, 1).unwrap(), ratio(-1, 3));
        assert_eq!(diagonal_sum(&mut e, 0).unwrap(), rat(0));
        assert_eq!(sum_identity_rhs(0), ratio(-1, 3));
        assert_eq!(induction_rhs(0), rat(0));
        assert_eq!(induction_rhs(1), ratio(-1, 3));
    }

    #[test]
    fn pascal_small_cases() {
        let mut e = Engine::new();
        assert_eq!(e.psi_ext_pair(1, 2).unwrap(), rat(3));
        assert_eq!(
            e.psi_ext_pair(0, 2).unwrap() + e.psi_ext_pair(1, 1).unwrap(),
            rat(3)
        );
        assert_eq!(
            e.psi_ext_pair(-1, 1).unwrap() + e.psi_ext_pair(0, 0).unwrap(),
            e.psi_ext_pair(0, 1).unwrap()
        );
        let r = verify_pascal_identity(&mut e, 3, 3);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.excluded.len(), 1);
        assert_eq!(r.checked, 15);
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = VerificationReport::new(Suite::Mc, &[]);
        r.check(params([("i", int(0))]), &rat(1), &rat(2), || "x".into());
        assert!(!r.passed());
        assert_eq!(r.failures[0].lhs, "1");
        assert_eq!(r.failures[0].rhs, "2");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn weight_family() {
        let fam = sets_up_to_weight(3);
        let v: Vec<Vec<u32>> = fam.iter().map(|s| s.as_slice().to_vec()).collect();
        assert_eq!(v, [vec![0], vec![1], vec![2], vec![0, 1]]);
    }
}
