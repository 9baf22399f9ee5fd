//! Exact Gaussian Hermitian multi-trace moments as polynomials in `N`.
//!
//! The measure is `exp(-tr M^2 / 2)`, so `⟨M_ij M_kl⟩ = δ_il δ_jk`. Two exact
//! routes are provided: brute-force Wick enumeration and a memoized loop-equation
//! recursion, plus the Harer–Zagier recurrence for single traces.

mod monomial;
mod recursion;
mod wick;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};
use thiserror::Error;

pub use monomial::{Label, TraceMonomial};
pub use recursion::{single_trace_moment, MomentCache, DEFAULT_MEMO_BUDGET};
pub use wick::{canonical_permutation, count_loops, pairing_count, Census, PairingDiagram};

use crate::{NPolynomial, Rational};

/// Default brute-force budget in pairings.
pub const DEFAULT_PAIRING_BUDGET: u64 = 40_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MomentError {
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("{what}: {needed} needed, budget is {budget}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },
    #[error("coupling must satisfy |c| < 1, got {0}")]
    InvalidCoupling(Rational),
    #[error("monomial mixes two matrix labels")]
    NotSingleMatrix,
}

/// Which exact engine evaluates a one-matrix moment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    BruteForce,
    #[default]
    Recursive,
}

fn single(monomial: &TraceMonomial) -> Result<(), MomentError> {
    if monomial.is_single_matrix() {
        Ok(())
    } else {
        Err(MomentError::NotSingleMatrix)
    }
}

fn int(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Pairing counts keyed by the exponent of `N`.
pub fn diagram_census(monomial: &TraceMonomial) -> Result<BTreeMap<usize, u64>, MomentError> {
    diagram_census_with(monomial, DEFAULT_PAIRING_BUDGET)
}

pub fn diagram_census_with(
    monomial: &TraceMonomial,
    budget: u64,
) -> Result<BTreeMap<usize, u64>, MomentError> {
    single(monomial)?;
    let mut out = BTreeMap::new();
    for (loops, _, count) in wick::census(monomial, budget)?.entries() {
        *out.entry(loops).or_insert(0) += count;
    }
    Ok(out)
}

pub fn wick_moment_bruteforce(monomial: &TraceMonomial) -> Result<NPolynomial, MomentError> {
    wick_moment_bruteforce_with(monomial, DEFAULT_PAIRING_BUDGET)
}

pub fn wick_moment_bruteforce_with(
    monomial: &TraceMonomial,
    budget: u64,
) -> Result<NPolynomial, MomentError> {
    let census = diagram_census_with(monomial, budget)?;
    let top = census.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); top + 1];
    for (loops, count) in census {
        coeffs[loops] = int(count);
    }
    Ok(NPolynomial::new(coeffs))
}

pub fn wick_moment_recursive(monomial: &TraceMonomial) -> Result<NPolynomial, MomentError> {
    single(monomial)?;
    MomentCache::default().moment(&monomial.powers())
}

pub fn moment(monomial: &TraceMonomial, route: Route) -> Result<NPolynomial, MomentError> {
    match route {
        Route::BruteForce => wick_moment_bruteforce(monomial),
        Route::Recursive => wick_moment_recursive(monomial),
    }
}

/// Coefficient of `N^1`, i.e. `lim_{N→0} ⟨·⟩ / N`.
pub fn replica_coefficient(
    monomial: &TraceMonomial,
    route: Route,
) -> Result<Rational, MomentError> {
    Ok(moment(monomial, route)?.coeff(1))
}

/// Coefficient of `N^order`; `order = 2` collects the two-stroke (link) diagrams.
pub fn link_coefficient(
    monomial: &TraceMonomial,
    order: usize,
    route: Route,
) -> Result<Rational, MomentError> {
    Ok(moment(monomial, route)?.coeff(order))
}

/// Two-matrix moment for the action `½ tr(A² + B² − 2c AB)`.
///
/// Propagators are `⟨AA⟩ = ⟨BB⟩ = 1/(1−c²)` and `⟨AB⟩ = c/(1−c²)`.
pub fn coupled_moment(monomial: &TraceMonomial, c: &Rational) -> Result<NPolynomial, MomentError> {
    coupled_moment_with(monomial, c, DEFAULT_PAIRING_BUDGET)
}

pub fn coupled_moment_with(
    monomial: &TraceMonomial,
    c: &Rational,
    budget: u64,
) -> Result<NPolynomial, MomentError> {
    if c.abs() >= Rational::one() {
        return Err(MomentError::InvalidCoupling(c.clone()));
    }
    let m = monomial.legs();
    if m % 2 == 1 {
        return Ok(NPolynomial::zero());
    }
    let census = wick::census(monomial, budget)?;
    let inv = Rational::one() / (Rational::one() - c * c);
    let norm = num_traits::pow(inv, m / 2);
    let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
    for (loops, mixed, count) in census.entries() {
        let w = int(count) * num_traits::pow(c.clone(), mixed) * norm.clone();
        let slot = coeffs.entry(loops).or_insert_with(Rational::zero);
        *slot = slot.clone() + w;
    }
    let top = coeffs.keys().next_back().copied().unwrap_or(0);
    let mut v = vec![Rational::zero(); top + 1];
    for (e, x) in coeffs {
        v[e] = x;
    }
    Ok(NPolynomial::new(v))
}

/// Serializes an `N`-polynomial as `{"exponent": "coefficient"}` in increasing exponent order.
pub struct PolyJson<'a>(pub &'a NPolynomial);

impl Serialize for PolyJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.0.terms().collect();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

/// Machine-readable moment record.
#[derive(serde::Serialize)]
pub struct MomentReport<'a> {
    pub monomial: String,
    pub polynomial: PolyJson<'a>,
    pub replica: String,
}

impl<'a> MomentReport<'a> {
    pub fn new(monomial: &TraceMonomial, poly: &'a NPolynomial) -> Self {
        MomentReport {
            monomial: monomial.to_string(),
            polynomial: PolyJson(poly),
            replica: poly.coeff(1).to_string(),
        }
    }
}
