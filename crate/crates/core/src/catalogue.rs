//! Knots and the single-matrix Gaussian means whose zero-replica limit carries them.
//!
//! The table lives in `data/catalogue.json` (schema below) and is parsed once on first use.
//!
//! ```json
//! {"version": 1, "entries": [{"name": "3_1", "powers": [3, 3], "alternating": true,
//!   "source": "table", "ambiguous": false}]}
//! ```
//!
//! `powers` lists the trace exponents of `⟨Π tr M^k⟩`. `source` is one of `table`,
//! `three-vertex-expansion`, `shared-mean-remark` or `both`; `ambiguous` marks a member whose
//! group membership depends on which listing is followed.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmoments::{replica_coefficient, MomentError, Route, TraceMonomial};
use crate::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogueError {
    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Table,
    ThreeVertexExpansion,
    SharedMeanRemark,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueEntry {
    /// Rolfsen name, `crossings_index`.
    pub name: String,
    /// Trace powers, non-increasing.
    pub powers: Vec<usize>,
    pub alternating: bool,
    pub source: Source,
    #[serde(default)]
    pub ambiguous: bool,
}

impl CatalogueEntry {
    pub fn monomial(&self) -> TraceMonomial {
        TraceMonomial::from_powers(&self.powers).expect("catalogue powers are positive")
    }

    /// `⟨(tr M³)² (tr M²)²⟩` style rendering.
    pub fn mean_label(&self) -> String {
        mean_label(&self.powers)
    }
}

pub fn mean_label(powers: &[usize]) -> String {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &p in powers {
        match runs.last_mut() {
            Some((q, n)) if *q == p => *n += 1,
            _ => runs.push((p, 1)),
        }
    }
    let body: Vec<String> = runs
        .iter()
        .map(|&(p, n)| match n {
            1 => format!("(tr M^{p})"),
            _ => format!("(tr M^{p})^{n}"),
        })
        .collect();
    format!("<{}>", body.join(" "))
}

#[derive(Deserialize)]
struct CatalogueFile {
    version: u32,
    entries: Vec<CatalogueEntry>,
}

pub const CATALOGUE_VERSION: u32 = 1;

fn entries() -> &'static [CatalogueEntry] {
    static TABLE: OnceLock<Vec<CatalogueEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let f: CatalogueFile = serde_json::from_str(include_str!("../data/catalogue.json"))
            .expect("bundled catalogue parses");
        assert_eq!(f.version, CATALOGUE_VERSION);
        f.entries
    })
}

/// Every entry in table order.
pub fn catalogue() -> &'static [CatalogueEntry] {
    entries()
}

fn canonical(powers: &[usize]) -> Vec<usize> {
    let mut p = powers.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// Accepts `3_1` and `3₁`.
fn normalise_name(name: &str) -> String {
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let mut out = String::new();
    for ch in name.trim().chars() {
        if let Some(d) = SUB.iter().position(|&s| s == ch) {
            if !out.contains('_') {
                out.push('_');
            }
            out.push(char::from(b'0' + d as u8));
        } else {
            out.push(ch);
        }
    }
    out
}

pub fn entry(name: &str) -> Result<&'static CatalogueEntry, CatalogueError> {
    let key = normalise_name(name);
    entries()
        .iter()
        .find(|e| e.name == key)
        .ok_or(CatalogueError::UnknownKnot(name.to_string()))
}

pub fn mean_for_knot(name: &str) -> Result<TraceMonomial, CatalogueError> {
    entry(name).map(CatalogueEntry::monomial)
}

/// Every entry with this mean; the order of `powers` does not matter.
pub fn knots_for_mean(powers: &[usize]) -> Vec<&'static CatalogueEntry> {
    let key = canonical(powers);
    entries().iter().filter(|e| e.powers == key).collect()
}

/// `(2n+1)_1 ↔ [2n+1, 2n+1]` for `3 ≤ 2n+1 ≤ max`.
pub fn torus_series(max: usize) -> Vec<(String, Vec<usize>)> {
    (3..=max)
        .step_by(2)
        .map(|n| (format!("{n}_1"), vec![n, n]))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub even_degree: bool,
    pub name_ok: bool,
    /// `None` when the moment exceeds the exact engine's budget.
    pub replica: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogueReport {
    pub entries: Vec<EntryCheck>,
    /// Names whose mean appears more than once, grouped by mean label.
    pub shared: BTreeMap<String, Vec<String>>,
    pub torus_series_ok: bool,
    pub round_trip_ok: bool,
    pub pass: bool,
}

fn valid_name(name: &str) -> bool {
    let mut parts = name.split('_');
    let ok =
        |s: Option<&str>| s.is_some_and(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()));
    ok(parts.next()) && ok(parts.next()) && parts.next().is_none()
}

/// Structural checks on every entry plus the exact replica coefficient of its mean.
pub fn validate_catalogue() -> CatalogueReport {
    validate_with(|m| replica_coefficient(m, Route::Recursive))
}

fn validate_with(
    replica: impl Fn(&TraceMonomial) -> Result<Rational, MomentError> + Sync,
) -> CatalogueReport {
    use rayon::prelude::*;
    let checks: Vec<(EntryCheck, bool)> = entries()
        .par_iter()
        .map(|e| {
            let r = replica(&e.monomial()).ok();
            let nonzero = r
                .as_ref()
                .is_none_or(|r| *r != Rational::from_integer(0.into()));
            let check = EntryCheck {
                name: e.name.clone(),
                even_degree: e.powers.iter().sum::<usize>() % 2 == 0,
                name_ok: valid_name(&e.name) && e.powers == canonical(&e.powers),
                replica: r.map(|r| r.to_string()),
            };
            (check, nonzero)
        })
        .collect();
    let mut shared: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for e in entries() {
        shared
            .entry(e.mean_label())
            .or_default()
            .push(e.name.clone());
    }
    shared.retain(|_, v| v.len() > 1);
    let torus_series_ok = torus_series(7)
        .iter()
        .all(|(name, powers)| entry(name).is_ok_and(|e| &e.powers == powers));
    let round_trip_ok = entries()
        .iter()
        .all(|e| knots_for_mean(&e.powers).iter().any(|f| f.name == e.name));
    let pass = torus_series_ok
        && round_trip_ok
        && checks
            .iter()
            .all(|(c, nz)| c.even_degree && c.name_ok && *nz);
    CatalogueReport {
        entries: checks.into_iter().map(|(c, _)| c).collect(),
        shared,
        torus_series_ok,
        round_trip_ok,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(mean_for_knot("3_1").unwrap().powers(), vec![3, 3]);
        assert_eq!(mean_for_knot("4₁").unwrap().powers(), vec![4, 2, 2]);
        assert_eq!(mean_for_knot("6_3").unwrap().powers(), vec![6, 3, 3]);
        assert_eq!(
            mean_for_knot("9_1"),
            Err(CatalogueError::UnknownKnot("9_1".into()))
        );
        let names = |p: &[usize]| {
            knots_for_mean(p)
                .iter()
                .map(|e| e.name.as_str())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(&[2, 2, 3, 2, 3, 2]), vec!["7_2", "7_4"]);
        assert!(names(&[99]).is_empty());
        let group = knots_for_mean(&[8, 4, 4]);
        assert!(group[0].ambiguous);
        for n in ["8_17", "8_18", "8_19", "8_20", "8_21"] {
            assert!(group.iter().any(|e| e.name == n && !e.ambiguous));
        }
        assert_eq!(group.iter().filter(|e| !e.alternating).count(), 3);
    }

    #[test]
    fn labels_and_names() {
        assert_eq!(mean_label(&[3, 3, 2, 2]), "<(tr M^3)^2 (tr M^2)^2>");
        assert!(valid_name("8_17") && !valid_name("8-17") && !valid_name("8_"));
        assert!(knots_for_mean(&[3, 3, 3, 3]).is_empty());
    }

    #[test]
    fn structure_without_moments() {
        let r = validate_with(|_| Err(MomentError::NotSingleMatrix));
        assert!(r.pass && r.torus_series_ok && r.round_trip_ok);
        assert_eq!(r.shared.len(), 4);
        assert_eq!(r.shared["<(tr M^3)^2 (tr M^2)^4>"], vec!["7_2", "7_4"]);
    }
}
