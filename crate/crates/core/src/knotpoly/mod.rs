//! Kauffman bracket, Jones polynomial, skein checks, Vassiliev data and the Alexander
//! polynomial of planar diagrams.

mod fixtures;
mod pd;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::seifert::{self, SeifertError};
use crate::{IntLaurent, IntPolynomial, Poly, Rational};

pub use fixtures::{fixture, fixture_braid, FixtureFile, FIXTURE_NAMES};
pub use pd::{Crossing, PlanarDiagram};

/// State sums above this many crossings are refused unless the caller raises the cap.
pub const DEFAULT_CROSSING_CAP: usize = 16;

#[derive(Debug, Error)]
pub enum KnotpolyError {
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("{crossings} crossings exceed the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

/// `count[a][l]`: states with `a` A-smoothings and `l` loops.
type StateCounts = Vec<Vec<u64>>;

fn state_counts(d: &PlanarDiagram, range: std::ops::Range<u64>) -> StateCounts {
    let c = d.crossing_count();
    let (index, _) = d.label_index();
    let codes: Vec<[usize; 4]> = d
        .crossings()
        .iter()
        .map(|x| x.code.map(|l| index[&l]))
        .collect();
    let m = index.len();
    let mut counts = vec![vec![0u64; m + 1]; c + 1];
    let mut parent = vec![0usize; m];
    for s in range {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut loops = m;
        for (k, &[a, b, cc, dd]) in codes.iter().enumerate() {
            let pairs = if s >> k & 1 == 0 {
                [(a, b), (cc, dd)]
            } else {
                [(a, dd), (b, cc)]
            };
            for (p, q) in pairs {
                let (rp, rq) = (root(&mut parent, p), root(&mut parent, q));
                if rp != rq {
                    parent[rp] = rq;
                    loops -= 1;
                }
            }
        }
        let a_count = c - s.count_ones() as usize;
        counts[a_count][loops] += 1;
    }
    counts
}

fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn add_counts(mut a: StateCounts, b: StateCounts) -> StateCounts {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
    a
}

fn bracket_from_counts(d: &PlanarDiagram, counts: &StateCounts) -> IntLaurent {
    let c = d.crossing_count() as i64;
    // δ = −A² − A⁻²
    let delta = IntLaurent::from_terms([(2, BigInt::from(-1)), (-2, BigInt::from(-1))]);
    let mut out = IntLaurent::zero();
    for (a, row) in counts.iter().enumerate() {
        for (l, &n) in row.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let loops = l + d.free_loops();
            let term = delta
                .pow(loops as u32 - 1)
                .shift(2 * a as i64 - c)
                .scale(&BigInt::from(n));
            out = &out + &term;
        }
    }
    out
}

fn check_cap(d: &PlanarDiagram, cap: usize) -> Result<(), KnotpolyError> {
    if d.crossing_count() > cap {
        return Err(KnotpolyError::CapExceeded {
            crossings: d.crossing_count(),
            cap,
        });
    }
    Ok(())
}

/// `⟨D⟩` in `A`, normalised so a single circle is 1; `2^c` states split across threads.
pub fn kauffman_bracket(d: &PlanarDiagram, cap: usize) -> Result<IntLaurent, KnotpolyError> {
    check_cap(d, cap)?;
    if d.crossing_count() == 0 {
        return Ok(trivial_bracket(d.free_loops().max(1)));
    }
    let states = 1u64 << d.crossing_count();
    let chunk = (states / 64).max(1);
    let counts = (0..states.div_ceil(chunk))
        .into_par_iter()
        .map(|k| state_counts(d, k * chunk..((k + 1) * chunk).min(states)))
        .reduce_with(add_counts)
        .expect("at least one chunk");
    Ok(bracket_from_counts(d, &counts))
}

/// Single-threaded [`kauffman_bracket`].
pub fn kauffman_bracket_sequential(
    d: &PlanarDiagram,
    cap: usize,
) -> Result<IntLaurent, KnotpolyError> {
    check_cap(d, cap)?;
    if d.crossing_count() == 0 {
        return Ok(trivial_bracket(d.free_loops().max(1)));
    }
    let counts = state_counts(d, 0..1u64 << d.crossing_count());
    Ok(bracket_from_counts(d, &counts))
}

fn trivial_bracket(mu: usize) -> IntLaurent {
    IntLaurent::from_terms([(2, BigInt::from(-1)), (-2, BigInt::from(-1))]).pow(mu as u32 - 1)
}

/// Laurent polynomial in `t^{1/2}`: coefficient of `t^{h/2}` stored at exponent `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "Vec<(i64, String)>")]
pub struct JonesPolynomial(IntLaurent);

impl From<JonesPolynomial> for Vec<(i64, String)> {
    fn from(v: JonesPolynomial) -> Self {
        v.0.terms().map(|(h, c)| (h, c.to_string())).collect()
    }
}

impl JonesPolynomial {
    pub fn from_half_exponents(p: IntLaurent) -> Self {
        JonesPolynomial(p)
    }

    /// From a Laurent polynomial in `t` with integer exponents.
    pub fn from_t(p: &IntLaurent) -> Self {
        JonesPolynomial(p.substitute_power(2))
    }

    pub fn half_exponents(&self) -> &IntLaurent {
        &self.0
    }

    /// Coefficient of `t^{h/2}`.
    pub fn coeff_half(&self, h: i64) -> BigInt {
        self.0.coeff(h)
    }

    /// `Some` in `t` when every exponent is an integer.
    pub fn to_t(&self) -> Option<IntLaurent> {
        self.0.compress(2)
    }

    /// `t ↦ t⁻¹`.
    pub fn mirror(&self) -> Self {
        JonesPolynomial(self.0.substitute_power(-1))
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.0.terms().map(|(_, c)| c.clone()).sum()
    }

    /// Coefficients of `V(eˣ) = Σ_j v_j x^j` for `j ≤ jmax`.
    pub fn vassiliev(&self, jmax: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); jmax + 1];
        for (h, c) in self.0.terms() {
            let x = Rational::new(BigInt::from(h), BigInt::from(2));
            let mut term = Rational::from_integer(c.clone());
            for (j, slot) in out.iter_mut().enumerate() {
                if j > 0 {
                    term = term * &x / BigInt::from(j);
                }
                *slot += &term;
            }
        }
        out
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        for (i, (h, c)) in self.0.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let power = match (h % 2 == 0, h / 2) {
                (true, 0) => String::new(),
                (true, 1) => "t".into(),
                (true, e) if e > 0 => format!("t^{e}"),
                (true, e) => format!("t^({e})"),
                (false, _) => format!("t^({h}/2)"),
            };
            if power.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{power}")?;
        }
        Ok(())
    }
}

/// `(−A³)^{−w} ⟨D⟩` with `t = A⁻⁴`.
pub fn jones_polynomial(d: &PlanarDiagram, cap: usize) -> Result<JonesPolynomial, KnotpolyError> {
    let b = kauffman_bracket(d, cap)?;
    jones_from_bracket(&b, d.writhe())
}

pub fn jones_from_bracket(b: &IntLaurent, writhe: i64) -> Result<JonesPolynomial, KnotpolyError> {
    let sign = if writhe % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let f = b.shift(-3 * writhe).scale(&sign);
    // A^e = t^{−e/4} = (t^{1/2})^{−e/2}
    if !f.exponents_divisible_by(2) {
        return Err(KnotpolyError::MalformedDiagram(
            "bracket has odd powers of A".into(),
        ));
    }
    let half = f.compress(2).expect("even exponents");
    Ok(JonesPolynomial(half.substitute_power(-1)))
}

/// `(−1)^{μ−1} (t^{1/2} + t^{−1/2})^{μ−1}`.
pub fn trivial_link_jones(mu: usize) -> JonesPolynomial {
    let base = IntLaurent::from_terms([(1, BigInt::from(-1)), (-1, BigInt::from(-1))]);
    JonesPolynomial(base.pow(mu.saturating_sub(1) as u32))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeinCheck {
    pub holds: bool,
    pub residual: JonesPolynomial,
}

/// `t⁻¹ V₊ − t V₋ − (t^{1/2} − t^{−1/2}) V₀`.
pub fn skein_check(
    plus: &JonesPolynomial,
    minus: &JonesPolynomial,
    zero: &JonesPolynomial,
) -> SkeinCheck {
    let d = IntLaurent::from_terms([(1, BigInt::one()), (-1, BigInt::from(-1))]);
    let r = &(&plus.0.shift(-2) - &minus.0.shift(2)) - &(&d * &zero.0);
    SkeinCheck {
        holds: r.is_zero(),
        residual: JonesPolynomial(r),
    }
}

/// Jones polynomials of `D`, `D` with crossing `i` switched and `D` smoothed at `i`,
/// ordered `(V₊, V₋, V₀)`.
pub fn skein_triple(
    d: &PlanarDiagram,
    i: usize,
    cap: usize,
) -> Result<[JonesPolynomial; 3], KnotpolyError> {
    let here = jones_polynomial(d, cap)?;
    let switched = jones_polynomial(&d.switch(i), cap)?;
    let zero = jones_polynomial(&d.smooth(i), cap)?;
    Ok(if d.crossings()[i].sign > 0 {
        [here, switched, zero]
    } else {
        [switched, here, zero]
    })
}

/// `v_j = Σ_h c_h (h/2)^j / j!`, the Taylor coefficients of `V(eˣ)`.
pub fn vassiliev_coefficients(
    d: &PlanarDiagram,
    jmax: usize,
    cap: usize,
) -> Result<Vec<Rational>, KnotpolyError> {
    Ok(jones_polynomial(d, cap)?.vassiliev(jmax))
}

/// Alexander polynomial from the Fox matrix of the diagram, normalised to be
/// palindromic with positive value at 1. Any number of crossings.
pub fn alexander_from_pd(d: &PlanarDiagram) -> Result<IntPolynomial, KnotpolyError> {
    if d.component_count() != 1 {
        return Err(KnotpolyError::MalformedDiagram(
            "Alexander polynomial needs a knot".into(),
        ));
    }
    let c = d.crossing_count();
    if c == 0 {
        return Ok(Poly::constant(BigInt::one()));
    }
    // arcs: edges joined through over-passes
    let (index, mut uf) = d.label_index();
    for x in d.crossings() {
        uf.union(index[&x.code[1]], index[&x.code[3]]);
    }
    let mut arc_of = std::collections::BTreeMap::new();
    for i in 0..index.len() {
        let r = uf.find(i);
        let n = arc_of.len();
        arc_of.entry(r).or_insert(n);
    }
    let arc = |l: u32, uf: &mut pd::UnionFindHandle| arc_of[&uf.find(index[&l])];
    let t = Poly::monomial(BigInt::one(), 1);
    let one = Poly::constant(BigInt::one());
    let mut m = vec![vec![IntPolynomial::zero(); arc_of.len()]; c];
    for (row, x) in m.iter_mut().zip(d.crossings()) {
        let over = arc(x.code[1], &mut uf);
        let (a, cc) = (arc(x.code[0], &mut uf), arc(x.code[2], &mut uf));
        let (ia, ic) = if x.sign > 0 {
            (t.clone(), -&one)
        } else {
            (-&one, t.clone())
        };
        row[over] = &row[over] + &(&one - &t);
        row[a] = &row[a] + &ia;
        row[cc] = &row[cc] + &ic;
    }
    let minor: Vec<Vec<IntPolynomial>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    let det = seifert::determinant(minor);
    if det.is_zero() {
        return Err(KnotpolyError::MalformedDiagram(
            "vanishing Fox minor".into(),
        ));
    }
    Ok(seifert::normalize_alexander(&det))
}

/// Conway polynomial via [`alexander_from_pd`].
pub fn conway_from_pd(d: &PlanarDiagram) -> Result<IntPolynomial, KnotpolyError> {
    Ok(seifert::conway_from_alexander(&alexander_from_pd(d)?)?)
}
