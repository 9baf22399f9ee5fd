//! All complex zeros of integer polynomials, and the geometry of the unit-circle locus.
//!
//! Roots come from Aberth–Ehrlich iteration on a precision ladder: a pass in `f64`,
//! then multiprecision passes at 32, 64, 128, … digits. Each pass ends with
//! Weierstrass inclusion discs `n (|p(z_i)| + ε_i) / |a_n ∏_{j≠i}(z_i − z_j)|`;
//! when these are pairwise disjoint every disc holds exactly one zero and the set is
//! certified.

mod aberth;
mod eval;
mod locus;
mod real;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use eval::{BidiagonalEvaluator, CoefficientEvaluator, Evaluation, Evaluator, Lifted};
pub use locus::{
    angular_density, arc_bounds, edge_exponent, edge_exponent_angles, unit_circle_report,
    ArcBounds, EdgeFit, EdgeFitConfig, Histogram, UnitCircleReport, EDGE_ANGLE,
};
pub use real::{Complex, MpFloat, Real};

use crate::IntPolynomial;

/// Decimal digits at the top of the precision ladder.
pub const DEFAULT_MAX_DIGITS: u32 = 1024;
/// Residual bound `|p(r)| / ‖p‖₁` accepted for an uncertified result.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-12;

const LADDER: [u32; 6] = [32, 64, 128, 256, 512, 1024];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZerosError {
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("no convergence up to {digits} digits (worst residual {residual:e})")]
    NoConvergence { digits: u32, residual: f64 },
    #[error("root {index} is off the unit circle by {deviation:e}")]
    OffCircle { index: usize, deviation: f64 },
    #[error("insufficient data: {got} usable, {needed} needed")]
    InsufficientData { needed: usize, got: usize },
}

#[derive(Clone, Debug)]
pub struct RootConfig {
    pub max_digits: u32,
    /// Target inclusion radius, relative to `max(1, |z|)`.
    pub radius_tol: f64,
    pub residual_tol: f64,
    pub max_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            max_digits: DEFAULT_MAX_DIGITS,
            radius_tol: 1e-14,
            residual_tol: DEFAULT_RESIDUAL_TOL,
            max_iterations: 500,
        }
    }
}

impl RootConfig {
    /// Single `f64` pass with inclusion radii up to `1e-8`; meant for family sweeps
    /// through a stable evaluator.
    pub fn sweep() -> Self {
        RootConfig {
            max_digits: 15,
            radius_tol: 1e-8,
            ..Default::default()
        }
    }
}

/// One zero, rounded to `f64`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    /// `|p(r)| / ‖p‖₁` at working precision.
    pub residual: f64,
    /// Inclusion radius; `inf` when not available.
    pub radius: f64,
}

impl Root {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
    pub fn arg(&self) -> f64 {
        self.im.atan2(self.re)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSet {
    pub degree: usize,
    /// Sorted by argument, then modulus.
    pub roots: Vec<Root>,
    /// Digits of the pass that produced the roots (15 for `f64`).
    pub digits: u32,
    /// Inclusion discs are disjoint and within `radius_tol`.
    pub certified: bool,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }
}

struct Pass {
    roots: Vec<Root>,
    start: Vec<(f64, f64)>,
    converged: bool,
    certified: bool,
    worst: f64,
}

fn run_pass<T: Real, E: Evaluator>(
    ev: &E,
    digits: u32,
    start: &[(f64, f64)],
    cfg: &RootConfig,
) -> Pass {
    let it = aberth::iterate::<T, E>(ev, digits, start, cfg.max_iterations);
    let n = it.roots.len();
    let approx: Vec<(f64, f64)> = it.roots.iter().map(Complex::to_f64).collect();
    if it.evals.is_empty() {
        return Pass {
            roots: Vec::new(),
            start: approx,
            converged: false,
            certified: false,
            worst: f64::INFINITY,
        };
    }
    let lead = ev.log2_leading();
    let norm = ev.log2_norm();
    let mut roots = Vec::with_capacity(n);
    for i in 0..n {
        let e = &it.evals[i];
        let p = e.value.abs();
        let bound = (p.clone() + e.error.clone()).log2_abs();
        let mut prod = 0.0;
        for j in 0..n {
            if j != i {
                prod += (it.roots[i].clone() - it.roots[j].clone()).log2_abs();
            }
        }
        let log_r = (n as f64).log2() + bound + e.scale as f64 - lead - prod;
        let (re, im) = approx[i];
        // rounding the centre to f64 adds half an ulp per component
        let radius = log_r.exp2() + f64::EPSILON * re.hypot(im);
        let residual = (p.log2_abs() + e.scale as f64 - norm).exp2();
        roots.push(Root {
            re,
            im,
            residual,
            radius: if radius.is_nan() {
                f64::INFINITY
            } else {
                radius
            },
        });
    }
    let mut certified = roots
        .iter()
        .all(|r| r.radius <= cfg.radius_tol * r.modulus().max(1.0));
    if certified {
        'outer: for i in 0..n {
            for j in i + 1..n {
                let d = (roots[i].re - roots[j].re).hypot(roots[i].im - roots[j].im);
                if d <= roots[i].radius + roots[j].radius {
                    certified = false;
                    break 'outer;
                }
            }
        }
    }
    let worst = roots
        .iter()
        .map(|r| r.radius / r.modulus().max(1.0))
        .fold(0.0, f64::max);
    Pass {
        roots,
        start: approx,
        converged: it.converged,
        certified,
        worst,
    }
}

fn well_separated(pts: &[(f64, f64)]) -> bool {
    let mut v: Vec<_> = pts.to_vec();
    v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    v.windows(2)
        .all(|w| (w[0].0 - w[1].0).hypot(w[0].1 - w[1].1) > 1e-12)
        && pts.iter().all(|p| p.0.is_finite() && p.1.is_finite())
}

fn finish(degree: usize, mut roots: Vec<Root>, digits: u32, certified: bool) -> RootSet {
    roots.sort_by(|a, b| {
        a.arg()
            .total_cmp(&b.arg())
            .then(a.modulus().total_cmp(&b.modulus()))
    });
    RootSet {
        degree,
        roots,
        digits,
        certified,
    }
}

/// All roots of the polynomial behind `ev`, climbing the precision ladder until the
/// inclusion discs certify them.
///
/// If the top of the ladder is reached without a certificate, the roots are returned
/// uncertified provided every residual is below `residual_tol`.
pub fn find_roots_evaluator<E: Evaluator>(ev: &E, cfg: &RootConfig) -> Result<RootSet, ZerosError> {
    find_roots_seeded(ev, None, cfg)
}

/// [`find_roots_evaluator`] with the `f64` pass started from points interpolated
/// along a related root set, typically the previous member of a family.
pub fn find_roots_seeded<E: Evaluator>(
    ev: &E,
    seed: Option<&RootSet>,
    cfg: &RootConfig,
) -> Result<RootSet, ZerosError> {
    let n = ev.degree();
    if n == 0 {
        return Err(ZerosError::InvalidPolynomial("degree 0".into()));
    }
    if ev.log2_constant() == f64::NEG_INFINITY {
        return Err(ZerosError::InvalidPolynomial("zero constant term".into()));
    }
    let fresh = aberth::initial_guesses(ev);
    let first = match seed {
        Some(s) if !s.roots.is_empty() => {
            let pts: Vec<(f64, f64)> = s.roots.iter().map(|r| (r.re, r.im)).collect();
            aberth::continued_guesses(&pts, n)
        }
        _ => fresh.clone(),
    };
    let mut pass = run_pass::<f64, E>(ev, 15, &first, cfg);
    let mut digits = 15;
    let top = LADDER.iter().copied().rfind(|&d| d <= cfg.max_digits);
    for &level in LADDER.iter().filter(|&&d| d <= cfg.max_digits) {
        if pass.certified {
            break;
        }
        // skip rungs the last pass shows to be hopeless
        let needed = if pass.worst.is_finite() && pass.worst > 0.0 {
            digits as f64 + (pass.worst / cfg.radius_tol).log10() + 4.0
        } else {
            0.0
        };
        if (level as f64) < needed && Some(level) < top {
            continue;
        }
        let start = if pass.converged && well_separated(&pass.start) {
            pass.start.clone()
        } else {
            fresh.clone()
        };
        pass = run_pass::<MpFloat, E>(ev, level, &start, cfg);
        digits = level;
    }
    if pass.certified {
        return Ok(finish(n, pass.roots, digits, true));
    }
    let residual = if pass.roots.len() == n {
        pass.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    if residual < cfg.residual_tol {
        Ok(finish(n, pass.roots, digits, false))
    } else {
        Err(ZerosError::NoConvergence { digits, residual })
    }
}

/// All roots of `p` with multiplicity; a `t^k` factor contributes `k` exact zeros.
pub fn find_roots(p: &IntPolynomial) -> Result<RootSet, ZerosError> {
    find_roots_with(p, &RootConfig::default())
}

pub fn find_roots_with(p: &IntPolynomial, cfg: &RootConfig) -> Result<RootSet, ZerosError> {
    let degree = p
        .degree()
        .filter(|&d| d > 0)
        .ok_or_else(|| ZerosError::InvalidPolynomial("degree must be at least 1".into()))?;
    let k = p.low_order();
    let zeros = (0..k).map(|_| Root {
        re: 0.0,
        im: 0.0,
        residual: 0.0,
        radius: 0.0,
    });
    if k == degree {
        return Ok(finish(degree, zeros.collect(), 15, true));
    }
    let ev = CoefficientEvaluator::new(&p.strip_low()).expect("non-zero");
    let mut set = find_roots_evaluator(&ev, cfg)?;
    set.roots.extend(zeros);
    Ok(finish(degree, set.roots, set.digits, set.certified))
}

/// Roots of the trivalent Alexander polynomial at genus `g`, evaluated through the
/// `O(g)` recurrence rather than the coefficients.
pub fn trivalent_roots(g: u32, cfg: &RootConfig) -> Result<RootSet, ZerosError> {
    let ev = BidiagonalEvaluator::trivalent(g)
        .ok_or_else(|| ZerosError::InvalidPolynomial("g must be at least 1".into()))?;
    find_roots_evaluator(&ev, cfg)
}

/// Genera per block in [`trivalent_sweep`]. Fixed, so results do not depend on the
/// thread count.
pub const SWEEP_BLOCK: u32 = 25;

/// `trivalent_roots` for `g = 1..=gmax`. Contiguous blocks of [`SWEEP_BLOCK`] genera run in
/// parallel; within a block each genus is seeded from the roots of the one before.
pub fn trivalent_sweep(gmax: u32, cfg: &RootConfig) -> Result<Vec<(u32, RootSet)>, ZerosError> {
    let size = SWEEP_BLOCK;
    let starts: Vec<u32> = (1..=gmax).step_by(size as usize).collect();
    let parts: Result<Vec<Vec<(u32, RootSet)>>, ZerosError> = starts
        .into_par_iter()
        .map(|lo| {
            let mut out: Vec<(u32, RootSet)> = Vec::new();
            for g in lo..=(lo + size - 1).min(gmax) {
                let ev = BidiagonalEvaluator::trivalent(g).expect("g >= 1");
                let set = find_roots_seeded(&ev, out.last().map(|(_, s)| s), cfg)?;
                out.push((g, set));
            }
            Ok(out)
        })
        .collect();
    Ok(parts?.into_iter().flatten().collect())
}
