//! Polynomial evaluators with running rounding-error estimates.

use num_bigint::BigInt;
use num_traits::Signed;

use super::real::{Complex, Real};
use crate::seifert::alexander_trivalent_recursive;
use crate::IntPolynomial;

/// `p(z)`, `p'(z)` and an upper estimate of the rounding error in `p(z)`, all three
/// divided by `2^scale` to stay in range.
#[derive(Clone, Debug)]
pub struct Evaluation<T> {
    pub value: Complex<T>,
    pub derivative: Complex<T>,
    pub error: T,
    pub scale: i32,
}

const RESCALE: i32 = 256;

fn shrink<T: Real>(x: &T) -> T {
    x.lift(2f64.powi(-RESCALE))
}

/// Closure evaluating at a fixed working precision.
pub type Lifted<'a, T> = Box<dyn Fn(&Complex<T>) -> Evaluation<T> + Sync + 'a>;

/// A polynomial of known degree that can be evaluated at any working precision.
///
/// The `log2_*` quantities describe the exact integer coefficients.
pub trait Evaluator: Sync {
    fn degree(&self) -> usize;
    fn log2_leading(&self) -> f64;
    fn log2_constant(&self) -> f64;
    /// `log2 Σ|a_i|`.
    fn log2_norm(&self) -> f64;
    fn lift<T: Real>(&self, digits: u32) -> Lifted<'_, T>;
}

fn log2_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(60);
    let top: BigInt = x.abs() >> shift;
    num_traits::ToPrimitive::to_f64(&top)
        .unwrap_or(f64::NAN)
        .log2()
        + shift as f64
}

fn log2_sum(p: &IntPolynomial) -> f64 {
    let s: BigInt = p.coeffs().iter().map(|c| c.abs()).sum();
    log2_big(&s)
}

/// Horner evaluation from the integer coefficients.
#[derive(Clone, Debug)]
pub struct CoefficientEvaluator {
    coeffs: Vec<BigInt>,
    norm: f64,
}

impl CoefficientEvaluator {
    /// `None` for the zero polynomial.
    pub fn new(p: &IntPolynomial) -> Option<Self> {
        p.degree()?;
        Some(CoefficientEvaluator {
            coeffs: p.coeffs().to_vec(),
            norm: log2_sum(p),
        })
    }
}

impl Evaluator for CoefficientEvaluator {
    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
    fn log2_leading(&self) -> f64 {
        log2_big(self.coeffs.last().expect("non-empty"))
    }
    fn log2_constant(&self) -> f64 {
        log2_big(&self.coeffs[0])
    }
    fn log2_norm(&self) -> f64 {
        self.norm
    }

    fn lift<T: Real>(&self, digits: u32) -> Lifted<'_, T> {
        let a: Vec<T> = self
            .coeffs
            .iter()
            .map(|c| T::from_bigint(c, digits))
            .collect();
        let abs: Vec<T> = a.iter().map(Real::abs).collect();
        let gamma = T::from_f64(0.0, digits).unit_roundoff()
            * T::from_f64(4.0 * (a.len() + 1) as f64, digits);
        Box::new(move |z: &Complex<T>| {
            let zero = Complex::zero_like(&z.re);
            let mut p = zero.clone();
            let mut dp = zero;
            let r = z.abs();
            let mut mu = r.lift(0.0);
            let mut scale = 0;
            let mut unit = r.lift(1.0);
            for (c, m) in a.iter().zip(&abs).rev() {
                dp = dp * z.clone() + p.clone();
                p = p * z.clone() + Complex::new(c.clone(), c.lift(0.0)).scale(&unit);
                mu = mu * r.clone() + m.clone() * unit.clone();
                if mu.log2_abs() > RESCALE as f64 {
                    let f = shrink(&mu);
                    p = p.scale(&f);
                    dp = dp.scale(&f);
                    mu = mu * f.clone();
                    unit = unit * f;
                    scale += RESCALE;
                }
            }
            Evaluation {
                value: p,
                derivative: dp,
                error: gamma.clone() * mu,
                scale,
            }
        })
    }
}

/// `det(tV − Vᵀ)` for upper-bidiagonal `V` with diagonal `a` and unit superdiagonal,
/// evaluated through `D_j = a_j (t−1) D_{j−1} + t D_{j−2}` in `O(n)` per point.
///
/// The error estimate sums the local magnitudes of every step and scales by `n u`.
/// That is sound while the recurrence is neutrally stable, which holds for
/// the trivalent family on the arc `|arg t| ≤ π/3` where its zeros lie.
#[derive(Clone, Debug)]
pub struct BidiagonalEvaluator {
    diag: Vec<i64>,
    leading: f64,
    constant: f64,
    norm: f64,
}

impl BidiagonalEvaluator {
    /// The trivalent family, diagonal `(1, 2, …, 2, 1)` of size `2g`; `None` for `g = 0`.
    pub fn trivalent(g: u32) -> Option<Self> {
        let p = alexander_trivalent_recursive(g).ok()?;
        let n = 2 * g as usize;
        let diag = (0..n)
            .map(|i| if i == 0 || i == n - 1 { 1 } else { 2 })
            .collect();
        Some(BidiagonalEvaluator {
            diag,
            leading: log2_big(p.leading().expect("non-zero")),
            constant: log2_big(&p.coeff(0)),
            norm: log2_sum(&p),
        })
    }
}

impl Evaluator for BidiagonalEvaluator {
    fn degree(&self) -> usize {
        self.diag.len()
    }
    fn log2_leading(&self) -> f64 {
        self.leading
    }
    fn log2_constant(&self) -> f64 {
        self.constant
    }
    fn log2_norm(&self) -> f64 {
        self.norm
    }

    fn lift<T: Real>(&self, digits: u32) -> Lifted<'_, T> {
        let a: Vec<T> = self
            .diag
            .iter()
            .map(|&d| T::from_f64(d as f64, digits))
            .collect();
        let gamma = T::from_f64(0.0, digits).unit_roundoff()
            * T::from_f64(4.0 * (a.len() + 1) as f64, digits);
        Box::new(move |z: &Complex<T>| {
            let one = Complex::new(z.re.lift(1.0), z.re.lift(0.0));
            let zm1 = z.clone() - one.clone();
            let abs_z = z.abs();
            let abs_zm1 = zm1.abs();
            let mut d_prev = one;
            let mut dd_prev = Complex::zero_like(&z.re);
            let mut d = zm1.scale(&a[0]);
            let mut dd = Complex::new(a[0].clone(), z.re.lift(0.0));
            let mut mag_prev = z.re.lift(1.0);
            let mut mag = d.abs();
            let mut sum = mag.clone();
            let mut scale = 0;
            for aj in &a[1..] {
                if sum.log2_abs() > RESCALE as f64 {
                    let f = shrink(&sum);
                    d = d.scale(&f);
                    dd = dd.scale(&f);
                    d_prev = d_prev.scale(&f);
                    dd_prev = dd_prev.scale(&f);
                    mag = mag * f.clone();
                    mag_prev = mag_prev * f.clone();
                    sum = sum * f;
                    scale += RESCALE;
                }
                let step = zm1.scale(aj);
                let next = step.clone() * d.clone() + z.clone() * d_prev.clone();
                let dnext =
                    d.scale(aj) + step * dd.clone() + d_prev.clone() + z.clone() * dd_prev.clone();
                let local = aj.abs() * abs_zm1.clone() * mag.clone() + abs_z.clone() * mag_prev;
                sum = sum + local;
                d_prev = std::mem::replace(&mut d, next);
                dd_prev = std::mem::replace(&mut dd, dnext);
                mag_prev = std::mem::replace(&mut mag, d.abs());
            }
            Evaluation {
                value: d,
                derivative: dd,
                error: gamma.clone() * sum,
                scale,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::real::MpFloat;

    #[test]
    fn recurrence_matches_coefficients() {
        for g in [1u32, 3, 7] {
            let p = alexander_trivalent_recursive(g).unwrap();
            let c = CoefficientEvaluator::new(&p).unwrap();
            let r = BidiagonalEvaluator::trivalent(g).unwrap();
            assert_eq!(c.degree(), r.degree());
            assert!((c.log2_norm() - r.log2_norm()).abs() < 1e-12);
            assert!((c.log2_leading() - 2.0 * (g as f64 - 1.0)).abs() < 1e-12);
            let ec = c.lift::<MpFloat>(40);
            let er = r.lift::<MpFloat>(40);
            for (x, y) in [(0.3, 0.8), (-1.2, 0.1), (0.5, 0.866)] {
                let z = Complex::from_f64(x, y, 40);
                let a = ec(&z);
                let b = er(&z);
                assert_eq!((a.scale, b.scale), (0, 0));
                let dv = (a.value - b.value).log2_abs();
                let dd = (a.derivative - b.derivative).log2_abs();
                assert!(dv < -100.0 && dd < -100.0, "g={g} z=({x},{y})");
            }
        }
    }

    #[test]
    fn horner_error_estimate_covers_f64_error() {
        let p = alexander_trivalent_recursive(6).unwrap();
        let c = CoefficientEvaluator::new(&p).unwrap();
        let lo = c.lift::<f64>(15);
        let hi = c.lift::<MpFloat>(60);
        let z = Complex::from_f64(0.7, 0.7, 15);
        let zh = Complex::from_f64(0.7, 0.7, 60);
        let a = lo(&z);
        let b = hi(&zh);
        let err = ((a.value.re - b.value.re.to_f64()).powi(2)
            + (a.value.im - b.value.im.to_f64()).powi(2))
        .sqrt();
        assert!(err <= a.error, "{err} > {}", a.error);
        assert!(a.error > 0.0);
        // far from the circle both evaluators rescale but keep the Newton ratio
        let far = Complex::from_f64(-40.0, 7.0, 15);
        let r = BidiagonalEvaluator::trivalent(150).unwrap().lift::<f64>(15)(&far);
        assert!(r.scale > 0);
        let newton = r.value / r.derivative;
        assert!(newton.re.is_finite() && newton.im.is_finite());
    }
}
