//! Large-`N` limit of the one-point function against `J₁(2t)/t`.

use num_traits::{Float, ToPrimitive};

use super::factorial;
use crate::exactmoments::single_trace_moment;
use crate::Rational;

/// `J₁(x) = (1/2π) ∫_0^{2π} cos(τ − x sin τ) dτ` by the periodic trapezoid rule,
/// which converges geometrically once the node count exceeds `|x|`.
pub fn bessel_j1<F: Float>(x: F) -> F {
    let nodes = 64 + 2 * x.abs().ceil().to_usize().unwrap_or(0);
    let two_pi = F::from(std::f64::consts::TAU).unwrap();
    let h = two_pi / F::from(nodes).unwrap();
    let mut acc = F::zero();
    for i in 0..nodes {
        let tau = h * F::from(i).unwrap();
        acc = acc + (tau - x * tau.sin()).cos();
    }
    acc / F::from(nodes).unwrap()
}

/// `J₁(2t)/t`, equal to 1 at `t = 0`.
pub fn bessel_limit(t: f64) -> f64 {
    if t == 0.0 {
        1.0
    } else {
        bessel_j1(2.0 * t) / t
    }
}

/// Coefficients `c_j = ⟨tr M^{2j}⟩ / (N^{j+1} (2j)!)` evaluated exactly at `n`.
pub fn scaled_coefficients(n: u64, jmax: usize) -> Vec<f64> {
    let nn = Rational::from_integer(n.into());
    (0..=jmax)
        .map(|j| {
            let m = single_trace_moment(2 * j).eval(&nn);
            let c = m / (num_traits::pow(nn.clone(), j + 1) * factorial(2 * j as u32));
            c.to_f64().unwrap_or(f64::NAN)
        })
        .collect()
}

/// `U` at imaginary argument with `σ² → −t²/N`: `Σ_j (−1)^j t^{2j} c_j`.
pub fn scaled_onepoint(coeffs: &[f64], t: f64) -> f64 {
    let t2 = t * t;
    let mut pow = 1.0;
    let mut acc = 0.0;
    for (j, c) in coeffs.iter().enumerate() {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * c * pow;
        pow *= t2;
    }
    acc
}

/// Sup-norm deviation of the scaled series from `J₁(2t)/t` on `samples` points of `[0, tmax]`.
pub fn bessel_large_n_check(n: u64, tmax: f64, samples: usize) -> f64 {
    // t^{2j} c_j ≲ tmax^{2j}/(j!(j+1)!) is far below f64 resolution by j = 4 tmax + 20
    let jmax = (4.0 * tmax).ceil() as usize + 20;
    let coeffs = scaled_coefficients(n, jmax);
    let samples = samples.max(2);
    (0..samples)
        .map(|i| {
            let t = tmax * i as f64 / (samples - 1) as f64;
            (scaled_onepoint(&coeffs, t) - bessel_limit(t)).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j1_reference_values() {
        // J₁(1) and J₁(2.5) to 15 digits
        assert!((bessel_j1(1.0f64) - 0.440_050_585_744_933_5).abs() < 1e-14);
        assert!((bessel_j1(2.5f64) - 0.497_094_102_464_274_5).abs() < 1e-14);
        assert!((bessel_j1(1.0f32) - 0.440_050_6).abs() < 1e-6);
    }

    #[test]
    fn converges_with_n() {
        let d10 = bessel_large_n_check(10, 2.0, 41);
        let d50 = bessel_large_n_check(50, 2.0, 41);
        let d200 = bessel_large_n_check(200, 2.0, 41);
        assert!(d200 < 1e-3, "{d200}");
        assert!(d10 > d50 && d50 > d200);
        assert!((scaled_onepoint(&scaled_coefficients(200, 5), 0.0) - 1.0).abs() < 1e-15);
    }
}
