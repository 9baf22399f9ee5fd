//! Aberth–Ehrlich simultaneous iteration (Gauss–Seidel ordering).

use super::eval::{Evaluation, Evaluator};
use super::real::{Complex, Real};

pub(crate) struct Iterated<T> {
    pub roots: Vec<Complex<T>>,
    pub evals: Vec<Evaluation<T>>,
    pub converged: bool,
}

/// Starting points on a circle of radius `1.05 ρ`, `ρ = |a_0/a_n|^{1/n}`, rotated off the
/// real axis so that conjugate pairs do not start symmetric.
pub(crate) fn initial_guesses<E: Evaluator>(ev: &E) -> Vec<(f64, f64)> {
    let n = ev.degree();
    let rho = 1.05 * ((ev.log2_constant() - ev.log2_leading()) / n as f64).exp2();
    (0..n)
        .map(|k| {
            let th = std::f64::consts::TAU * (k as f64 + 0.25) / n as f64 + 0.4;
            (rho * th.cos(), rho * th.sin())
        })
        .collect()
}

/// `n` starting points interpolated from the argument quantiles of a related root
/// set (sorted by argument), nudged off any symmetry of the source.
pub(crate) fn continued_guesses(prev: &[(f64, f64)], n: usize) -> Vec<(f64, f64)> {
    let m = prev.len();
    let polar: Vec<(f64, f64)> = prev
        .iter()
        .map(|&(x, y)| (y.atan2(x), x.hypot(y)))
        .collect();
    let nudge = 1e-3 / n as f64;
    (0..n)
        .map(|k| {
            let q = ((k as f64 + 0.5) * m as f64 / n as f64 - 0.5).clamp(0.0, (m - 1) as f64);
            let i = (q.floor() as usize).min(m.saturating_sub(2));
            let f = if m == 1 { 0.0 } else { q - i as f64 };
            let (a0, r0) = polar[i];
            let (a1, r1) = polar[(i + 1).min(m - 1)];
            let a = a0 + f * (a1 - a0) + nudge;
            let r = r0 + f * (r1 - r0);
            (r * a.cos(), r * a.sin())
        })
        .collect()
}

fn finite<T: Real>(z: &Complex<T>) -> bool {
    z.re.to_f64().is_finite() && z.im.to_f64().is_finite()
}

pub(crate) fn iterate<T: Real, E: Evaluator>(
    ev: &E,
    digits: u32,
    start: &[(f64, f64)],
    max_iterations: usize,
) -> Iterated<T> {
    let eval = ev.lift::<T>(digits);
    let mut z: Vec<Complex<T>> = start
        .iter()
        .map(|&(x, y)| Complex::from_f64(x, y, digits))
        .collect();
    let n = z.len();
    let u2 = {
        let u = T::from_f64(0.0, digits).unit_roundoff();
        T::from_f64(4.0, digits) * u
    };
    let mut done = vec![false; n];
    let mut converged = false;
    for _ in 0..max_iterations {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let e = eval(&z[i]);
            if e.value.log2_abs() <= e.error.log2_abs() {
                done[i] = true;
                continue;
            }
            let newton = e.value / e.derivative;
            let mut s = Complex::zero_like(&z[i].re);
            for j in 0..n {
                if j != i {
                    s = s + (z[i].clone() - z[j].clone()).recip();
                }
            }
            let one = Complex::new(z[i].re.lift(1.0), z[i].re.lift(0.0));
            let w = newton.clone() / (one - newton * s);
            if !finite(&w) {
                // a collision or overflow; the caller escalates precision
                return Iterated {
                    evals: Vec::new(),
                    roots: z,
                    converged: false,
                };
            }
            if w.log2_abs() <= (z[i].abs() * u2.clone()).log2_abs() {
                done[i] = true;
            }
            z[i] = z[i].clone() - w;
        }
        if done.iter().all(|&d| d) {
            converged = true;
            break;
        }
    }
    let evals = z.iter().map(eval).collect();
    Iterated {
        roots: z,
        evals,
        converged,
    }
}
