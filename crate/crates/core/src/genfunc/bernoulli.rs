//! One-loop coefficients of `½ log(sinh(x/2)/(x/2))` and the Bernoulli numbers they match.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::factorial;
use crate::Rational;

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn binomial(n: u32, k: u32) -> Rational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `B_0 ..= B_nmax` from `Σ_{k=0}^{m} C(m+1, k) B_k = 0` (so `B_1 = −1/2`).
pub fn bernoulli_numbers(nmax: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=nmax as u32 {
        let s: Rational = (0..m).map(|k| binomial(m + 1, k) * &b[k as usize]).sum();
        b.push(-s / int(m as i64 + 1));
    }
    b
}

/// `b_0, b_2, ..., b_{2 nmax}` of `½ log(sinh(x/2)/(x/2)) = Σ b_{2n} x^{2n}`.
///
/// Computed from the series `log(1+u) = Σ (−1)^{k+1} u^k / k`, independent of
/// the Bernoulli recurrence.
pub fn oneloop_bernoulli_coeffs(nmax: usize) -> Vec<Rational> {
    // u = sinh(y)/y − 1 in powers of x², y = x/2
    let mut u = vec![Rational::zero(); nmax + 1];
    for (j, slot) in u.iter_mut().enumerate().skip(1) {
        *slot = Rational::one() / (num_traits::pow(int(4), j) * factorial(2 * j as u32 + 1));
    }
    let mul = |a: &[Rational], b: &[Rational]| {
        let mut v = vec![Rational::zero(); nmax + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(nmax + 1 - i) {
                v[i + j] += x * y;
            }
        }
        v
    };
    let mut log = vec![Rational::zero(); nmax + 1];
    let mut pow = u.clone();
    for k in 1..=nmax {
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        for (l, p) in log.iter_mut().zip(&pow) {
            *l += &sign * p / int(k as i64);
        }
        pow = mul(&pow, &u);
    }
    log.into_iter().map(|c| c / int(2)).collect()
}

/// `|B_{2n}| / (4n (2n)!)`, the magnitude each one-loop coefficient must have.
pub fn oneloop_magnitude(b2n: &Rational, n: u32) -> Rational {
    let abs = if b2n < &Rational::zero() {
        -b2n.clone()
    } else {
        b2n.clone()
    };
    abs / (int(4 * n as i64) * factorial(2 * n))
}
