//! One-point series `U(σ) = (1/N) ⟨tr e^{σM}⟩` and its expansions.
//!
//! Series are returned as polynomials in `σ` truncated at the requested degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, GenfuncError};
use crate::exactmoments::{link_coefficient, single_trace_moment, Route, TraceMonomial};
use crate::{NPolynomial, Poly, Rational};

pub type Series = Poly<Rational>;

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn mul_trunc(a: &Series, b: &Series, degree: usize) -> Series {
    let mut v = vec![Rational::zero(); degree + 1];
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            if i + j <= degree {
                v[i + j] += x * y;
            }
        }
    }
    Poly::new(v)
}

/// `e^{c x}` through degree `degree` in `x`, with `x = σ^step`.
fn exp_series(c: &Rational, step: usize, degree: usize) -> Series {
    let mut v = vec![Rational::zero(); degree + 1];
    let mut n = 0;
    while n * step <= degree {
        v[n * step] = num_traits::pow(c.clone(), n) / factorial(n as u32);
        n += 1;
    }
    Poly::new(v)
}

/// Leading replica term from the residue at the logarithmic cut:
/// `(1/σ) e^{σ²/2} Σ_{n≥1} (−1)^{n−1} σ^{2n−1} / n!`.
pub fn onepoint_series(degree: usize) -> Series {
    let e = exp_series(&(Rational::one() / int(2)), 2, degree + 1);
    let mut v = vec![Rational::zero(); degree + 2];
    let mut n = 1;
    while 2 * n - 1 <= degree + 1 {
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        v[2 * n - 1] = sign / factorial(n as u32);
        n += 1;
    }
    let prod = mul_trunc(&e, &Poly::new(v), degree + 1);
    debug_assert!(prod.coeff(0).is_zero());
    Poly::new(prod.coeffs().iter().skip(1).cloned().collect())
}

/// `sinh(σ²/2)/(σ²/2)`: coefficient of `σ^{4j}` is `1/(4^j (2j+1)!)`.
pub fn onepoint_series_closed(degree: usize) -> Series {
    let mut v = vec![Rational::zero(); degree + 1];
    let mut j = 0;
    while 4 * j <= degree {
        v[4 * j] = Rational::one() / (num_traits::pow(int(4), j) * factorial(2 * j as u32 + 1));
        j += 1;
    }
    Poly::new(v)
}

/// Order-`N` part of `U`: coefficient of `σ^{2j}` is the `N²` coefficient of
/// `⟨tr M^{2j}⟩` divided by `(2j)!`, read from the exact moment engine.
pub fn onepoint_order_n_series(degree: usize, route: Route) -> Result<Series, GenfuncError> {
    if degree < 2 {
        return Err(GenfuncError::InvalidArgument(
            "degree must be at least 2".into(),
        ));
    }
    let mut v = vec![Rational::zero(); degree + 1];
    for n in (2..=degree).step_by(2) {
        let monomial = TraceMonomial::from_powers(&[n]).expect("n >= 2");
        v[n] = link_coefficient(&monomial, 2, route)? / factorial(n as u32);
    }
    Ok(Poly::new(v))
}

/// Independent form of the order-`N` series:
/// `(e^{s/2}/s) Σ_{n≥2} (−s)^n H_{n−1} / n!` with `s = σ²`.
pub fn onepoint_order_n_harmonic(degree: usize) -> Series {
    let smax = degree / 2 + 1;
    let mut h = Rational::zero();
    let mut sum = vec![Rational::zero(); smax + 1];
    for n in 1..=smax {
        // h = H_{n-1}
        if n >= 2 {
            sum[n] = num_traits::pow(int(-1), n) * h.clone() / factorial(n as u32);
        }
        h += Rational::one() / int(n as i64);
    }
    let e = exp_series(&(Rational::one() / int(2)), 1, smax);
    let prod = mul_trunc(&e, &Poly::new(sum), smax);
    let mut v = vec![Rational::zero(); degree + 1];
    for (i, c) in prod.terms() {
        if i >= 1 && 2 * (i - 1) <= degree {
            v[2 * (i - 1)] = c.clone();
        }
    }
    Poly::new(v)
}

/// Coefficients `a_{k,n}` of `w^n` in `(2 artanh w)^k`, for `n <= nmax`.
fn artanh_powers(kmax: usize, nmax: usize) -> Vec<Series> {
    let mut base = vec![Rational::zero(); nmax + 1];
    for n in (1..=nmax).step_by(2) {
        base[n] = int(2) / int(n as i64);
    }
    let base = Poly::new(base);
    let mut out = vec![Poly::constant(Rational::one())];
    for k in 1..=kmax {
        let next = mul_trunc(&out[k - 1], &base, nmax);
        out.push(next);
    }
    out
}

/// Residue expansion of `(1/σ) ∮ e^{σu} [log((1+σ/2u)/(1−σ/2u))]^k / k!` for `k = 1..=kmax`.
///
/// Term `k` carries the weight `N^{k−1}` in `U`; its `σ^{2n−2}` coefficient is
/// `a_{k,n} 2^{−n} / (k! (n−1)!)`.
pub fn onepoint_full_expansion(
    kmax: usize,
    degree: usize,
) -> Result<BTreeMap<usize, Series>, GenfuncError> {
    if kmax == 0 {
        return Err(GenfuncError::InvalidArgument(
            "kmax must be at least 1".into(),
        ));
    }
    let nmax = degree / 2 + 1;
    let a = artanh_powers(kmax, nmax);
    let mut out = BTreeMap::new();
    for (k, ak) in a.iter().enumerate().skip(1) {
        let mut v = vec![Rational::zero(); degree + 1];
        for (n, c) in ak.terms() {
            if 2 * n - 2 <= degree {
                v[2 * n - 2] = c
                    / (num_traits::pow(int(2), n) * factorial(k as u32) * factorial(n as u32 - 1));
            }
        }
        out.insert(k, Poly::new(v));
    }
    Ok(out)
}

/// `⟨tr M^{2j}⟩` rebuilt from the expansion: `(2j)! N Σ_k N^{k−1} [σ^{2j}] T_k`.
pub fn reassembled_moment(expansion: &BTreeMap<usize, Series>, two_j: usize) -> NPolynomial {
    let mut v = vec![Rational::zero(); expansion.len() + 1];
    for (&k, t) in expansion {
        v[k] = t.coeff(two_j) * factorial(two_j as u32);
    }
    Poly::new(v)
}

/// First term of the `k`-th series: `σ^{2k−2} / (k! (k−1)!)`.
pub fn full_expansion_leading(k: u32) -> Rational {
    Rational::one() / (factorial(k) * factorial(k - 1))
}

/// Next term, at `σ^{2k+2}`: `k / (12 k! (k+1)!)`.
pub fn full_expansion_second(k: u32) -> Rational {
    int(k as i64) / (int(12) * factorial(k) * factorial(k + 1))
}

/// Exact `⟨tr M^{2j}⟩` for comparison with [`reassembled_moment`].
pub fn exact_single_trace(two_j: usize) -> NPolynomial {
    single_trace_moment(two_j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn replica_one_point() {
        let s = onepoint_series(12);
        assert_eq!(s.coeff(0), rat(1, 1));
        assert_eq!(s.coeff(4), rat(1, 24));
        assert_eq!(s.coeff(8), rat(1, 1920));
        assert_eq!(s, onepoint_series_closed(12));
    }

    #[test]
    fn order_n_routes() {
        let s = onepoint_order_n_series(12, Route::Recursive).unwrap();
        assert_eq!(s.coeff(2), rat(1, 2));
        assert_eq!(s.coeff(4), rat(0, 1));
        assert_eq!(s.coeff(6), rat(1, 72));
        assert_eq!(s, onepoint_order_n_harmonic(12));
    }

    #[test]
    fn full_expansion_terms() {
        let e = onepoint_full_expansion(6, 12).unwrap();
        assert_eq!(e[&1], onepoint_series(12));
        assert_eq!(e[&2].coeff(6), rat(1, 72));
        assert_eq!(e[&3].coeff(4), rat(1, 12));
        for k in 1..=5u32 {
            let t = &e[&(k as usize)];
            assert_eq!(
                t.coeff(2 * k as usize - 2),
                full_expansion_leading(k),
                "k={k}"
            );
            assert_eq!(
                t.coeff(2 * k as usize + 2),
                full_expansion_second(k),
                "k={k}"
            );
        }
        // the uncorrected 1/(12 (k+1)!) disagrees at k = 2
        assert_ne!(e[&2].coeff(6), rat(1, 12) / factorial(3) / factorial(2));
    }

    #[test]
    fn full_expansion_reassembles_moments() {
        let e = onepoint_full_expansion(7, 12).unwrap();
        for two_j in (0..=12).step_by(2) {
            assert_eq!(
                reassembled_moment(&e, two_j),
                exact_single_trace(two_j),
                "2j={two_j}"
            );
        }
    }
}
