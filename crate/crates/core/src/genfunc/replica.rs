//! The replica generating series `U = (2^k/χ²) ∏ sinh(χσ_i/2)`, `χ = Σ σ_i`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, GenfuncError};
use crate::exactmoments::TraceMonomial;
use crate::{MultiSeries, Rational};

fn int(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// `1 / (2^j j!)`, the coefficient of `y^j` in `2 sinh(y/2)` up to a factor 2 for odd `j`.
fn half_power(j: u32) -> Rational {
    Rational::one() / (Rational::from_integer(BigInt::from(1u8) << j) * factorial(j))
}

fn check(k: usize, degree: u32) -> Result<(), GenfuncError> {
    if k == 0 {
        return Err(GenfuncError::InvalidArgument("k must be at least 1".into()));
    }
    if (degree as usize) < k {
        return Err(GenfuncError::InvalidArgument(format!(
            "degree {degree} is below k = {k}"
        )));
    }
    Ok(())
}

/// `χ^p` expanded with multinomial coefficients.
fn chi_power(k: usize, p: u32, degree: u32) -> MultiSeries {
    let mut out = MultiSeries::zero(k, degree);
    let pf = factorial(p);
    let mut e = vec![0u32; k];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, pf: &Rational, out: &mut MultiSeries) {
        if i + 1 == e.len() {
            e[i] = left;
            let denom: Rational = e.iter().map(|&x| factorial(x)).product();
            out.add_term(e.clone(), pf / denom);
            return;
        }
        for a in 0..=left {
            e[i] = a;
            rec(i + 1, left - a, e, pf, out);
        }
    }
    rec(0, p, &mut e, &pf, &mut out);
    out
}

/// Truncated series through total degree `degree`, obtained by expanding the numerator
/// `2^k ∏ sinh(χσ_i/2)` and dividing it twice by the linear form `χ`.
///
/// The divisions must leave no remainder; a non-zero remainder is reported as an error.
pub fn replica_generating_series(k: usize, degree: u32) -> Result<MultiSeries, GenfuncError> {
    check(k, degree)?;
    let top = degree + 2;
    let mut chi_pows = vec![MultiSeries::one(k, top)];
    for p in 1..=top / 2 {
        let next = chi_pows[p as usize - 1].mul(&chi_power(k, 1, top));
        chi_pows.push(next);
    }
    let mut num = MultiSeries::one(k, top);
    for i in 0..k {
        let mut factor = MultiSeries::zero(k, top);
        for j in (1..=top / 2).step_by(2) {
            let mut sig = MultiSeries::zero(k, top);
            let mut e = vec![0; k];
            e[i] = j;
            sig.add_term(e, half_power(j) * int(2));
            factor = factor.add(&sig.mul(&chi_pows[j as usize]));
        }
        num = num.mul(&factor);
    }
    let ones = vec![Rational::one(); k];
    let (q1, r1) = num.div_linear(&ones);
    let (q2, r2) = q1.div_linear(&ones);
    if !r1.is_empty() || !r2.is_empty() {
        return Err(GenfuncError::NonZeroRemainder);
    }
    Ok(q2.truncate(degree))
}

/// Same series from the direct expansion `Σ χ^{J-2} ∏ σ_i^{j_i} / (2^{j_i-1} j_i!)`
/// over odd `j_i` with `J = Σ j_i`.
pub fn replica_generating_series_direct(
    k: usize,
    degree: u32,
) -> Result<MultiSeries, GenfuncError> {
    check(k, degree)?;
    let mut out = MultiSeries::zero(k, degree);
    let jmax = (degree + 2) / 2;
    let mut js = vec![1u32; k];
    loop {
        let big_j: u32 = js.iter().sum();
        if 2 * big_j - 2 <= degree {
            let w: Rational = js.iter().map(|&j| half_power(j) * int(2)).product();
            if big_j == 1 {
                // k = 1: χ^{-1} σ = 1
                out.add_term(vec![0], w);
            } else {
                let chi = chi_power(k, big_j - 2, degree);
                for (e, c) in chi.terms() {
                    let f: Vec<u32> = e.iter().zip(&js).map(|(a, b)| a + b).collect();
                    out.add_term(f, c * &w);
                }
            }
        }
        // next odd vector in odometer order
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            js[i] += 2;
            if js[i] <= jmax {
                break;
            }
            js[i] = 1;
            i += 1;
        }
    }
}

/// Coefficient of `∏ σ_i^{n_i}` without building the whole series.
pub fn replica_series_coefficient(exponents: &[u32]) -> Rational {
    let m: u32 = exponents.iter().sum();
    if exponents.is_empty() || m % 2 == 1 {
        return Rational::zero();
    }
    let big_j = (m + 2) / 2;
    let k = exponents.len();
    let mut total = Rational::zero();
    let mut js: Vec<u32> = vec![1; k];
    if exponents == [0] {
        // k = 1: χ^{-1} σ = 1
        return Rational::one();
    }
    if exponents.contains(&0) {
        return Rational::zero();
    }
    loop {
        if js.iter().sum::<u32>() == big_j {
            let mut t = factorial(big_j - 2);
            for (&j, &n) in js.iter().zip(exponents) {
                t = t * half_power(j) * int(2) / factorial(n - j);
            }
            total += t;
        }
        let mut i = 0;
        loop {
            if i == k {
                return total;
            }
            js[i] += 2;
            if js[i] <= exponents[i] {
                break;
            }
            js[i] = 1;
            i += 1;
        }
    }
}

/// Replica limit read off the series: coefficient times `∏ n_i!`.
pub fn replica_moment_from_series(monomial: &TraceMonomial) -> Result<Rational, GenfuncError> {
    if !monomial.is_single_matrix() {
        return Err(GenfuncError::InvalidArgument(
            "series describes one-matrix moments only".into(),
        ));
    }
    let powers: Vec<u32> = monomial.powers().iter().map(|&n| n as u32).collect();
    let fact: Rational = powers.iter().map(|&n| factorial(n)).product();
    Ok(replica_series_coefficient(&powers) * fact)
}

/// Closed form of the replica limit of `⟨(tr M^3)^{4g-2}⟩`.
pub fn trivalent_closed_form(g: u32) -> Result<Rational, GenfuncError> {
    if g == 0 {
        return Err(GenfuncError::InvalidArgument("g must be at least 1".into()));
    }
    let three = num_traits::pow(int(3), (3 * g - 2) as usize);
    let four = num_traits::pow(int(4), g as usize);
    Ok(three / four * factorial(6 * g - 4) * factorial(4 * g - 2)
        / (factorial(g) * factorial(3 * g - 2)))
}

/// Replica limit of `⟨(tr M^3)^k⟩`: non-zero only when `k = 4g − 2`.
pub fn trivalent_replica(k: u32) -> Rational {
    if k % 4 == 2 {
        trivalent_closed_form((k + 2) / 4).expect("g >= 1")
    } else {
        Rational::zero()
    }
}

/// One-marked-point intersection number `⟨τ_{3g-2}⟩_g = 1/(24^g g!)`.
pub fn intersection_number(g: u32) -> Result<Rational, GenfuncError> {
    if g == 0 {
        return Err(GenfuncError::InvalidArgument("g must be at least 1".into()));
    }
    Ok(Rational::one() / (num_traits::pow(int(24), g as usize) * factorial(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmoments::{replica_coefficient, Route};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn two_vertex_terms() {
        let s = replica_generating_series(2, 6).unwrap();
        assert_eq!(s.coeff(&[1, 1]), rat(1, 1));
        assert_eq!(s.coeff(&[3, 3]), rat(1, 12));
        // (σ₁⁵σ₂ + 2σ₁⁴σ₂² + 2σ₁³σ₂³ + 2σ₁²σ₂⁴ + σ₁σ₂⁵)/24 at degree 6
        assert_eq!(s.coeff(&[5, 1]), rat(1, 24));
        assert_eq!(s.coeff(&[4, 2]), rat(1, 12));
        assert_eq!(s.coeff(&[3, 3]) * rat(24, 1), rat(2, 1));
    }

    #[test]
    fn routes_agree() {
        for (k, d) in [(1, 12), (2, 12), (3, 12), (4, 10)] {
            let a = replica_generating_series(k, d).unwrap();
            let b = replica_generating_series_direct(k, d).unwrap();
            assert_eq!(a, b, "k={k} d={d}");
            for (e, c) in a.terms() {
                assert_eq!(&replica_series_coefficient(e), c, "{e:?}");
            }
        }
    }

    #[test]
    fn each_variable_appears_for_k_at_least_two() {
        let s = replica_generating_series(3, 10).unwrap();
        assert!(s.terms().all(|(e, _)| e.iter().all(|&x| x >= 1)));
        // k = 1 is sinh(σ²/2)/(σ²/2), which has a constant term
        assert_eq!(
            replica_generating_series(1, 4).unwrap().coeff(&[0]),
            rat(1, 1)
        );
    }

    #[test]
    fn moments_from_series() {
        for (p, v) in [(&[3, 3][..], 3), (&[5, 5], 165), (&[5, 1], 5)] {
            let monomial = TraceMonomial::from_powers(p).unwrap();
            assert_eq!(replica_moment_from_series(&monomial).unwrap(), rat(v, 1));
            assert_eq!(
                replica_coefficient(&monomial, Route::Recursive).unwrap(),
                rat(v, 1)
            );
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(trivalent_closed_form(1).unwrap(), rat(3, 1));
        assert_eq!(trivalent_closed_form(2).unwrap(), rat(3_061_800, 1));
        assert_eq!(trivalent_replica(4), rat(0, 1));
        assert_eq!(trivalent_replica(6), rat(3_061_800, 1));
        assert_eq!(intersection_number(1).unwrap(), rat(1, 24));
        assert_eq!(intersection_number(2).unwrap(), rat(1, 1152));
        assert_eq!(intersection_number(3).unwrap(), rat(1, 82944));
        let monomial = TraceMonomial::from_powers(&[3; 10]).unwrap();
        assert_eq!(
            replica_coefficient(&monomial, Route::Recursive).unwrap(),
            trivalent_closed_form(3).unwrap()
        );
    }
}
