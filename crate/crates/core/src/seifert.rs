//! Seifert matrices and the Alexander and Conway polynomials they determine.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{IntLaurent, IntPolynomial, LaurentPoly, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("parameter must be at least 1")]
    NonPositive,
    #[error("torus (2,n) family needs odd n >= 3, got {0}")]
    EvenParameter(u32),
    #[error("determinant is not a polynomial in z = s - 1/s")]
    NonSymmetrizable,
    #[error("polynomial is not palindromic")]
    NotPalindromic,
}

/// Square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct SeifertMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl TryFrom<Vec<Vec<i64>>> for SeifertMatrix {
    type Error = SeifertError;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        SeifertMatrix::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }
}

impl From<SeifertMatrix> for Vec<Vec<i64>> {
    fn from(m: SeifertMatrix) -> Self {
        m.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x).expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, SeifertError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SeifertError::NotSquare);
        }
        Ok(SeifertMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, SeifertError> {
        Self::try_from(rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        SeifertMatrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect())
                .collect(),
        }
    }
}

/// `2g × 2g` upper-bidiagonal matrix with diagonal `(1, 2, …, 2, 1)` and unit superdiagonal.
pub fn trivalent_family(g: u32) -> Result<SeifertMatrix, SeifertError> {
    if g == 0 {
        return Err(SeifertError::NonPositive);
    }
    let n = 2 * g as usize;
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = BigInt::from(if i == 0 || i == n - 1 { 1 } else { 2 });
        if i + 1 < n {
            row[i + 1] = BigInt::one();
        }
    }
    Ok(SeifertMatrix { rows })
}

/// Fraction-free (Bareiss) determinant over `Z[t]`. An empty matrix has determinant 1.
pub fn determinant(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    let mut sign = false;
    let mut prev = Poly::constant(BigInt::one());
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return prev;
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// `det(tV − Vᵀ)`, exactly as the determinant (no normalization).
pub fn alexander_polynomial(v: &SeifertMatrix) -> IntPolynomial {
    let n = v.size();
    let t = IntPolynomial::x();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &t.scale(v.get(i, j)) - &Poly::constant(v.get(j, i).clone()))
                .collect()
        })
        .collect();
    determinant(m)
}

/// Strip the `t^k` factor and fix the sign so the constant term is positive.
pub fn normalize_alexander(p: &IntPolynomial) -> IntPolynomial {
    let q = p.strip_low();
    match q.coeffs().first() {
        Some(c) if c.is_negative() => -&q,
        _ => q,
    }
}

/// `Δ(t)` of the trivalent family from the tridiagonal recursion
/// `D_j = a_j (t−1) D_{j−1} + t D_{j−2}` with `a = (1, 2, …, 2, 1)`.
pub fn alexander_trivalent_recursive(g: u32) -> Result<IntPolynomial, SeifertError> {
    if g == 0 {
        return Err(SeifertError::NonPositive);
    }
    let n = 2 * g as usize;
    let t_minus_1 = Poly::new(vec![BigInt::from(-1), BigInt::one()]);
    let t = IntPolynomial::x();
    let mut prev = Poly::constant(BigInt::one());
    let mut cur = t_minus_1.clone();
    for j in 1..n {
        let a = BigInt::from(if j == n - 1 { 1 } else { 2 });
        let next = &(&t_minus_1.scale(&a) * &cur) + &(&t * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `(t^n + 1)/(t + 1) = Σ_{j<n} (−t)^j` for odd `n ≥ 3`.
pub fn torus_2n_alexander(n: u32) -> Result<IntPolynomial, SeifertError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(SeifertError::EvenParameter(n));
    }
    Ok(Poly::new(
        (0..n)
            .map(|j| BigInt::from(if j % 2 == 0 { 1 } else { -1 }))
            .collect(),
    ))
}

/// `|Δ(−1)|`.
pub fn knot_determinant(delta: &IntPolynomial) -> BigInt {
    delta.eval(&BigInt::from(-1)).abs()
}

/// Rewrite a Laurent polynomial in `s` as a polynomial in `z = s − 1/s`.
pub fn laurent_to_conway(l: &IntLaurent) -> Result<IntPolynomial, SeifertError> {
    let mut rest = l.clone();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let z = LaurentPoly::from_terms([(1, BigInt::one()), (-1, BigInt::from(-1))]);
    while let Some(e) = rest.max_exp() {
        if e < 0 {
            return Err(SeifertError::NonSymmetrizable);
        }
        let c = rest.coeff(e);
        let e = e as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] = c.clone();
        rest = &rest - &z.pow(e as u32).scale(&c);
    }
    Ok(Poly::new(coeffs))
}

/// Conway polynomial from `det(s V − s^{-1} Vᵀ) = s^{−n} Δ(s²)`, `s = √t`.
pub fn conway_polynomial(v: &SeifertMatrix) -> Result<IntPolynomial, SeifertError> {
    let delta = alexander_polynomial(v);
    let n = v.size() as i64;
    let l = LaurentPoly::from_poly(&delta, 0)
        .substitute_power(2)
        .shift(-n);
    laurent_to_conway(&l)
}

/// Conway polynomial of a palindromic Alexander polynomial, sign fixed by `P(0) = Δ(1)`
/// being positive.
pub fn conway_from_alexander(delta: &IntPolynomial) -> Result<IntPolynomial, SeifertError> {
    let d = delta.strip_low();
    if d.is_zero() {
        return Ok(Poly::zero());
    }
    let c = d.coeffs();
    let deg = c.len() - 1;
    if deg % 2 == 1 || (0..=deg).any(|i| c[i] != c[deg - i]) {
        return Err(SeifertError::NotPalindromic);
    }
    let l = LaurentPoly::from_poly(&d, 0)
        .substitute_power(2)
        .shift(-(deg as i64));
    let p = laurent_to_conway(&l)?;
    Ok(if d.eval(&BigInt::one()).is_negative() {
        -&p
    } else {
        p
    })
}

/// Normalized Alexander polynomial from a Conway polynomial with only even powers.
pub fn alexander_from_conway(p: &IntPolynomial) -> Option<IntPolynomial> {
    let z = LaurentPoly::from_terms([(1, BigInt::one()), (-1, BigInt::from(-1))]);
    let mut l = IntLaurent::zero();
    for (e, c) in p.terms() {
        l = &l + &z.pow(e as u32).scale(c);
    }
    let t = l.compress(2)?;
    Some(normalize_alexander(&t.to_poly().0))
}
