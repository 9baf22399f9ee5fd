//! Dense univariate polynomials and sparse Laurent polynomials over a generic ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, Zero};

/// Coefficient ring used by the exact containers.
pub trait Coeff: Clone + Num + Neg<Output = Self> + fmt::Debug {}

impl<T: Clone + Num + Neg<Output = T> + fmt::Debug> Coeff for T {}

/// Dense polynomial `c[0] + c[1] x + ...` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^e`
    pub fn monomial(c: T, e: usize) -> Self {
        let mut v = vec![T::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> T {
        self.coeffs.get(e).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Non-zero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Largest `k` with `x^k` dividing the polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Remove the factor `x^low_order`.
    pub fn strip_low(&self) -> Self {
        Poly {
            coeffs: self.coeffs[self.low_order()..].to_vec(),
        }
    }

    /// `p(1/x) x^deg`
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient when `d` divides `self` exactly, `None` otherwise.
    ///
    /// Works over any ring where `%` detects divisibility (integers, fields).
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n - 1 < dd {
            return None;
        }
        let mut q = vec![T::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(top.clone() % lc.clone()).is_zero() {
                return None;
            }
            let f = top / lc.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - f.clone() * dc.clone();
            }
            q[i] = f;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($ty:ident, $tr:ident, $f:ident) => {
        impl<T: Coeff> $tr for $ty<T> {
            type Output = $ty<T>;
            fn $f(self, rhs: $ty<T>) -> $ty<T> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Poly, Add, add);
owned_binop!(Poly, Sub, sub);
owned_binop!(Poly, Mul, mul);

impl<T: Coeff + fmt::Display> fmt::Display for Poly<T> {
    /// Terms from highest degree down, variable `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, T)> = self.terms().map(|(e, c)| (e as i64, c.clone())).collect();
        write_terms(f, terms.into_iter().rev(), "x")
    }
}

fn write_terms<T: Coeff + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, T)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag == "1";
        match e {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Sparse Laurent polynomial with integer exponents and no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    pub fn monomial(c: T, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())))
    }

    /// Multiply by the monomial `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `x -> x^k` (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// All exponents divisible by `k`.
    pub fn exponents_divisible_by(&self, k: i64) -> bool {
        self.terms.keys().all(|e| e % k == 0)
    }

    /// Substitute `x -> x^(1/k)`; requires every exponent divisible by `k`.
    pub fn compress(&self, k: i64) -> Option<Self> {
        self.exponents_divisible_by(k)
            .then(|| Self::from_terms(self.terms.iter().map(|(e, c)| (e / k, c.clone()))))
    }

    /// Convert to an ordinary polynomial after multiplying by `x^-min_exp`.
    /// Returns the polynomial and the shift that was removed.
    pub fn to_poly(&self) -> (Poly<T>, i64) {
        let Some(lo) = self.min_exp() else {
            return (Poly::zero(), 0);
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut v = vec![T::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (Poly::new(v), lo)
    }

    pub fn from_poly(p: &Poly<T>, shift: i64) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (e as i64 + shift, c.clone())))
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<T: Coeff> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Coeff> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<T: Coeff> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term(ea + eb, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Coeff> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

owned_binop!(LaurentPoly, Add, add);
owned_binop!(LaurentPoly, Sub, sub);
owned_binop!(LaurentPoly, Mul, mul);

impl<T: Coeff> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Coeff> One for LaurentPoly<T> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().rev().map(|(e, c)| (*e, c.clone())),
            "x",
        )
    }
}

/// Render with an explicit variable name.
pub fn display_laurent<T: Coeff + fmt::Display>(p: &LaurentPoly<T>, var: &str) -> String {
    struct D<'a, T>(&'a LaurentPoly<T>, &'a str);
    impl<T: Coeff + fmt::Display> fmt::Display for D<'_, T> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(
                f,
                self.0.terms.iter().rev().map(|(e, c)| (*e, c.clone())),
                self.1,
            )
        }
    }
    D(p, var).to_string()
}

/// Render a dense polynomial with an explicit variable name, highest degree first.
pub fn display_poly<T: Coeff + fmt::Display>(p: &Poly<T>, var: &str) -> String {
    display_laurent(&LaurentPoly::from_poly(p, 0), var)
}
