//! Truncated multivariate power series.

use std::collections::BTreeMap;
use std::ops::Div;

use crate::poly::Coeff;

/// Power series in `nvars` variables keeping every term of total degree `<= max_degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries<T> {
    nvars: usize,
    max_degree: u32,
    terms: BTreeMap<Vec<u32>, T>,
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl<T: Coeff> PowerSeries<T> {
    pub fn zero(nvars: usize, max_degree: u32) -> Self {
        PowerSeries {
            nvars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, max_degree: u32) -> Self {
        let mut s = Self::zero(nvars, max_degree);
        s.add_term(vec![0; nvars], T::one());
        s
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, max_degree: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut s = Self::zero(nvars, max_degree);
        s.add_term(e, T::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Add `c x^e`; terms above the truncation degree are dropped.
    pub fn add_term(&mut self, e: Vec<u32>, c: T) {
        assert_eq!(e.len(), self.nvars, "exponent vector length");
        if c.is_zero() || total(&e) > self.max_degree {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, e: &[u32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    /// Non-zero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms of exactly total degree `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        let mut s = Self::zero(self.nvars, self.max_degree);
        for (e, c) in &self.terms {
            if total(e) == d {
                s.terms.insert(e.clone(), c.clone());
            }
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.max_degree = self.max_degree.min(other.max_degree);
        s.terms.retain(|e, _| total(e) <= s.max_degree);
        for (e, c) in &other.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut s = Self::zero(self.nvars, self.max_degree);
        for (e, c) in &self.terms {
            s.add_term(e.clone(), c.clone() * k.clone());
        }
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.max_degree.min(other.max_degree);
        let mut s = Self::zero(self.nvars, d);
        for (ea, a) in &self.terms {
            let ta = total(ea);
            for (eb, b) in &other.terms {
                if ta + total(eb) > d {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                s.add_term(e, a.clone() * b.clone());
            }
        }
        s
    }

    /// Exchange the variables as given by `perm` (new index of variable `i` is `perm[i]`).
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut s = Self::zero(self.nvars, self.max_degree);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            s.add_term(f, c.clone());
        }
        s
    }

    /// Change the truncation degree (lowering drops terms).
    pub fn truncate(&self, max_degree: u32) -> Self {
        let mut s = Self::zero(self.nvars, max_degree);
        for (e, c) in &self.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }
}

impl<T: Coeff + Div<Output = T>> PowerSeries<T> {
    /// Divide by the linear form `Σ l_i x_i`, returning `(quotient, remainder)`.
    ///
    /// Lex division with leading term `l_0 x_0`, which must be invertible. Because the
    /// form is homogeneous, each graded piece divides independently and the quotient is
    /// exact through degree `max_degree - 1`.
    pub fn div_linear(&self, l: &[T]) -> (Self, Self) {
        assert_eq!(l.len(), self.nvars);
        assert!(
            !l[0].is_zero(),
            "leading coefficient of the divisor must be non-zero"
        );
        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.nvars, self.max_degree.saturating_sub(1));
        let mut leftover = Self::zero(self.nvars, self.max_degree);
        while let Some((e, c)) = rem.pop_last() {
            if c.is_zero() {
                continue;
            }
            if e[0] == 0 {
                leftover.terms.insert(e, c);
                continue;
            }
            let mut qe = e.clone();
            qe[0] -= 1;
            let f = c / l[0].clone();
            for (i, li) in l.iter().enumerate().skip(1) {
                if li.is_zero() {
                    continue;
                }
                let mut te = qe.clone();
                te[i] += 1;
                let slot = rem.entry(te.clone()).or_insert_with(T::zero);
                *slot = slot.clone() - f.clone() * li.clone();
                if slot.is_zero() {
                    rem.remove(&te);
                }
            }
            quot.add_term(qe, f);
        }
        (quot, leftover)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(k: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(k))
    }

    #[test]
    fn multiply_and_divide_by_linear_form() {
        let x = PowerSeries::<BigRational>::var(2, 6, 0);
        let y = PowerSeries::<BigRational>::var(2, 6, 1);
        let l = x.add(&y.scale(&r(3)));
        let p = l.mul(&x.mul(&x).add(&y));
        let (q, rem) = p.div_linear(&[r(1), r(3)]);
        assert!(rem.is_empty());
        assert_eq!(q.truncate(6), x.mul(&x).add(&y).truncate(5).truncate(6));
        let (_, rem) = x.mul(&y).add(&y).div_linear(&[r(1), r(1)]);
        assert!(!rem.is_empty());
    }

    #[test]
    fn truncation_drops_high_terms() {
        let x = PowerSeries::<BigRational>::var(1, 3, 0);
        let x4 = x.mul(&x).mul(&x).mul(&x);
        assert!(x4.is_empty());
        let mut s = PowerSeries::<BigRational>::zero(1, 3);
        s.add_term(vec![1], r(2));
        s.add_term(vec![1], r(-2));
        assert!(s.is_empty());
    }
}
