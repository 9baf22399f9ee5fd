//! Loop-equation recursion for one-matrix moments.
//!
//! Resolving the first leg of the largest trace `tr M^n` gives
//! `E(n, rest) = Σ_j E(j, n-2-j, rest) + Σ_i n_i E(n+n_i-2, rest \ i)`, with
//! `tr M^0 = N` and the empty product equal to 1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::MomentError;
use crate::{NPolynomial, Rational};

/// Default number of memo entries before giving up.
pub const DEFAULT_MEMO_BUDGET: usize = 2_000_000;

/// Memoized evaluator; keys are trace-size multisets sorted in decreasing order.
pub struct MomentCache {
    memo: HashMap<Vec<u32>, NPolynomial>,
    budget: usize,
}

impl Default for MomentCache {
    fn default() -> Self {
        Self::with_budget(DEFAULT_MEMO_BUDGET)
    }
}

fn n_power(k: usize) -> NPolynomial {
    NPolynomial::monomial(Rational::one(), k)
}

impl MomentCache {
    pub fn with_budget(budget: usize) -> Self {
        MomentCache {
            memo: HashMap::new(),
            budget,
        }
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `⟨∏ tr M^{n_i}⟩` for arbitrary order of `powers`; zeros stand for `tr M^0 = N`.
    pub fn moment(&mut self, powers: &[usize]) -> Result<NPolynomial, MomentError> {
        let zeros = powers.iter().filter(|&&n| n == 0).count();
        let mut key: Vec<u32> = powers
            .iter()
            .filter(|&&n| n > 0)
            .map(|&n| n as u32)
            .collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let p = self.eval(key)?;
        Ok(&p * &n_power(zeros))
    }

    fn eval(&mut self, key: Vec<u32>) -> Result<NPolynomial, MomentError> {
        if key.is_empty() {
            return Ok(NPolynomial::constant(Rational::one()));
        }
        if key.iter().map(|&n| n as u64).sum::<u64>() % 2 == 1 {
            return Ok(NPolynomial::zero());
        }
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        if self.memo.len() >= self.budget {
            return Err(MomentError::CapExceeded {
                what: "memo entries",
                needed: format!(">{}", self.budget),
                budget: self.budget as u64,
            });
        }
        let n = key[0];
        let rest = &key[1..];
        let mut acc = NPolynomial::zero();

        // split: tr M^n -> tr M^j tr M^{n-2-j}; j and n-2-j give the same term
        if n >= 2 {
            for j in 0..=(n - 2) / 2 {
                let l = n - 2 - j;
                let mult = if j == l { 1 } else { 2 };
                let term = self.with_extra(rest, &[j, l], None)?;
                acc = &acc + &term.scale(&Rational::from_integer(BigInt::from(mult)));
            }
        }
        // merge with another trace of size w, weight w per leg of that trace
        let mut i = 0;
        while i < rest.len() {
            let w = rest[i];
            let count = rest[i..].iter().take_while(|&&x| x == w).count();
            let term = self.with_extra(rest, &[n + w - 2], Some(i))?;
            let weight = Rational::from_integer(BigInt::from(w as u64 * count as u64));
            acc = &acc + &term.scale(&weight);
            i += count;
        }
        self.memo.insert(key, acc.clone());
        Ok(acc)
    }

    /// Moment of `rest` (minus index `skip`) together with `extra` traces.
    fn with_extra(
        &mut self,
        rest: &[u32],
        extra: &[u32],
        skip: Option<usize>,
    ) -> Result<NPolynomial, MomentError> {
        let mut key: Vec<u32> = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .map(|(_, &x)| x)
            .collect();
        let mut zeros = 0;
        for &e in extra {
            if e == 0 {
                zeros += 1;
            } else {
                key.push(e);
            }
        }
        key.sort_unstable_by(|a, b| b.cmp(a));
        let p = self.eval(key)?;
        Ok(if zeros == 0 { p } else { &p * &n_power(zeros) })
    }
}

/// `⟨tr M^n⟩` from the three-term Harer–Zagier recurrence.
pub fn single_trace_moment(n: usize) -> NPolynomial {
    if n % 2 == 1 {
        return NPolynomial::zero();
    }
    let big = |k: i64| Rational::from_integer(BigInt::from(k));
    let mut prev = n_power(1); // tr M^0 = N
    if n == 0 {
        return prev;
    }
    let mut cur = n_power(2); // N^2
    for p in 2..=(n / 2) as i64 {
        let a = cur.shift(1).scale(&big(2 * (2 * p - 1)));
        let b = prev.scale(&big((p - 1) * (2 * p - 1) * (2 * p - 3)));
        let next = (&a + &b).scale(&(Rational::one() / big(p + 1)));
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: i64) -> Rational {
        Rational::from_integer(BigInt::from(k))
    }

    #[test]
    fn small_moments() {
        let mut c = MomentCache::default();
        assert_eq!(c.moment(&[2]).unwrap(), NPolynomial::monomial(r(1), 2));
        assert_eq!(c.moment(&[1, 1]).unwrap(), NPolynomial::monomial(r(1), 1));
        assert_eq!(
            c.moment(&[4]).unwrap(),
            NPolynomial::new(vec![r(0), r(1), r(0), r(2)])
        );
        assert_eq!(
            c.moment(&[6]).unwrap(),
            NPolynomial::new(vec![r(0), r(0), r(10), r(0), r(5)])
        );
        assert!(c.moment(&[3]).unwrap().is_zero());
    }

    #[test]
    fn harer_zagier_matches_recursion() {
        let mut c = MomentCache::default();
        for n in 0..=24 {
            assert_eq!(single_trace_moment(n), c.moment(&[n]).unwrap(), "n={n}");
        }
    }

    #[test]
    fn zero_power_is_n() {
        let mut c = MomentCache::default();
        let lhs = c.moment(&[0, 2]).unwrap();
        assert_eq!(lhs, NPolynomial::monomial(r(1), 3));
    }

    #[test]
    fn memo_budget() {
        let mut c = MomentCache::with_budget(3);
        assert!(c.moment(&[6, 6, 4, 2]).is_err());
    }
}
