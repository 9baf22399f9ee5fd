//! Brute-force Wick pairing enumeration.
//!
//! Legs are numbered consecutively trace by trace. `gamma` sends a leg to the
//! next leg of its trace (cyclically) and a pairing `alpha` is a fixed-point-free
//! involution; the index-loop count is the number of cycles of `i -> gamma(alpha(i))`.

use rayon::prelude::*;

use super::{Label, MomentError, TraceMonomial};

/// Largest leg count the bitmask kernel handles.
pub const MAX_LEGS: usize = 64;

/// The canonical permutation whose cycles are the traces.
pub fn canonical_permutation(monomial: &TraceMonomial) -> Vec<usize> {
    let mut gamma = Vec::with_capacity(monomial.legs());
    let mut start = 0;
    for n in monomial.powers() {
        for j in 0..n {
            gamma.push(start + (j + 1) % n);
        }
        start += n;
    }
    gamma
}

/// Cycles of `gamma ∘ alpha`.
pub fn count_loops(gamma: &[usize], alpha: &[usize]) -> usize {
    let mut seen = vec![false; gamma.len()];
    let mut loops = 0;
    for s in 0..gamma.len() {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = gamma[alpha[i]];
        }
    }
    loops
}

/// A Wick pairing of the legs of a monomial together with its index-loop count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairingDiagram {
    involution: Vec<usize>,
    loops: usize,
}

impl PairingDiagram {
    pub fn new(monomial: &TraceMonomial, involution: Vec<usize>) -> Result<Self, MomentError> {
        let m = monomial.legs();
        let bad = |msg: &str| Err(MomentError::InvalidPairing(msg.to_string()));
        if involution.len() != m {
            return bad("length differs from the leg count");
        }
        for (i, &j) in involution.iter().enumerate() {
            if j >= m {
                return bad("leg index out of range");
            }
            if j == i {
                return bad("fixed point");
            }
            if involution[j] != i {
                return bad("not an involution");
            }
        }
        let loops = count_loops(&canonical_permutation(monomial), &involution);
        Ok(PairingDiagram { involution, loops })
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn loops(&self) -> usize {
        self.loops
    }
}

/// Pairing counts indexed by `(loops, mixed)`, where `mixed` counts pairs joining
/// an `A` leg to a `B` leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    width: usize,
    counts: Vec<u64>,
}

impl Census {
    fn new(max_loops: usize, max_mixed: usize) -> Self {
        let width = max_mixed + 1;
        Census {
            width,
            counts: vec![0; (max_loops + 1) * width],
        }
    }

    fn merge(mut self, other: Census) -> Census {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    /// Non-zero entries as `(loops, mixed, count)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(i, &c)| (i / self.width, i % self.width, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

struct Kernel {
    m: usize,
    gamma: [u8; MAX_LEGS],
    labels: u64,
    width: usize,
}

impl Kernel {
    fn leaf(&self, alpha: &[u8; MAX_LEGS], mixed: usize, acc: &mut Census) {
        let full: u64 = if self.m == 64 {
            !0
        } else {
            (1u64 << self.m) - 1
        };
        let mut unseen = full;
        let mut loops = 0;
        while unseen != 0 {
            let s = unseen.trailing_zeros() as usize;
            loops += 1;
            let mut i = s;
            loop {
                unseen &= !(1u64 << i);
                i = self.gamma[alpha[i] as usize] as usize;
                if i == s {
                    break;
                }
            }
        }
        acc.counts[loops * self.width + mixed] += 1;
    }

    fn dfs(&self, mask: u64, alpha: &mut [u8; MAX_LEGS], mixed: usize, acc: &mut Census) {
        if mask == 0 {
            self.leaf(alpha, mixed, acc);
            return;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << i);
        let li = (self.labels >> i) & 1;
        let mut r = rest;
        while r != 0 {
            let j = r.trailing_zeros() as usize;
            r &= r - 1;
            alpha[i] = j as u8;
            alpha[j] = i as u8;
            let mix = (li != (self.labels >> j) & 1) as usize;
            self.dfs(rest & !(1u64 << j), alpha, mixed + mix, acc);
        }
    }
}

/// `(m-1)!!` as a float, for budget checks and messages.
pub fn pairing_count(m: usize) -> f64 {
    if m % 2 == 1 {
        return 0.0;
    }
    (1..m).step_by(2).map(|k| k as f64).product()
}

/// Enumerate every pairing, partitioning the partner of leg 0 across the worker pool.
pub fn census(monomial: &TraceMonomial, budget: u64) -> Result<Census, MomentError> {
    let m = monomial.legs();
    let k = monomial.traces();
    let max_loops = m / 2 + k;
    if m % 2 == 1 {
        return Ok(Census::new(max_loops, m / 2));
    }
    let needed = pairing_count(m);
    if m > MAX_LEGS || needed > budget as f64 {
        return Err(MomentError::CapExceeded {
            what: "pairings",
            needed: format!("{needed:.0}"),
            budget,
        });
    }
    let mut gamma = [0u8; MAX_LEGS];
    for (i, g) in canonical_permutation(monomial).into_iter().enumerate() {
        gamma[i] = g as u8;
    }
    let mut labels = 0u64;
    for (i, l) in monomial.leg_labels().into_iter().enumerate() {
        if l == Label::B {
            labels |= 1 << i;
        }
    }
    let kernel = Kernel {
        m,
        gamma,
        labels,
        width: m / 2 + 1,
    };
    if m == 0 {
        return Ok(Census::new(max_loops, m / 2));
    }
    let full: u64 = if m == 64 { !0 } else { (1u64 << m) - 1 };
    let rest = full & !1;
    let result = (1..m)
        .into_par_iter()
        .map(|j| {
            let mut acc = Census::new(max_loops, m / 2);
            let mut alpha = [0u8; MAX_LEGS];
            alpha[0] = j as u8;
            alpha[j] = 0;
            let mix = ((labels & 1) != (labels >> j) & 1) as usize;
            kernel.dfs(rest & !(1u64 << j), &mut alpha, mix, &mut acc);
            acc
        })
        .reduce(|| Census::new(max_loops, m / 2), Census::merge);
    Ok(result)
}
