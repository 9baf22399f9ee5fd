//! Planar diagram codes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::KnotpolyError;

/// `X[a, b, c, d]`: edge labels counterclockwise from the incoming under edge, so the
/// under strand runs `a → c`. The crossing is positive when the over strand runs `d → b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub code: [u32; 4],
    /// `+1` or `−1`.
    pub sign: i8,
}

impl Crossing {
    /// Sign read off consecutive edge labels: positive iff `b − d = 1` or `d − b > 1`.
    /// Valid when labels increase along each component.
    pub fn inferred_sign(code: [u32; 4]) -> i8 {
        let (b, d) = (code[1] as i64, code[3] as i64);
        if b - d == 1 || d - b > 1 {
            1
        } else {
            -1
        }
    }

    /// `(in, out)` of the over strand.
    pub fn over_strand(&self) -> (u32, u32) {
        let [_, b, _, d] = self.code;
        if self.sign > 0 {
            (d, b)
        } else {
            (b, d)
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.code;
        let code = if self.sign > 0 {
            [d, a, b, c]
        } else {
            [b, c, d, a]
        };
        Crossing {
            code,
            sign: -self.sign,
        }
    }

    /// Edge pairs joined by the oriented (Seifert) smoothing.
    pub fn oriented_pairs(&self) -> [(u32, u32); 2] {
        let [a, b, c, d] = self.code;
        if self.sign > 0 {
            [(a, b), (c, d)]
        } else {
            [(a, d), (b, c)]
        }
    }
}

/// Oriented diagram: crossings plus closed loops that meet no crossing.
///
/// JSON: `{"crossings": [[a,b,c,d], …], "signs": [±1, …], "free_loops": k}`; `signs` may be
/// omitted when labels run consecutively along each component, and `free_loops` defaults
/// to 0. A diagram with neither crossings nor free loops is the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawDiagram {
    crossings: Vec<[u32; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signs: Option<Vec<i8>>,
    #[serde(default)]
    free_loops: usize,
}

impl TryFrom<RawDiagram> for PlanarDiagram {
    type Error = KnotpolyError;
    fn try_from(raw: RawDiagram) -> Result<Self, KnotpolyError> {
        PlanarDiagram::new(raw.crossings, raw.signs, raw.free_loops)
    }
}

impl From<PlanarDiagram> for RawDiagram {
    fn from(d: PlanarDiagram) -> Self {
        RawDiagram {
            signs: Some(d.crossings.iter().map(|x| x.sign).collect()),
            crossings: d.crossings.iter().map(|x| x.code).collect(),
            free_loops: d.free_loops,
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

impl PlanarDiagram {
    pub fn new(
        codes: Vec<[u32; 4]>,
        signs: Option<Vec<i8>>,
        free_loops: usize,
    ) -> Result<Self, KnotpolyError> {
        let signs = match signs {
            Some(s) if s.len() != codes.len() => {
                return Err(KnotpolyError::MalformedDiagram(format!(
                    "{} signs for {} crossings",
                    s.len(),
                    codes.len()
                )))
            }
            Some(s) if s.iter().any(|&x| x != 1 && x != -1) => {
                return Err(KnotpolyError::MalformedDiagram("signs must be ±1".into()))
            }
            Some(s) => s,
            None => codes.iter().map(|&c| Crossing::inferred_sign(c)).collect(),
        };
        let crossings: Vec<Crossing> = codes
            .into_iter()
            .zip(signs)
            .map(|(code, sign)| Crossing { code, sign })
            .collect();
        let d = PlanarDiagram {
            crossings,
            free_loops,
        };
        d.validate()?;
        Ok(d)
    }

    /// `μ` disjoint circles; `μ = 0` is rejected.
    pub fn unlink(mu: usize) -> Result<Self, KnotpolyError> {
        if mu == 0 {
            return Err(KnotpolyError::MalformedDiagram("empty unlink".into()));
        }
        Ok(PlanarDiagram {
            crossings: Vec::new(),
            free_loops: mu,
        })
    }

    fn validate(&self) -> Result<(), KnotpolyError> {
        let mut ins: BTreeMap<u32, usize> = BTreeMap::new();
        let mut outs: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            let (oi, oo) = x.over_strand();
            for e in [x.code[0], oi] {
                *ins.entry(e).or_default() += 1;
            }
            for e in [x.code[2], oo] {
                *outs.entry(e).or_default() += 1;
            }
        }
        let labels: BTreeSet<u32> = ins.keys().chain(outs.keys()).copied().collect();
        for e in labels {
            let (i, o) = (
                ins.get(&e).copied().unwrap_or(0),
                outs.get(&e).copied().unwrap_or(0),
            );
            if i != 1 || o != 1 {
                return Err(KnotpolyError::MalformedDiagram(format!(
                    "edge {e} enters {i} and leaves {o} crossings; each edge needs one of each"
                )));
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    /// Distinct edge labels, sorted.
    pub fn labels(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.crossings.iter().flat_map(|x| x.code).collect();
        set.into_iter().collect()
    }

    /// Components: crossing-free loops plus the classes of edges joined along strands.
    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            return self.free_loops.max(1);
        }
        let (index, mut uf) = self.label_index();
        for x in &self.crossings {
            let (oi, oo) = x.over_strand();
            uf.union(index[&x.code[0]], index[&x.code[2]]);
            uf.union(index[&oi], index[&oo]);
        }
        let roots: BTreeSet<usize> = (0..index.len()).map(|i| uf.find(i)).collect();
        roots.len() + self.free_loops
    }

    pub(crate) fn label_index(&self) -> (BTreeMap<u32, usize>, UnionFindHandle) {
        let index: BTreeMap<u32, usize> = self
            .labels()
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        let n = index.len();
        (index, UnionFindHandle(UnionFind::new(n)))
    }

    /// Copy with crossing `i` switched.
    pub fn switch(&self, i: usize) -> Self {
        let mut d = self.clone();
        d.crossings[i] = d.crossings[i].switched();
        d
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        PlanarDiagram {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Copy with crossing `i` replaced by its oriented smoothing. Loops left without
    /// crossings become free loops.
    pub fn smooth(&self, i: usize) -> Self {
        let (index, mut uf) = self.label_index();
        for (p, q) in self.crossings[i].oriented_pairs() {
            uf.union(index[&p], index[&q]);
        }
        let labels = self.labels();
        let rename = |l: u32, uf: &mut UnionFindHandle| labels[uf.find(index[&l])];
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, x)| Crossing {
                code: x.code.map(|l| rename(l, &mut uf)),
                sign: x.sign,
            })
            .collect();
        let remaining: BTreeSet<u32> = crossings.iter().flat_map(|x| x.code).collect();
        let orphaned: BTreeSet<u32> = self.crossings[i]
            .code
            .iter()
            .map(|&l| rename(l, &mut uf))
            .filter(|l| !remaining.contains(l))
            .collect();
        PlanarDiagram {
            crossings,
            free_loops: self.free_loops + orphaned.len(),
        }
    }

    /// Closure of a braid word (signed 1-based generators; `σ_i` positive) on `strands`
    /// strands, with edges relabelled `1, 2, …` consecutively along each component.
    /// Strands no generator touches become free loops.
    pub fn from_braid(word: &[i32], strands: usize) -> Result<Self, KnotpolyError> {
        if word
            .iter()
            .any(|&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return Err(KnotpolyError::MalformedDiagram(format!(
                "braid generators must lie in ±1..{}",
                strands.saturating_sub(1)
            )));
        }
        let top: Vec<u32> = (0..strands as u32).collect();
        let mut cur = top.clone();
        let mut next = strands as u32;
        let mut codes = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize - 1;
            let (el, er) = (cur[i], cur[i + 1]);
            let (fl, fr) = (next, next + 1);
            next += 2;
            codes.push(if g > 0 {
                ([el, fl, fr, er], 1)
            } else {
                ([er, el, fl, fr], -1)
            });
            cur[i] = fl;
            cur[i + 1] = fr;
        }
        let free = (0..strands).filter(|&p| cur[p] == top[p]).count();
        // close: bottom edge at each position is the top edge there
        let mut uf = UnionFind::new(next as usize);
        for p in 0..strands {
            uf.union(cur[p] as usize, top[p] as usize);
        }
        let mut raw: Vec<Crossing> = codes
            .into_iter()
            .map(|(c, s): ([u32; 4], i8)| Crossing {
                code: c.map(|l| uf.find(l as usize) as u32),
                sign: s,
            })
            .collect();
        // walk each component and number its edges consecutively
        let mut succ: BTreeMap<u32, u32> = BTreeMap::new();
        for x in &raw {
            succ.insert(x.code[0], x.code[2]);
            let (i, o) = x.over_strand();
            succ.insert(i, o);
        }
        let mut label: BTreeMap<u32, u32> = BTreeMap::new();
        let mut n = 0;
        for &start in succ.keys() {
            let mut e = start;
            while !label.contains_key(&e) {
                n += 1;
                label.insert(e, n);
                e = succ[&e];
            }
        }
        for x in &mut raw {
            x.code = x.code.map(|l| label[&l]);
        }
        let d = PlanarDiagram {
            crossings: raw,
            free_loops: free,
        };
        d.validate()?;
        Ok(d)
    }
}

pub(crate) struct UnionFindHandle(UnionFind);

impl UnionFindHandle {
    pub(crate) fn find(&mut self, x: usize) -> usize {
        self.0.find(x)
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        self.0.union(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_from_braid() {
        let d = PlanarDiagram::from_braid(&[1, 1, 1], 2).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.labels(), (1..=6).collect::<Vec<_>>());
        // labels run consecutively, so inference agrees with the stored signs
        for x in d.crossings() {
            assert_eq!(Crossing::inferred_sign(x.code), x.sign);
        }
    }

    #[test]
    fn figure_eight_writhe_and_links() {
        let d = PlanarDiagram::from_braid(&[1, -2, 1, -2], 3).unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.component_count(), 1);
        let hopf = PlanarDiagram::from_braid(&[1, 1], 2).unwrap();
        assert_eq!(hopf.component_count(), 2);
        let loose = PlanarDiagram::from_braid(&[1], 3).unwrap();
        assert_eq!(loose.free_loops(), 1);
        assert_eq!(loose.component_count(), 2);
    }

    #[test]
    fn switch_and_smooth() {
        let d = PlanarDiagram::from_braid(&[1, 1, 1], 2).unwrap();
        let s = d.switch(0);
        assert_eq!(s.writhe(), 1);
        assert_eq!(s.switch(0), d);
        let z = d.smooth(0);
        assert_eq!(z.crossing_count(), 2);
        assert_eq!(z.component_count(), 2);
        let kink = PlanarDiagram::from_braid(&[1], 2).unwrap();
        let two = kink.smooth(0);
        assert_eq!((two.crossing_count(), two.free_loops()), (0, 2));
    }

    #[test]
    fn malformed() {
        assert!(PlanarDiagram::new(vec![[1, 2, 3, 4]], None, 0).is_err());
        assert!(PlanarDiagram::new(vec![[1, 1, 2, 2]], Some(vec![1, 1]), 0).is_err());
        assert!(PlanarDiagram::new(vec![[1, 1, 2, 2]], Some(vec![2]), 0).is_err());
        assert!(PlanarDiagram::from_braid(&[3], 3).is_err());
        let json = r#"{"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]}"#;
        let d: PlanarDiagram = serde_json::from_str(json).unwrap();
        assert_eq!(d.writhe(), -3);
        assert_eq!(
            super::super::jones_polynomial(&d, 16).unwrap().to_string(),
            "t^(-1) + t^(-3) - t^(-4)"
        );
    }
}
