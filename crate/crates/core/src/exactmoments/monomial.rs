use std::fmt;
use std::str::FromStr;

use super::MomentError;

/// Matrix label inside a trace word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Label {
    A,
    B,
}

/// A product of traces `∏ tr(w_i)`, each word a non-empty string of matrix labels.
///
/// The single-matrix case `∏ tr M^{n_i}` stores words made of `A` only.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TraceMonomial {
    words: Vec<Vec<Label>>,
}

impl TraceMonomial {
    pub fn new(words: Vec<Vec<Label>>) -> Result<Self, MomentError> {
        if words.is_empty() {
            return Err(MomentError::InvalidMonomial("no traces".into()));
        }
        if words.iter().any(|w| w.is_empty()) {
            return Err(MomentError::InvalidMonomial("empty trace word".into()));
        }
        Ok(TraceMonomial { words })
    }

    /// `∏ tr M^{n_i}` in the given order.
    pub fn from_powers(powers: &[usize]) -> Result<Self, MomentError> {
        if powers.contains(&0) {
            return Err(MomentError::InvalidMonomial(
                "powers must be at least 1".into(),
            ));
        }
        Self::new(powers.iter().map(|&n| vec![Label::A; n]).collect())
    }

    pub fn words(&self) -> &[Vec<Label>] {
        &self.words
    }

    pub fn powers(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    /// Total leg count `m = Σ n_i`.
    pub fn legs(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    pub fn traces(&self) -> usize {
        self.words.len()
    }

    /// All labels identical, so the moment is an ordinary one-matrix moment.
    pub fn is_single_matrix(&self) -> bool {
        let first = self.words[0][0];
        self.words.iter().flatten().all(|&l| l == first)
    }

    /// Every trace uses a single label (traces may differ from each other).
    pub fn is_label_pure(&self) -> bool {
        self.words.iter().all(|w| w.iter().all(|&l| l == w[0]))
    }

    /// The traces consisting only of `label`, as a one-matrix monomial.
    pub fn restrict(&self, label: Label) -> Option<TraceMonomial> {
        let words: Vec<_> = self
            .words
            .iter()
            .filter(|w| w.iter().all(|&l| l == label))
            .map(|w| vec![Label::A; w.len()])
            .collect();
        (!words.is_empty()).then_some(TraceMonomial { words })
    }

    /// Labels of all legs, numbered consecutively trace by trace.
    pub fn leg_labels(&self) -> Vec<Label> {
        self.words.iter().flatten().copied().collect()
    }
}

impl fmt::Display for TraceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain = self.words.iter().flatten().all(|&l| l == Label::A);
        let parts: Vec<String> = self
            .words
            .iter()
            .map(|w| {
                if plain {
                    w.len().to_string()
                } else {
                    let s: String = w
                        .iter()
                        .map(|l| match l {
                            Label::A => 'A',
                            Label::B => 'B',
                        })
                        .collect();
                    format!("[{s}]")
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for TraceMonomial {
    type Err = MomentError;

    /// Accepts `3,3` (powers of a single matrix) or `[AB],[AA]` (words); the
    /// two item kinds may be mixed.
    fn from_str(s: &str) -> Result<Self, MomentError> {
        let bad = |msg: &str| MomentError::InvalidMonomial(format!("{msg}: {s:?}"));
        let mut words = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            if let Some(inner) = item.strip_prefix('[') {
                let inner = inner
                    .strip_suffix(']')
                    .ok_or_else(|| bad("unclosed bracket"))?;
                let w = inner
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c.to_ascii_uppercase() {
                        'A' => Ok(Label::A),
                        'B' => Ok(Label::B),
                        _ => Err(bad("word letters must be A or B")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                words.push(w);
            } else {
                let n: usize = item.parse().map_err(|_| bad("expected a power"))?;
                if n == 0 {
                    return Err(bad("powers must be at least 1"));
                }
                words.push(vec![Label::A; n]);
            }
        }
        TraceMonomial::new(words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m: TraceMonomial = "3, 3".parse().unwrap();
        assert_eq!(m.powers(), vec![3, 3]);
        assert_eq!(m.to_string(), "3,3");
        let c: TraceMonomial = "[AB],[aa]".parse().unwrap();
        assert_eq!(c.to_string(), "[AB],[AA]");
        assert!(!c.is_single_matrix());
        assert!(!c.is_label_pure());
        assert_eq!(c.restrict(Label::A).unwrap().powers(), vec![2]);
        assert!(c.restrict(Label::B).is_none());
        for bad in ["", "0", "3,,3", "[AC]", "[AB", "[]"] {
            assert!(bad.parse::<TraceMonomial>().is_err(), "{bad}");
        }
    }
}
