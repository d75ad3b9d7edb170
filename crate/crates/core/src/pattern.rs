//! Classical and consecutive patterns, and sets of them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{Label, PermError, Permutation};

/// Longest pattern the matcher accepts.
pub const MAX_PATTERN_LEN: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("a pattern must have at least one entry")]
    Empty,
    #[error("patterns longer than {MAX_PATTERN_LEN} are not supported")]
    TooLong,
    #[error("{0:?} is not a permutation of 1..k")]
    NotStandard(String),
    #[error("a pattern set must not be empty")]
    EmptySet,
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternMode {
    /// Occurrences are arbitrary subsequences.
    Classical,
    /// Occurrences are contiguous factors.
    Consecutive,
}

/// A permutation of `[k]` together with how its occurrences are matched.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    perm: Permutation,
    mode: PatternMode,
}

impl Pattern {
    pub fn new(word: &[Label], mode: PatternMode) -> Result<Self, PatternError> {
        if word.is_empty() {
            return Err(PatternError::Empty);
        }
        if word.len() > MAX_PATTERN_LEN {
            return Err(PatternError::TooLong);
        }
        let perm = Permutation::new(word.to_vec())?;
        if !perm.is_standard() {
            return Err(PatternError::NotStandard(perm.to_string()));
        }
        Ok(Pattern { perm, mode })
    }

    pub fn classical(word: &[Label]) -> Result<Self, PatternError> {
        Self::new(word, PatternMode::Classical)
    }

    pub fn consecutive(word: &[Label]) -> Result<Self, PatternError> {
        Self::new(word, PatternMode::Consecutive)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn word(&self) -> &[Label] {
        self.perm.word()
    }

    pub fn mode(&self) -> PatternMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn with_mode(&self, mode: PatternMode) -> Pattern {
        Pattern {
            perm: self.perm.clone(),
            mode,
        }
    }

    pub fn complement(&self) -> Pattern {
        Pattern {
            perm: self.perm.complement(),
            mode: self.mode,
        }
    }

    /// Whether `seq` (distinct values) contains an occurrence of this pattern.
    pub fn occurs_in(&self, seq: &[Label]) -> bool {
        let pat = self.perm.word();
        match self.mode {
            PatternMode::Classical => occurs_classical(seq, pat),
            PatternMode::Consecutive => occurs_consecutive(seq, pat),
        }
    }
}

fn occurs_consecutive(seq: &[Label], pat: &[Label]) -> bool {
    let k = pat.len();
    seq.windows(k)
        .any(|w| (0..k).all(|a| (a + 1..k).all(|b| (w[a] < w[b]) == (pat[a] < pat[b]))))
}

fn occurs_classical(seq: &[Label], pat: &[Label]) -> bool {
    let k = pat.len();
    if k > seq.len() {
        return false;
    }
    let mut chosen = [0 as Label; MAX_PATTERN_LEN];
    extend_occurrence(seq, pat, 0, 0, &mut chosen)
}

/// Depth-first search over index subsequences. An entry is only taken if it
/// sits in the right relative order to every entry already chosen, and the
/// scan stops early once too few entries remain to finish the occurrence.
fn extend_occurrence(
    seq: &[Label],
    pat: &[Label],
    start: usize,
    depth: usize,
    chosen: &mut [Label; MAX_PATTERN_LEN],
) -> bool {
    let k = pat.len();
    if depth == k {
        return true;
    }
    let last = seq.len() - (k - depth);
    for i in start..=last {
        let v = seq[i];
        if (0..depth).all(|t| (v < chosen[t]) == (pat[depth] < pat[t])) {
            chosen[depth] = v;
            if extend_occurrence(seq, pat, i + 1, depth + 1, chosen) {
                return true;
            }
        }
    }
    false
}

impl fmt::Display for Pattern {
    /// Digits of the pattern, prefixed by `!` in consecutive mode.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mode == PatternMode::Consecutive {
            f.write_str("!")?;
        }
        for v in self.perm.word() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (mode, body) = match s.strip_prefix('!') {
            Some(rest) => (PatternMode::Consecutive, rest),
            None => (PatternMode::Classical, s),
        };
        let word = body
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as Label)
                    .ok_or_else(|| PermError::parse(s, "pattern entries are digits 1-9"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Pattern::new(&word, mode)
    }
}

/// A nonempty collection of patterns. A sequence avoids the set when it
/// avoids every member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternSet(Vec<Pattern>);

impl PatternSet {
    pub fn new(patterns: Vec<Pattern>) -> Result<Self, PatternError> {
        if patterns.is_empty() {
            return Err(PatternError::EmptySet);
        }
        Ok(PatternSet(patterns))
    }

    /// Builds a set of classical patterns from digit strings. Panics on bad
    /// input; meant for literals.
    pub fn classical(words: &[&str]) -> Self {
        PatternSet::new(
            words
                .iter()
                .map(|w| w.parse::<Pattern>().expect("valid pattern literal"))
                .map(|p| p.with_mode(PatternMode::Classical))
                .collect(),
        )
        .expect("nonempty literal")
    }

    pub fn single(pattern: Pattern) -> Self {
        PatternSet(vec![pattern])
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    pub fn complement(&self) -> PatternSet {
        PatternSet(self.0.iter().map(Pattern::complement).collect())
    }

    pub fn with_mode(&self, mode: PatternMode) -> PatternSet {
        PatternSet(self.0.iter().map(|p| p.with_mode(mode)).collect())
    }

    /// True when `seq` contains none of the patterns.
    pub fn avoided_by(&self, seq: &[Label]) -> bool {
        !self.0.iter().any(|p| p.occurs_in(seq))
    }

    pub fn max_len(&self) -> usize {
        self.0.iter().map(Pattern::len).max().unwrap_or(0)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = PatternError;

    /// Comma-separated patterns, e.g. `321,!231`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let patterns = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        PatternSet::new(patterns)
    }
}

/// Brute-force reference for [`Pattern::occurs_in`]: tries every index subset.
#[cfg(test)]
pub(crate) fn occurs_by_subsets(seq: &[Label], pattern: &Pattern) -> bool {
    let k = pattern.len();
    let n = seq.len();
    (0u32..1 << n).any(|mask| {
        if mask.count_ones() as usize != k {
            return false;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if pattern.mode() == PatternMode::Consecutive && idx.windows(2).any(|w| w[1] != w[0] + 1) {
            return false;
        }
        let sub: Vec<Label> = idx.iter().map(|&i| seq[i]).collect();
        crate::perm::standardize(&sub).unwrap().word() == pattern.word()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: PatternSet = "321,!231".parse().unwrap();
        assert_eq!(s.patterns()[0].mode(), PatternMode::Classical);
        assert_eq!(s.patterns()[1].mode(), PatternMode::Consecutive);
        assert_eq!(s.to_string(), "321,!231");
        assert_eq!(s.complement().to_string(), "123,!213");
        assert!("".parse::<PatternSet>().is_err());
        assert!("1224".parse::<Pattern>().is_err());
        assert!("24".parse::<Pattern>().is_err());
        assert!("1234567".parse::<Pattern>().is_err());
    }

    #[test]
    fn matcher_agrees_with_subset_enumeration() {
        let pats: Vec<Pattern> = ["1", "21", "231", "!231", "2143", "!3142", "4321", "!12"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let seqs: [&[Label]; 6] = [
            &[],
            &[3],
            &[2, 1, 3],
            &[5, 1, 2, 6, 3, 7, 4, 8],
            &[9, 3, 12, 11, 8, 2],
            &[4, 6, 7, 2, 5, 1, 3],
        ];
        for seq in seqs {
            for p in &pats {
                assert_eq!(p.occurs_in(seq), occurs_by_subsets(seq, p), "{p} in {seq:?}");
            }
        }
    }

    #[test]
    fn path_213_avoids_312() {
        let p: Pattern = "312".parse().unwrap();
        assert!(!p.occurs_in(&[2, 1, 3]));
    }
}
