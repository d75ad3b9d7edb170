//! Permutations over arbitrary finite ordered ground sets.
//!
//! A [`Permutation`] stores its one-line word together with the sorted ground
//! set it rearranges. Symmetries on a general ground set are computed by
//! standardizing to `[k]`, applying the operation there, and mapping the values
//! back through the ground set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::SetPartition;
use crate::pattern::Pattern;

/// A vertex label or permutation entry. Label `0` is reserved for the virtual
/// root of a forest and never appears in a permutation.
pub type Label = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("sequence repeats the entry {0}")]
    InvalidSequence(Label),
    #[error("label 0 is reserved and cannot appear in a permutation")]
    ZeroLabel,
    #[error("invalid cycle decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl PermError {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        PermError::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// A bijection on a finite linearly ordered set, in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    ground: Vec<Label>,
    word: Vec<Label>,
}

impl Permutation {
    /// Builds a permutation from its one-line word. The ground set is the set
    /// of entries.
    pub fn new(word: Vec<Label>) -> Result<Self, PermError> {
        let mut ground = word.clone();
        ground.sort_unstable();
        if ground.first() == Some(&0) {
            return Err(PermError::ZeroLabel);
        }
        if let Some(w) = ground.windows(2).find(|w| w[0] == w[1]) {
            return Err(PermError::InvalidSequence(w[0]));
        }
        Ok(Permutation { ground, word })
    }

    pub fn identity(n: usize) -> Self {
        let word: Vec<Label> = (1..=n as Label).collect();
        Permutation {
            ground: word.clone(),
            word,
        }
    }

    pub(crate) fn from_parts_unchecked(ground: Vec<Label>, word: Vec<Label>) -> Self {
        debug_assert!({
            let mut g = word.clone();
            g.sort_unstable();
            g == ground
        });
        Permutation { ground, word }
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn word(&self) -> &[Label] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// True when the ground set is exactly `[n]`.
    pub fn is_standard(&self) -> bool {
        self.ground.iter().enumerate().all(|(i, &g)| g as usize == i + 1)
    }

    fn rank_of(&self, value: Label) -> usize {
        self.ground
            .binary_search(&value)
            .expect("value belongs to the ground set")
    }

    /// The permutation of `[k]` in the same relative order.
    pub fn standardize(&self) -> Permutation {
        let word = self.word.iter().map(|&v| self.rank_of(v) as Label + 1).collect();
        Permutation {
            ground: (1..=self.len() as Label).collect(),
            word,
        }
    }

    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation {
            ground: self.ground.clone(),
            word,
        }
    }

    /// Swaps the i-th smallest ground element with the i-th largest.
    pub fn complement(&self) -> Permutation {
        let m = self.len();
        let word = self
            .word
            .iter()
            .map(|&v| self.ground[m - 1 - self.rank_of(v)])
            .collect();
        Permutation {
            ground: self.ground.clone(),
            word,
        }
    }

    pub fn inverse(&self) -> Permutation {
        let std = self.standardize();
        let mut inv = vec![0; self.len()];
        for (pos, &v) in std.word.iter().enumerate() {
            inv[v as usize - 1] = pos;
        }
        let word = inv.into_iter().map(|pos| self.ground[pos]).collect();
        Permutation {
            ground: self.ground.clone(),
            word,
        }
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        pattern.occurs_in(&self.word)
    }

    pub fn stats(&self) -> PermStats {
        let w = &self.word;
        let mut stats = PermStats::default();
        for i in 1..w.len() {
            if w[i - 1] > w[i] {
                stats.descents.push(i);
            } else {
                stats.ascents.push(i);
            }
        }
        let (mut lo, mut hi) = (Label::MAX, 0);
        for &v in w {
            if v < lo {
                lo = v;
                stats.lr_minima.push(v);
            }
            if v > hi {
                hi = v;
                stats.lr_maxima.push(v);
            }
        }
        stats
    }

    /// Cycle notation of the map sending the i-th smallest ground element to
    /// the i-th entry of the word. Cycles start at their smallest element and
    /// are listed by increasing minimum, as in standard cycle notation.
    pub fn to_cycles(&self) -> CycleDecomposition {
        let image = |v: Label| self.word[self.rank_of(v)];
        let mut seen = BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in &self.ground {
            if !seen.insert(start) {
                continue;
            }
            let mut cycle = vec![start];
            let mut v = image(start);
            while v != start {
                seen.insert(v);
                cycle.push(v);
                v = image(v);
            }
            cycles.push(cycle);
        }
        CycleDecomposition {
            cycles,
            structure: CycleStructure::Ordered,
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.word, ",")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Comma-separated entries, e.g. `3,6,8,4,1,10,2,9,7,5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let word = parse_label_list(s, ',')?;
        Permutation::new(word)
    }
}

pub(crate) fn parse_label_list(s: &str, sep: char) -> Result<Vec<Label>, PermError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(sep)
        .map(|t| {
            t.trim()
                .parse::<Label>()
                .map_err(|e| PermError::parse(s, format!("{t:?}: {e}")))
        })
        .collect()
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[Label], sep: &str) -> fmt::Result {
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Returns the permutation of `[k]` in the same relative order as `seq`.
pub fn standardize(seq: &[Label]) -> Result<Permutation, PermError> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(PermError::InvalidSequence(w[0]));
    }
    let word = seq
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as Label + 1)
        .collect();
    Ok(Permutation {
        ground: (1..=seq.len() as Label).collect(),
        word,
    })
}

/// Descents and ascents are 1-based positions; the extrema lists hold values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PermStats {
    pub descents: Vec<usize>,
    pub ascents: Vec<usize>,
    pub lr_minima: Vec<Label>,
    pub lr_maxima: Vec<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CycleStructure {
    /// The order in which the cycles are listed is significant.
    Ordered,
    /// The cycles are grouped into blocks; the partition is over 1-based
    /// cycle indices.
    Partitioned(SetPartition),
}

/// A permutation written as disjoint cycles, either ordered or partitioned.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<Label>>,
    structure: CycleStructure,
}

impl CycleDecomposition {
    pub fn new(cycles: Vec<Vec<Label>>, structure: CycleStructure) -> Result<Self, PermError> {
        let mut seen = BTreeSet::new();
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(PermError::InvalidDecomposition("empty cycle".into()));
            }
            for &v in cycle {
                if v == 0 {
                    return Err(PermError::ZeroLabel);
                }
                if !seen.insert(v) {
                    return Err(PermError::InvalidDecomposition(format!(
                        "{v} appears in more than one place"
                    )));
                }
            }
        }
        if let CycleStructure::Partitioned(p) = &structure {
            let expected: Vec<Label> = (1..=cycles.len() as Label).collect();
            if p.ground() != expected {
                return Err(PermError::InvalidDecomposition(format!(
                    "cycle partition must cover cycle indices 1..={}",
                    cycles.len()
                )));
            }
        }
        Ok(CycleDecomposition { cycles, structure })
    }

    pub fn ordered(cycles: Vec<Vec<Label>>) -> Result<Self, PermError> {
        Self::new(cycles, CycleStructure::Ordered)
    }

    pub fn cycles(&self) -> &[Vec<Label>] {
        &self.cycles
    }

    pub fn structure(&self) -> &CycleStructure {
        &self.structure
    }

    pub fn ground(&self) -> Vec<Label> {
        let mut g: Vec<Label> = self.cycles.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    /// Blocks of cycles (each block a list of cycles) for a partitioned
    /// decomposition, or one block per cycle for an ordered one.
    pub fn blocks(&self) -> Vec<Vec<&[Label]>> {
        match &self.structure {
            CycleStructure::Ordered => self.cycles.iter().map(|c| vec![c.as_slice()]).collect(),
            CycleStructure::Partitioned(p) => p
                .blocks()
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|&i| self.cycles[i as usize - 1].as_slice())
                        .collect()
                })
                .collect(),
        }
    }

    /// Rotates every cycle so that its maximum comes first. A partitioned
    /// decomposition additionally lists its cycles by increasing maximum, since
    /// their order carries no information.
    pub fn canonical(&self) -> CycleDecomposition {
        let rotated: Vec<Vec<Label>> = self
            .cycles
            .iter()
            .map(|c| {
                let at = (0..c.len()).max_by_key(|&i| c[i]).unwrap();
                let mut r = c[at..].to_vec();
                r.extend_from_slice(&c[..at]);
                r
            })
            .collect();
        match &self.structure {
            CycleStructure::Ordered => CycleDecomposition {
                cycles: rotated,
                structure: CycleStructure::Ordered,
            },
            CycleStructure::Partitioned(p) => {
                let mut order: Vec<usize> = (0..rotated.len()).collect();
                order.sort_by_key(|&i| rotated[i][0]);
                let mut new_index = vec![0; rotated.len()];
                for (new, &old) in order.iter().enumerate() {
                    new_index[old] = new as Label + 1;
                }
                let blocks = p
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|&i| new_index[i as usize - 1]).collect())
                    .collect();
                CycleDecomposition {
                    cycles: order.iter().map(|&i| rotated[i].clone()).collect(),
                    structure: CycleStructure::Partitioned(
                        SetPartition::new(blocks).expect("relabelled partition stays valid"),
                    ),
                }
            }
        }
    }

    /// The permutation these cycles describe, as a one-line word over the
    /// union of the cycles.
    pub fn to_permutation(&self) -> Permutation {
        let ground = self.ground();
        let mut word = vec![0; ground.len()];
        for cycle in &self.cycles {
            for (i, &v) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                word[ground.binary_search(&v).unwrap()] = next;
            }
        }
        Permutation { ground, word }
    }
}

/// Inverse of [`Permutation::to_cycles`].
pub fn from_cycles(cd: &CycleDecomposition) -> Permutation {
    cd.to_permutation()
}

fn write_cycles(f: &mut fmt::Formatter<'_>, cycles: &[&[Label]]) -> fmt::Result {
    for c in cycles {
        f.write_str("(")?;
        write_list(f, c, ",")?;
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for CycleDecomposition {
    /// Ordered: `(11,4,10,7)(12)`. Partitioned: each block of cycles in
    /// braces, `{(2,1)(3)}{(4)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.structure {
            CycleStructure::Ordered => {
                let cs: Vec<&[Label]> = self.cycles.iter().map(Vec::as_slice).collect();
                write_cycles(f, &cs)
            }
            CycleStructure::Partitioned(_) => {
                for block in self.blocks() {
                    f.write_str("{")?;
                    write_cycles(f, &block)?;
                    f.write_str("}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_cycle_run(s: &str) -> Result<Vec<Vec<Label>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::parse(s, "expected '('"))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::parse(s, "unbalanced parenthesis"))?;
        let cycle = parse_label_list(&body[..close], ',')?;
        if cycle.is_empty() {
            return Err(PermError::parse(s, "empty cycle"));
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for CycleDecomposition {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if !t.starts_with('{') {
            return CycleDecomposition::ordered(parse_cycle_run(t)?);
        }
        let mut cycles = Vec::new();
        let mut blocks = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| PermError::parse(s, "expected '{'"))?;
            let close = body
                .find('}')
                .ok_or_else(|| PermError::parse(s, "unbalanced brace"))?;
            let run = parse_cycle_run(&body[..close])?;
            if run.is_empty() {
                return Err(PermError::parse(s, "empty block"));
            }
            let mut block = Vec::new();
            for c in run {
                cycles.push(c);
                block.push(cycles.len() as Label);
            }
            blocks.push(block);
            rest = body[close + 1..].trim_start();
        }
        let partition =
            SetPartition::new(blocks).map_err(|e| PermError::InvalidDecomposition(e.to_string()))?;
        CycleDecomposition::new(cycles, CycleStructure::Partitioned(partition))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Pattern;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn digits(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|b| (b - b'0') as Label).collect()).unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[5, 9, 3, 8, 1]).unwrap(), digits("35241"));
        assert!(standardize(&[]).unwrap().is_empty());
        assert_eq!(standardize(&[1, 2, 3]).unwrap(), digits("123"));
        assert_eq!(standardize(&[4, 1, 4]), Err(PermError::InvalidSequence(4)));
    }

    #[test]
    fn containment_examples() {
        let q = digits("51263748");
        assert!(q.contains(&"231".parse::<Pattern>().unwrap()));
        assert!(!q.contains(&"321".parse::<Pattern>().unwrap()));
        let r = digits("59381");
        assert!(!r.contains(&"123".parse::<Pattern>().unwrap()));
        assert!(r.contains(&"231".parse::<Pattern>().unwrap()));
        assert!(digits("132").contains(&"!132".parse::<Pattern>().unwrap()));
    }

    #[test]
    fn symmetries_on_general_ground() {
        let q = digits("59381");
        assert_eq!(q.reverse(), digits("18395"));
        assert_eq!(q.complement(), digits("51839"));
        assert_eq!(q.inverse(), digits("95183"));
    }

    #[test]
    fn stats_examples() {
        let s = digits("59381").stats();
        assert_eq!(s.descents, vec![2, 4]);
        assert_eq!(s.ascents, vec![1, 3]);
        assert_eq!(s.lr_maxima, vec![5, 9]);
        assert_eq!(s.lr_minima, vec![5, 3, 1]);
        assert!(digits("12345").stats().descents.is_empty());
        assert_eq!(digits("4672513").stats().lr_minima, vec![4, 2, 1]);
    }

    #[test]
    fn cycle_examples() {
        let cd = digits("4672513").to_cycles();
        assert_eq!(cd.to_string(), "(1,4,2,6)(3,7)(5)");
        assert_eq!(Permutation::identity(3).to_cycles().to_string(), "(1)(2)(3)");
        let t: CycleDecomposition = "(2,1)".parse().unwrap();
        assert_eq!(from_cycles(&t), p("2,1"));
        assert_eq!(cd.canonical().to_string(), "(6,1,4,2)(7,3)(5)");
        assert!(matches!(
            "(1,2)(2,3)".parse::<CycleDecomposition>(),
            Err(PermError::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn partitioned_cycles_text() {
        let cd: CycleDecomposition = "{(2,1)(3)}{(4)}".parse().unwrap();
        assert_eq!(cd.cycles().len(), 3);
        assert_eq!(cd.to_string(), "{(2,1)(3)}{(4)}");
        let canon: CycleDecomposition = "{(4)}{(1,2)(3)}".parse().unwrap();
        assert_eq!(canon.canonical().to_string(), "{(2,1)(3)}{(4)}");
    }

    #[test]
    fn empty_permutation_avoids_everything() {
        let e = Permutation::new(vec![]).unwrap();
        assert!(!e.contains(&"1".parse::<Pattern>().unwrap()));
    }

    fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max)
            .prop_flat_map(|n| Just((1..=n as Label).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|w| Permutation::new(w).unwrap())
    }

    fn pattern_strategy() -> impl Strategy<Value = Pattern> {
        (
            perm_strategy(4).prop_filter("nonempty", |p| !p.is_empty()),
            any::<bool>(),
        )
            .prop_map(|(p, c)| {
                if c {
                    Pattern::consecutive(p.word()).unwrap()
                } else {
                    Pattern::classical(p.word()).unwrap()
                }
            })
    }

    proptest! {
        #[test]
        fn symmetry_laws(q in perm_strategy(7)) {
            prop_assert_eq!(q.reverse().reverse(), q.clone());
            prop_assert_eq!(q.complement().complement(), q.clone());
            prop_assert_eq!(q.inverse().inverse(), q.clone());
            prop_assert_eq!(q.inverse().reverse(), q.complement().inverse());
        }

        #[test]
        fn cycles_round_trip(q in perm_strategy(7)) {
            prop_assert_eq!(from_cycles(&q.to_cycles()), q.clone());
            prop_assert_eq!(from_cycles(&q.to_cycles().canonical()), q);
        }

        #[test]
        fn consecutive_implies_classical(q in perm_strategy(7), pat in perm_strategy(4)) {
            prop_assume!(!pat.is_empty());
            let consec = Pattern::consecutive(pat.word()).unwrap();
            let classic = Pattern::classical(pat.word()).unwrap();
            prop_assert!(!q.contains(&consec) || q.contains(&classic));
        }

        #[test]
        fn containment_respects_complement(q in perm_strategy(6), pat in pattern_strategy()) {
            prop_assert_eq!(q.contains(&pat), q.complement().contains(&pat.complement()));
        }
    }
}
