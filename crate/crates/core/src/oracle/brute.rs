//! Brute-force counting over every forest of a family.
//!
//! The main engine walks raw parent vectors and tests only root-to-leaf paths.
//! The ordered family is counted through its parent vectors too: avoidance
//! ignores child order, so an avoiding vector contributes the number of ways
//! to order its children. Work is split by parent-vector prefixes and the
//! per-prefix tallies are added in prefix order, so the result never depends
//! on the number of workers.
//!
//! [`brute_count_per_vertex`] is a second, deliberately naive engine used to
//! cross-check the first.

use std::env;
use std::num::NonZeroUsize;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::OracleError;
use crate::forest::FamilyTag;
use crate::generate::{forest_prefixes, gen_forests, ParentCursor};
use crate::pattern::{Pattern, PatternMode, PatternSet};
use crate::perm::Label;

pub const BUDGET_ENV: &str = "FOREST_PATTERNS_BUDGET";

/// Largest `n` counted without an explicit override, per family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub unordered: usize,
    pub binary: usize,
    pub ordered: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            unordered: 8,
            binary: 9,
            ordered: 6,
        }
    }
}

impl Budget {
    pub fn limit(&self, family: FamilyTag) -> usize {
        match family {
            FamilyTag::Unordered => self.unordered,
            FamilyTag::UnorderedBinary => self.binary,
            FamilyTag::Ordered => self.ordered,
        }
    }

    /// The default budget, overridden by `FOREST_PATTERNS_BUDGET` when set.
    pub fn from_env() -> Result<Budget, OracleError> {
        match env::var(BUDGET_ENV) {
            Ok(s) => s.parse(),
            Err(_) => Ok(Budget::default()),
        }
    }
}

/// Either a single limit for every family (`9`) or per-family limits
/// (`unordered=9,ordered=7`); families left out keep their defaults.
impl FromStr for Budget {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OracleError::BadBudget(s.to_string());
        let s = s.trim();
        if let Ok(all) = s.parse::<usize>() {
            return Ok(Budget {
                unordered: all,
                binary: all,
                ordered: all,
            });
        }
        let mut budget = Budget::default();
        for item in s.split(',') {
            let (family, n) = item.split_once('=').ok_or_else(bad)?;
            let family: FamilyTag = family.trim().parse().map_err(|_| bad())?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            match family {
                FamilyTag::Unordered => budget.unordered = n,
                FamilyTag::UnorderedBinary => budget.binary = n,
                FamilyTag::Ordered => budget.ordered = n,
            }
        }
        Ok(budget)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Worker threads; 0 and 1 both mean sequential.
    pub jobs: usize,
    pub budget: Budget,
    pub ignore_budget: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            jobs: std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
            budget: Budget::default(),
            ignore_budget: false,
        }
    }
}

impl CountOptions {
    pub fn sequential() -> Self {
        CountOptions {
            jobs: 1,
            ..CountOptions::default()
        }
    }

    fn check(&self, n: usize, family: FamilyTag) -> Result<(), OracleError> {
        let limit = self.budget.limit(family);
        if n > limit && !self.ignore_budget {
            return Err(OracleError::BudgetExceeded { family, n, limit });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    TopDownMaxima,
    TreeCount,
}

struct Scratch {
    has_child: Vec<bool>,
    kids: Vec<usize>,
    path: Vec<Label>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            has_child: vec![false; n + 1],
            kids: vec![0; n + 1],
            path: Vec::with_capacity(n),
        }
    }

    fn avoids(&mut self, parents: &[Label], ps: &PatternSet) -> bool {
        self.has_child.iter_mut().for_each(|h| *h = false);
        for &p in parents {
            self.has_child[p as usize] = true;
        }
        for leaf in 1..=parents.len() {
            if self.has_child[leaf] {
                continue;
            }
            self.path.clear();
            let mut cur = leaf as Label;
            while cur != 0 {
                self.path.push(cur);
                cur = parents[cur as usize - 1];
            }
            self.path.reverse();
            if !ps.avoided_by(&self.path) {
                return false;
            }
        }
        true
    }

    /// Ways to order the children of every vertex, the virtual root included.
    fn orderings(&mut self, parents: &[Label]) -> u64 {
        self.kids.iter_mut().for_each(|k| *k = 0);
        for &p in parents {
            self.kids[p as usize] += 1;
        }
        self.kids
            .iter()
            .map(|&k| (1..=k as u64).product::<u64>())
            .product()
    }
}

fn statistic(parents: &[Label], stat: Statistic) -> usize {
    match stat {
        Statistic::TreeCount => parents.iter().filter(|&&p| p == 0).count(),
        Statistic::TopDownMaxima => (1..=parents.len() as Label)
            .filter(|&v| {
                let mut cur = parents[v as usize - 1];
                while cur != 0 {
                    if cur > v {
                        return false;
                    }
                    cur = parents[cur as usize - 1];
                }
                true
            })
            .count(),
    }
}

fn tally_prefix(
    n: usize,
    family: FamilyTag,
    ps: &PatternSet,
    stat: Option<Statistic>,
    prefix: &[Label],
) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let mut scratch = Scratch::new(n);
    let mut cursor = ParentCursor::with_prefix(n, family == FamilyTag::UnorderedBinary, prefix);
    while cursor.advance() {
        let parents = cursor.parents();
        if !scratch.avoids(parents, ps) {
            continue;
        }
        let weight = match family {
            FamilyTag::Ordered => scratch.orderings(parents),
            _ => 1,
        };
        let slot = stat.map_or(0, |s| statistic(parents, s));
        hist[slot] += weight;
    }
    hist
}

fn tally(
    n: usize,
    family: FamilyTag,
    ps: &PatternSet,
    stat: Option<Statistic>,
    opts: &CountOptions,
) -> Result<Vec<BigUint>, OracleError> {
    opts.check(n, family)?;
    let prefixes = forest_prefixes(n, family, 2);
    let run = |p: &Vec<Label>| tally_prefix(n, family, ps, stat, p);
    let parts: Vec<Vec<u64>> = if opts.jobs <= 1 {
        prefixes.iter().map(run).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
            Ok(pool) => pool.install(|| prefixes.par_iter().map(run).collect()),
            Err(_) => prefixes.iter().map(run).collect(),
        }
    };
    let mut total = vec![BigUint::default(); n + 1];
    for part in parts {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c;
        }
    }
    Ok(total)
}

/// Number of forests on `[n]` in `family` that avoid every pattern of `ps`.
pub fn brute_count(
    n: usize,
    family: FamilyTag,
    ps: &PatternSet,
    opts: &CountOptions,
) -> Result<BigUint, OracleError> {
    Ok(tally(n, family, ps, None, opts)?.swap_remove(0))
}

/// Size of the whole family on `[n]`, counted by enumeration.
pub fn family_size(n: usize, family: FamilyTag, opts: &CountOptions) -> Result<BigUint, OracleError> {
    opts.check(n, family)?;
    let mut scratch = Scratch::new(n);
    let mut cursor = ParentCursor::new(n, family == FamilyTag::UnorderedBinary);
    let mut total = 0u64;
    while cursor.advance() {
        total += match family {
            FamilyTag::Ordered => scratch.orderings(cursor.parents()),
            _ => 1,
        };
    }
    Ok(BigUint::from(total))
}

/// Avoiding forests split by a statistic; entry `i` counts those where the
/// statistic equals `i`, for `i` in `0..=n`.
pub fn refined_counts(
    n: usize,
    family: FamilyTag,
    ps: &PatternSet,
    stat: Statistic,
    opts: &CountOptions,
) -> Result<Vec<BigUint>, OracleError> {
    tally(n, family, ps, Some(stat), opts)
}

pub fn refined_count(
    n: usize,
    family: FamilyTag,
    ps: &PatternSet,
    stat: Statistic,
    value: usize,
    opts: &CountOptions,
) -> Result<BigUint, OracleError> {
    let counts = refined_counts(n, family, ps, stat, opts)?;
    Ok(counts.get(value).cloned().unwrap_or_default())
}

/// Pattern containment by trying every choice of positions and comparing
/// all pairs, without standardizing.
pub fn naive_contains(seq: &[Label], pattern: &Pattern) -> bool {
    let pat = pattern.word();
    let k = pat.len();
    let matches =
        |idx: &[usize]| (0..k).all(|a| (a + 1..k).all(|b| (seq[idx[a]] < seq[idx[b]]) == (pat[a] < pat[b])));
    if k > seq.len() {
        return false;
    }
    match pattern.mode() {
        PatternMode::Consecutive => (0..=seq.len() - k).any(|s| matches(&(s..s + k).collect::<Vec<_>>())),
        PatternMode::Classical => (0u32..1 << seq.len())
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| matches(&(0..seq.len()).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>())),
    }
}

/// Independent count: materializes every forest (every child order too, for
/// the ordered family) and checks the path to every vertex with
/// [`naive_contains`]. Sequential and slow; meant for small `n`.
pub fn brute_count_per_vertex(
    n: usize,
    family: FamilyTag,
    ps: &PatternSet,
    opts: &CountOptions,
) -> Result<BigUint, OracleError> {
    opts.check(n, family)?;
    let count = gen_forests(n, family)
        .filter(|f| {
            f.labels().iter().all(|&v| {
                let path = f.path_to(v);
                ps.patterns().iter().all(|p| !naive_contains(&path, p))
            })
        })
        .count();
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    fn count(n: usize, family: FamilyTag, s: &str) -> u64 {
        brute_count(n, family, &ps(s), &CountOptions::sequential())
            .unwrap()
            .try_into()
            .unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(3, FamilyTag::Unordered, "213,312"), 14);
        assert_eq!(count(4, FamilyTag::Unordered, "321"), 104);
        assert_eq!(count(4, FamilyTag::Unordered, "!321"), 107);
        assert_eq!(count(4, FamilyTag::UnorderedBinary, "!321"), 90);
        assert_eq!(count(4, FamilyTag::Ordered, "321"), 304);
        assert_eq!(count(0, FamilyTag::Unordered, "21"), 1);
    }

    #[test]
    fn engines_agree() {
        for family in FamilyTag::ALL {
            for s in ["321", "!231", "132,!213", "2143"] {
                let a = brute_count(4, family, &ps(s), &CountOptions::sequential()).unwrap();
                let b = brute_count_per_vertex(4, family, &ps(s), &CountOptions::sequential()).unwrap();
                assert_eq!(a, b, "{family} {s}");
            }
        }
    }

    #[test]
    fn refined_counts_add_up() {
        let set = ps("213,312");
        let opts = CountOptions::sequential();
        let total = brute_count(4, FamilyTag::Unordered, &set, &opts).unwrap();
        for stat in [Statistic::TopDownMaxima, Statistic::TreeCount] {
            let parts = refined_counts(4, FamilyTag::Unordered, &set, stat, &opts).unwrap();
            assert_eq!(parts.iter().sum::<BigUint>(), total);
        }
        let two = refined_count(2, FamilyTag::Unordered, &set, Statistic::TreeCount, 1, &opts).unwrap();
        assert_eq!(two, BigUint::from(2u32));
    }

    #[test]
    fn budget_parsing_and_enforcement() {
        assert_eq!("7".parse::<Budget>().unwrap().ordered, 7);
        let b: Budget = "ordered=7, binary=10".parse().unwrap();
        assert_eq!((b.unordered, b.binary, b.ordered), (8, 10, 7));
        assert!("ordered:7".parse::<Budget>().is_err());
        let err = brute_count(7, FamilyTag::Ordered, &ps("21"), &CountOptions::sequential());
        assert!(matches!(err, Err(OracleError::BudgetExceeded { limit: 6, .. })));
    }

    #[test]
    fn naive_containment() {
        let p: Pattern = "132".parse().unwrap();
        assert!(naive_contains(&[2, 5, 9, 4], &p));
        assert!(!naive_contains(&[1, 2, 3], &p));
        let q: Pattern = "!132".parse().unwrap();
        assert!(!naive_contains(&[1, 5, 2, 4], &"!231".parse().unwrap()));
        assert!(naive_contains(&[1, 5, 2, 4], &q));
    }
}
