//! Exhaustive, deterministic generation of forests and of the bijection
//! domains.
//!
//! Every stream is lazy. Unordered forests on `[n]` are produced as acyclic
//! parent vectors in lexicographic order; since the parent vector is already a
//! canonical form no deduplication is needed. Ordered forests pair each parent
//! vector with every choice of child orders.

use crate::forest::{FamilyTag, Forest};
use crate::partition::{Composition, ListFlags, ListPartition, OrderedSetPartition, SetPartition};
use crate::perm::{CycleDecomposition, CycleStructure, Label, Permutation};

/// Rearranges `xs` into the next permutation in lexicographic order. Returns
/// false (leaving `xs` sorted ascending) once the last one has been passed.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Walks all acyclic parent vectors on `[n]` that extend a fixed prefix,
/// optionally capping every vertex (the virtual root included) at two
/// children.
#[derive(Clone, Debug)]
pub struct ParentCursor {
    n: usize,
    prefix_len: usize,
    binary: bool,
    parents: Vec<Label>,
    /// Next parent to try at each position.
    next: Vec<Label>,
    level: usize,
    started: bool,
    done: bool,
}

impl ParentCursor {
    pub fn new(n: usize, binary: bool) -> Self {
        Self::with_prefix(n, binary, &[])
    }

    /// Restricts the walk to vectors starting with `prefix`. An invalid
    /// prefix yields an empty walk.
    pub fn with_prefix(n: usize, binary: bool, prefix: &[Label]) -> Self {
        assert!(prefix.len() <= n, "prefix longer than the forest");
        let mut parents = vec![0; n];
        parents[..prefix.len()].copy_from_slice(prefix);
        let mut cursor = ParentCursor {
            n,
            prefix_len: prefix.len(),
            binary,
            parents,
            next: vec![0; n + 1],
            level: prefix.len(),
            started: false,
            done: false,
        };
        cursor.done = !(0..prefix.len()).all(|i| cursor.acceptable(i, prefix[i]));
        cursor
    }

    fn acceptable(&self, i: usize, p: Label) -> bool {
        let v = i as Label + 1;
        if p as usize > self.n || p == v {
            return false;
        }
        // every cycle closes at its last assigned member, so walking up
        // through assigned vertices is enough
        let mut q = p;
        while q != 0 && (q as usize) <= i {
            q = self.parents[q as usize - 1];
            if q == v {
                return false;
            }
        }
        if self.binary {
            let siblings = self.parents[..i].iter().filter(|&&x| x == p).count();
            if siblings >= 2 {
                return false;
            }
        }
        true
    }

    /// Moves to the next parent vector. Returns false when exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            self.level = self.prefix_len;
            if self.level < self.n {
                self.next[self.level] = 0;
            }
        } else {
            if self.n == self.prefix_len {
                self.done = true;
                return false;
            }
            self.level = self.n - 1;
        }
        loop {
            if self.level == self.n {
                return true;
            }
            let i = self.level;
            let mut placed = false;
            while (self.next[i] as usize) <= self.n {
                let p = self.next[i];
                self.next[i] += 1;
                if self.acceptable(i, p) {
                    self.parents[i] = p;
                    placed = true;
                    break;
                }
            }
            if placed {
                self.level += 1;
                if self.level < self.n {
                    self.next[self.level] = 0;
                }
            } else if i == self.prefix_len {
                self.done = true;
                return false;
            } else {
                self.level -= 1;
            }
        }
    }

    pub fn parents(&self) -> &[Label] {
        &self.parents
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Cursor over one forest family. For the ordered family every parent vector
/// is visited once per choice of child orders.
#[derive(Clone, Debug)]
pub struct ForestCursor {
    family: FamilyTag,
    shape: ParentCursor,
    /// Current child orders (ordered family only), slot 0 for the roots.
    orders: Vec<Vec<Label>>,
    fresh: bool,
}

impl ForestCursor {
    pub fn new(n: usize, family: FamilyTag) -> Self {
        Self::with_prefix(n, family, &[])
    }

    pub fn with_prefix(n: usize, family: FamilyTag, prefix: &[Label]) -> Self {
        ForestCursor {
            family,
            shape: ParentCursor::with_prefix(n, family == FamilyTag::UnorderedBinary, prefix),
            orders: Vec::new(),
            fresh: true,
        }
    }

    fn reset_orders(&mut self) {
        let n = self.shape.n;
        self.orders.iter_mut().for_each(Vec::clear);
        self.orders.resize(n + 1, Vec::new());
        for (i, &p) in self.shape.parents.iter().enumerate() {
            self.orders[p as usize].push(i as Label + 1);
        }
    }

    /// Moves to the next forest. Returns false when exhausted.
    pub fn advance(&mut self) -> bool {
        if self.family != FamilyTag::Ordered {
            return self.shape.advance();
        }
        if !self.fresh {
            // odometer over the child orders, last vertex fastest
            for slot in (0..self.orders.len()).rev() {
                if next_permutation(&mut self.orders[slot]) {
                    return true;
                }
            }
        }
        self.fresh = false;
        if !self.shape.advance() {
            return false;
        }
        self.reset_orders();
        true
    }

    pub fn parents(&self) -> &[Label] {
        self.shape.parents()
    }

    /// Child orders of the current ordered forest, indexed by vertex.
    pub fn child_orders(&self) -> Option<&[Vec<Label>]> {
        (self.family == FamilyTag::Ordered).then_some(self.orders.as_slice())
    }

    pub fn forest(&self) -> Forest {
        let f = Forest::from_parents(self.shape.n, self.parents()).expect("generated vectors are acyclic");
        match self.child_orders() {
            None => f,
            Some(o) => f
                .with_child_order(o.to_vec())
                .expect("generated orders are valid"),
        }
    }
}

/// Iterator adaptor over a [`ForestCursor`].
#[derive(Clone, Debug)]
pub struct Forests {
    cursor: ForestCursor,
}

impl Iterator for Forests {
    type Item = Forest;
    fn next(&mut self) -> Option<Forest> {
        self.cursor.advance().then(|| self.cursor.forest())
    }
}

/// All forests on `[n]` in `family`, in lexicographic order of parent vectors
/// (then of child orders).
pub fn gen_forests(n: usize, family: FamilyTag) -> Forests {
    Forests {
        cursor: ForestCursor::new(n, family),
    }
}

pub fn gen_forests_with_prefix(n: usize, family: FamilyTag, prefix: &[Label]) -> Forests {
    Forests {
        cursor: ForestCursor::with_prefix(n, family, prefix),
    }
}

/// The valid parent-vector prefixes of length `depth`, in lexicographic order.
/// The streams they start partition the family.
pub fn forest_prefixes(n: usize, family: FamilyTag, depth: usize) -> Vec<Vec<Label>> {
    let depth = depth.min(n);
    let binary = family == FamilyTag::UnorderedBinary;
    let mut out = Vec::new();
    // prefixes may point at vertices beyond `depth`, so enumerate raw tuples
    // and let the full-size cursor judge them
    let mut tuple = vec![0 as Label; depth];
    loop {
        if !ParentCursor::with_prefix(n, binary, &tuple).done {
            out.push(tuple.clone());
        }
        let mut i = depth;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (tuple[i] as usize) < n {
                tuple[i] += 1;
                tuple[i + 1..].iter_mut().for_each(|t| *t = 0);
                break;
            }
        }
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn gen_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut word: Vec<Label> = (1..=n as Label).collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
        } else if !next_permutation(&mut word) {
            return None;
        }
        Some(Permutation::from_parts_unchecked(
            (1..=word.len() as Label).collect(),
            word.clone(),
        ))
    })
}

/// Restricted growth strings of length `n`, i.e. set partitions of `[n]`.
struct GrowthStrings {
    rgs: Vec<usize>,
    first: bool,
}

impl Iterator for GrowthStrings {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.first {
            self.first = false;
            return Some(self.rgs.clone());
        }
        let n = self.rgs.len();
        for i in (1..n).rev() {
            let bound = self.rgs[..i].iter().max().unwrap() + 1;
            if self.rgs[i] < bound {
                self.rgs[i] += 1;
                self.rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                return Some(self.rgs.clone());
            }
        }
        None
    }
}

fn blocks_of(rgs: &[usize]) -> Vec<Vec<Label>> {
    let k = rgs.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i as Label + 1);
    }
    blocks
}

/// All set partitions of `[n]`, in lexicographic order of restricted growth
/// strings.
pub fn gen_set_partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    GrowthStrings {
        rgs: vec![0; n],
        first: true,
    }
    .map(|rgs| SetPartition::new(blocks_of(&rgs)).unwrap())
}

/// Every rearrangement of `items`, lexicographic by index.
fn arrangements<T: Clone>(items: Vec<T>) -> impl Iterator<Item = Vec<T>> {
    let mut idx: Vec<usize> = (0..items.len()).collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
        } else if !next_permutation(&mut idx) {
            return None;
        }
        Some(idx.iter().map(|&i| items[i].clone()).collect())
    })
}

/// Every way of ordering the entries of each list independently.
fn inner_arrangements(lists: Vec<Vec<Label>>) -> impl Iterator<Item = Vec<Vec<Label>>> {
    let mut cur: Vec<Vec<Label>> = lists
        .into_iter()
        .map(|mut l| {
            l.sort_unstable();
            l
        })
        .collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(cur.clone());
        }
        for slot in (0..cur.len()).rev() {
            if next_permutation(&mut cur[slot]) {
                return Some(cur.clone());
            }
        }
        None
    })
}

/// All ordered set partitions of `[n]`.
pub fn gen_ordered_set_partitions(n: usize) -> impl Iterator<Item = OrderedSetPartition> {
    gen_set_partitions(n)
        .flat_map(|sp| arrangements(sp.blocks().to_vec()).map(|b| OrderedSetPartition::new(b).unwrap()))
}

/// All partitions of `[n]` into lists under the given identifications.
pub fn gen_list_partitions(n: usize, flags: ListFlags) -> impl Iterator<Item = ListPartition> {
    gen_set_partitions(n).flat_map(move |sp| {
        let block_orders: Box<dyn Iterator<Item = Vec<Vec<Label>>>> = if flags.ordered_blocks {
            Box::new(arrangements(sp.blocks().to_vec()))
        } else {
            Box::new(std::iter::once(sp.blocks().to_vec()))
        };
        block_orders.flat_map(move |blocks| {
            inner_arrangements(blocks)
                .filter(move |lists| !flags.up_to_reverse || lists.iter().all(|l| is_oriented(l)))
                .map(move |lists| ListPartition::new(lists, flags).unwrap())
        })
    })
}

fn is_oriented(list: &[Label]) -> bool {
    let mut l = list.to_vec();
    crate::partition::orient_up_to_reverse(&mut l);
    l == list
}

/// Compositions of `n` into exactly `k` parts, lexicographic.
pub fn gen_compositions(n: usize, k: usize) -> impl Iterator<Item = Composition> {
    // choose k - 1 cut points among 1..n
    let cuts_needed = k.saturating_sub(1);
    let feasible = (k == 0 && n == 0) || (k >= 1 && k <= n);
    let mut cuts: Vec<usize> = (1..=cuts_needed).collect();
    let mut state = if feasible { Some(()) } else { None };
    std::iter::from_fn(move || {
        state?;
        if k == 0 {
            state = None;
            return Some(Composition::new(Vec::new()).unwrap());
        }
        let mut bounds = vec![0];
        bounds.extend(&cuts);
        bounds.push(n);
        let parts: Vec<usize> = bounds.windows(2).map(|w| w[1] - w[0]).collect();
        // advance the combination
        let m = cuts.len();
        let mut i = m;
        loop {
            if i == 0 {
                state = None;
                break;
            }
            i -= 1;
            if cuts[i] < n - 1 - (m - 1 - i) {
                cuts[i] += 1;
                for j in i + 1..m {
                    cuts[j] = cuts[j - 1] + 1;
                }
                break;
            }
        }
        Some(Composition::new(parts).unwrap())
    })
}

/// Compositions of `n` into any number of parts.
pub fn gen_all_compositions(n: usize) -> impl Iterator<Item = Composition> {
    (1..=n.max(1)).flat_map(move |k| gen_compositions(n, k))
}

/// Cycles of `p` rotated maximum-first and listed by increasing maximum.
fn canonical_cycles(p: &Permutation) -> Vec<Vec<Label>> {
    let mut cycles = p.to_cycles().canonical().cycles().to_vec();
    cycles.sort_unstable_by_key(|c| c[0]);
    cycles
}

/// All ordered cycle decompositions of permutations of `[n]`, cycles written
/// maximum-first.
pub fn gen_ordered_cycle_decomps(n: usize) -> impl Iterator<Item = CycleDecomposition> {
    gen_permutations(n)
        .flat_map(|p| arrangements(canonical_cycles(&p)).map(|cs| CycleDecomposition::ordered(cs).unwrap()))
}

/// All partitioned cycle decompositions of permutations of `[n]`, in
/// canonical form.
pub fn gen_partitioned_cycle_decomps(n: usize) -> impl Iterator<Item = CycleDecomposition> {
    gen_permutations(n).flat_map(|p| {
        let cycles = canonical_cycles(&p);
        gen_set_partitions(cycles.len())
            .map(move |sp| CycleDecomposition::new(cycles.clone(), CycleStructure::Partitioned(sp)).unwrap())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn next_permutation_walks_all() {
        let mut v = vec![1, 2, 3];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(v, vec![1, 2, 3]);
        assert_eq!(seen[1], vec![1, 3, 2]);
    }

    #[test]
    fn small_forest_counts() {
        assert_eq!(gen_forests(0, FamilyTag::Unordered).count(), 1);
        assert_eq!(gen_forests(1, FamilyTag::Unordered).count(), 1);
        assert_eq!(gen_forests(2, FamilyTag::Unordered).count(), 3);
        assert_eq!(gen_forests(3, FamilyTag::Unordered).count(), 16);
        assert_eq!(gen_forests(2, FamilyTag::Ordered).count(), 4);
        assert_eq!(gen_forests(3, FamilyTag::UnorderedBinary).count(), 15);
    }

    #[test]
    fn forests_come_in_lexicographic_order() {
        let all: Vec<Vec<Label>> = gen_forests(4, FamilyTag::Unordered)
            .map(|f| f.parents().to_vec())
            .collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], vec![0, 0, 0, 0]);
    }

    #[test]
    fn prefixes_partition_the_family() {
        for family in FamilyTag::ALL {
            for n in 0..=5 {
                let whole: Vec<Forest> = gen_forests(n, family).collect();
                let pieces: Vec<Forest> = forest_prefixes(n, family, 2)
                    .iter()
                    .flat_map(|p| gen_forests_with_prefix(n, family, p))
                    .collect();
                assert_eq!(whole, pieces, "{family} n={n}");
            }
        }
    }

    #[test]
    fn partition_examples() {
        assert_eq!(gen_set_partitions(3).count(), 5);
        assert_eq!(gen_ordered_set_partitions(3).count(), 13);
        let tens: HashSet<Vec<usize>> = gen_all_compositions(10).map(|c| c.parts().to_vec()).collect();
        assert!(tens.contains(&vec![3, 3, 4]));
        assert!(tens.contains(&vec![3, 4, 3]));
        assert!(tens.contains(&vec![2, 2, 1, 4, 1]));
        assert_eq!(tens.len(), 512);
        assert_eq!(gen_compositions(10, 3).count(), 36);
        assert_eq!(gen_compositions(3, 4).count(), 0);
        assert_eq!(
            gen_list_partitions(3, ListFlags::ORDERED_UP_TO_REVERSE).count(),
            15
        );
        assert_eq!(gen_list_partitions(3, ListFlags::UNORDERED).count(), 13);
    }

    #[test]
    fn list_partitions_of_six_tell_orders_apart() {
        let all: HashSet<ListPartition> = gen_list_partitions(6, ListFlags::UNORDERED).collect();
        let a = ListPartition::parse("{1,6}{2}{3,4,5}", ListFlags::UNORDERED).unwrap();
        let b = ListPartition::parse("{6,1}{2}{3,5,4}", ListFlags::UNORDERED).unwrap();
        assert!(all.contains(&a) && all.contains(&b));
    }

    #[test]
    fn cycle_decomposition_counts() {
        // 1 + 3*2 + 6 orderings of the 1-, 2- and 3-cycle permutations of [3]
        assert_eq!(gen_ordered_cycle_decomps(3).count(), 2 + 3 * 2 + 6);
        assert_eq!(gen_partitioned_cycle_decomps(3).count(), 13);
        for cd in gen_ordered_cycle_decomps(4) {
            assert!(cd.cycles().iter().all(|c| c[0] == *c.iter().max().unwrap()));
        }
    }
}
