//! Lists to trees whose paths climb above the root and then fall below it.
//!
//! A list `r, …` becomes a tree rooted at its first entry `r`. An entry `i > r`
//! is attached to the nearest entry `j` on its left with `r <= j < i`, so the
//! entries above the root form an increasing tree. Entries below the root are
//! attached according to the variant:
//!
//! * [`TauVariant::Unimodal132`]: to the nearest entry on the left that is
//!   larger than `i`. Paths rise and then fall, and everything on the way up
//!   exceeds everything on the way down (the forests avoiding 312, 213, 132).
//! * [`TauVariant::OneDescent`]: to the nearest entry on the left that is
//!   either smaller than `i` or at least `r`. Paths rise, drop below the root
//!   once and rise again (the forests avoiding 321, 132, 213).
//!
//! Both rules are bijections between lists starting with `r` and such trees
//! rooted at `r`. The inverse reads the tree in preorder, visiting the smaller
//! children before the larger ones, in the order that makes each entry's
//! parent the one the rule would pick.

use super::{require_avoids, BijectionError};
use crate::forest::Forest;
use crate::partition::{ListFlags, ListPartition};
use crate::perm::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauVariant {
    Unimodal132,
    OneDescent,
}

impl TauVariant {
    fn avoided(self) -> [&'static str; 3] {
        match self {
            TauVariant::Unimodal132 => ["312", "213", "132"],
            TauVariant::OneDescent => ["321", "132", "213"],
        }
    }
}

fn list_tree(list: &[Label], variant: TauVariant, pairs: &mut Vec<(Label, Label)>) {
    let r = list[0];
    pairs.push((r, 0));
    for (k, &i) in list.iter().enumerate().skip(1) {
        let mut left = list[..k].iter().rev().copied();
        let parent = if i > r {
            left.find(|&j| r <= j && j < i)
        } else {
            match variant {
                TauVariant::Unimodal132 => left.find(|&j| j > i),
                TauVariant::OneDescent => left.find(|&j| j < i || j >= r),
            }
        };
        pairs.push((i, parent.expect("the root always qualifies")));
    }
}

/// One tree per list; the order of the lists is irrelevant.
pub fn tau(lp: &ListPartition, variant: TauVariant) -> Result<Forest, BijectionError> {
    if lp.flags().up_to_reverse {
        return Err(BijectionError::WrongFlags("tau reads each list as written"));
    }
    let mut pairs = Vec::new();
    for list in lp.blocks() {
        list_tree(list, variant, &mut pairs);
    }
    Ok(Forest::from_pairs(pairs)?)
}

fn read_tree(f: &Forest, v: Label, r: Label, variant: TauVariant, out: &mut Vec<Label>) {
    out.push(v);
    let kids = f.children(v);
    let (mut small, mut big): (Vec<Label>, Vec<Label>) = kids.into_iter().partition(|&c| c < r);
    if variant == TauVariant::OneDescent {
        small.reverse();
    }
    big.reverse();
    for c in small.into_iter().chain(big) {
        read_tree(f, c, r, variant, out);
    }
}

/// Inverse of [`tau`], with lists sorted by their minimum.
pub fn tau_inv(f: &Forest, variant: TauVariant) -> Result<ListPartition, BijectionError> {
    require_avoids(f, &variant.avoided())?;
    let lists = f
        .roots()
        .into_iter()
        .map(|r| {
            let mut out = Vec::new();
            read_tree(f, r, r, variant, &mut out);
            out
        })
        .collect();
    Ok(ListPartition::new(lists, ListFlags::UNORDERED)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternSet;

    fn lists(s: &str) -> ListPartition {
        ListPartition::parse(s, ListFlags::UNORDERED).unwrap()
    }

    #[test]
    fn fifteen_element_example() {
        let lp = lists("{11,9,12,5,3,8,15,2,6}{13,10,14,1,7,4}");
        let f = tau(&lp, TauVariant::Unimodal132).unwrap();
        assert_eq!(f.roots(), vec![11, 13]);
        assert!(f.avoids(&PatternSet::classical(&["312", "213", "132"])));
        assert_eq!(f.children(11), vec![9, 12]);
        assert_eq!(f.children(12), vec![5, 8, 15]);
        assert_eq!(f.children(15), vec![2, 6]);
        assert_eq!(f.children(13), vec![10, 14]);
        assert_eq!(tau_inv(&f, TauVariant::Unimodal132).unwrap(), lp);
    }

    #[test]
    fn small_examples() {
        let f = tau(&lists("{3,4,1}{2}"), TauVariant::Unimodal132).unwrap();
        assert_eq!(f.to_string(), "4|4 0 0 3");
        let chain = tau(&lists("{1,2,3,4}"), TauVariant::Unimodal132).unwrap();
        assert_eq!(chain.to_string(), "4|0 1 2 3");
        let g = tau(&lists("{3,1,4,2}"), TauVariant::OneDescent).unwrap();
        assert_eq!(g.to_string(), "4|3 4 0 3");
        assert_eq!(tau_inv(&g, TauVariant::OneDescent).unwrap(), lists("{3,1,4,2}"));
    }
}
