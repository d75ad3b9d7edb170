//! A shape-preserving bijection between forests avoiding 312 and forests
//! avoiding 321.
//!
//! Top-down maxima keep their labels. The other vertices are visited level by
//! level (ties by label), and each one receives a label chosen among the
//! labels currently sitting on the non-maximum vertices of its subtree, itself
//! included. The labels left over are put back on the rest of those vertices
//! in their previous relative order.
//!
//! [`alpha`] picks the smallest available label. [`beta_wilf`] picks the
//! largest one that stays below some ancestor, so that no new top-down
//! maximum appears.

use std::collections::{BTreeSet, HashMap};

use super::{require_avoids, BijectionError};
use crate::forest::Forest;
use crate::perm::Label;

#[derive(Clone, Copy)]
enum Pick {
    Smallest,
    LargestBelowAncestors,
}

fn relabel_non_maxima(f: &Forest, pick: Pick) -> Forest {
    let tdm: BTreeSet<Label> = f.top_down_maxima().into_iter().collect();
    let mut label: HashMap<Label, Label> = f.labels().iter().map(|&v| (v, v)).collect();

    let mut order: Vec<(usize, Label)> = f
        .labels()
        .iter()
        .filter(|v| !tdm.contains(v))
        .map(|&v| (f.path_to(v).len(), v))
        .collect();
    order.sort_unstable();

    for &(_, v) in &order {
        let mut spots = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if !tdm.contains(&u) {
                spots.push(u);
            }
            stack.extend(f.children(u));
        }
        let mut held: Vec<Label> = spots.iter().map(|u| label[u]).collect();
        held.sort_unstable();
        let chosen = match pick {
            Pick::Smallest => held[0],
            Pick::LargestBelowAncestors => {
                let ceiling = f.path_to(v).iter().rev().skip(1).map(|a| label[a]).max().unwrap();
                *held.iter().rev().find(|&&l| l < ceiling).unwrap()
            }
        };
        spots.retain(|&u| u != v);
        spots.sort_unstable_by_key(|u| label[u]);
        held.retain(|&l| l != chosen);
        label.insert(v, chosen);
        for (u, l) in spots.into_iter().zip(held) {
            label.insert(u, l);
        }
    }

    let pairs = f
        .labels()
        .iter()
        .zip(f.parents())
        .map(|(v, p)| (label[v], if *p == 0 { 0 } else { label[p] }));
    Forest::from_pairs(pairs).expect("relabeling keeps a forest")
}

/// Sends a forest avoiding 312 to one avoiding 321 with the same shape and the
/// same top-down maxima.
pub fn alpha(f: &Forest) -> Result<Forest, BijectionError> {
    require_avoids(f, &["312"])?;
    Ok(relabel_non_maxima(f, Pick::Smallest))
}

/// Inverse of [`alpha`].
pub fn beta_wilf(f: &Forest) -> Result<Forest, BijectionError> {
    require_avoids(f, &["321"])?;
    Ok(relabel_non_maxima(f, Pick::LargestBelowAncestors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_example() {
        let f: Forest = "4|0 3 4 1".parse().unwrap();
        assert_eq!(f.path_to(2), vec![1, 4, 3, 2]);
        let g = alpha(&f).unwrap();
        assert_eq!(g.path_to(3), vec![1, 4, 2, 3]);
        assert_eq!(beta_wilf(&g).unwrap(), f);
    }

    #[test]
    fn increasing_forests_are_fixed() {
        let f: Forest = "5|0 1 1 0 3".parse().unwrap();
        assert_eq!(alpha(&f).unwrap(), f);
        assert_eq!(beta_wilf(&f).unwrap(), f);
    }

    #[test]
    fn wrong_class_is_rejected() {
        let f: Forest = "3|3 1 0".parse().unwrap();
        assert!(matches!(alpha(&f), Err(BijectionError::NotInClass(_))));
    }
}
