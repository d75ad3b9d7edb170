//! Trees with a single, proper descent at the root, and the forests built
//! from them.

use std::collections::BTreeSet;

use super::phi::read_decreasing_preorder;
use super::{graft, phi, phi_inv, require_avoids, subtrees_below, BijectionError};
use crate::forest::Forest;
use crate::partition::{ListFlags, ListPartition};
use crate::perm::{Label, Permutation};

/// The first entry is the root, the remaining left-to-right minima are its
/// children, and every other entry hangs below the nearest smaller entry on
/// its left. Needs the first entry to exceed the second.
pub fn root_descent_tree(q: &Permutation) -> Result<Forest, BijectionError> {
    let w = q.word();
    if w.len() >= 2 && w[0] < w[1] {
        return Err(BijectionError::Input(
            "the first entry must exceed the second".into(),
        ));
    }
    let mut pairs = Vec::with_capacity(w.len());
    let mut min = Label::MAX;
    for (i, &v) in w.iter().enumerate() {
        let parent = if i == 0 {
            0
        } else if v < min {
            w[0]
        } else {
            w[1..i].iter().rev().copied().find(|&u| u < v).unwrap()
        };
        if i > 0 {
            min = min.min(v);
        }
        pairs.push((v, parent));
    }
    Ok(Forest::from_pairs(pairs)?)
}

pub fn root_descent_tree_inv(f: &Forest) -> Result<Permutation, BijectionError> {
    let roots = f.roots();
    let [root] = roots[..] else {
        return Err(BijectionError::NotInClass("must be a single tree".into()));
    };
    let ok = f
        .labels()
        .iter()
        .zip(f.parents())
        .all(|(&v, &p)| p == 0 || if p == root { v < p } else { p < v });
    if !ok {
        return Err(BijectionError::NotInClass(
            "must descend at the root and nowhere else".into(),
        ));
    }
    let mut word = vec![root];
    read_decreasing_preorder(f, root, &mut word);
    Ok(Permutation::new(word)?)
}

/// Inverse of the permutation followed by [`root_descent_tree`].
pub fn rho(p: &Permutation) -> Result<Forest, BijectionError> {
    if p.len() >= 2 {
        let g = p.ground();
        let pos = |v: Label| p.word().iter().position(|&x| x == v).unwrap();
        if pos(g[0]) < pos(g[1]) {
            return Err(BijectionError::TwoAfterOne);
        }
    }
    root_descent_tree(&p.inverse())
}

pub fn rho_inv(f: &Forest) -> Result<Permutation, BijectionError> {
    Ok(root_descent_tree_inv(f)?.inverse())
}

/// Each list becomes a tree via [`rho`] (a one-element list is a lone root);
/// the roots, taken in list order, are then arranged by `phi`.
pub fn psi(lp: &ListPartition) -> Result<Forest, BijectionError> {
    if lp.flags() != ListFlags::ORDERED_UP_TO_REVERSE {
        return Err(BijectionError::WrongFlags(
            "psi takes ordered lists up to reverse",
        ));
    }
    let trees = lp
        .blocks()
        .iter()
        .map(|b| rho(&Permutation::new(b.clone())?))
        .collect::<Result<Vec<_>, _>>()?;
    let roots = Permutation::new(trees.iter().map(|t| t.roots()[0]).collect())?;
    let mut pairs = Vec::new();
    graft(&mut pairs, &phi(&roots), 0);
    for t in &trees {
        pairs.extend(
            t.labels()
                .iter()
                .zip(t.parents())
                .filter(|&(_, &p)| p != 0)
                .map(|(&v, &p)| (v, p)),
        );
    }
    Ok(Forest::from_pairs(pairs)?)
}

/// Inverse of [`psi`]. The list roots are the vertices reached by an
/// increasing path from a root of the forest.
pub fn psi_inv(f: &Forest) -> Result<ListPartition, BijectionError> {
    require_avoids(f, &["321", "2143", "3142"])?;
    let roots: BTreeSet<Label> = f
        .labels()
        .iter()
        .copied()
        .filter(|&v| f.path_to(v).windows(2).all(|w| w[0] < w[1]))
        .collect();
    let order = phi_inv(&f.induced(&roots))?;
    let blocks = order
        .word()
        .iter()
        .map(|&r| {
            let mut pairs = vec![(r, 0)];
            graft(&mut pairs, &subtrees_below(f, r, |c| !roots.contains(&c)), r);
            let tree = Forest::from_pairs(pairs)?;
            Ok(rho_inv(&tree)?.word().to_vec())
        })
        .collect::<Result<Vec<_>, BijectionError>>()?;
    Ok(ListPartition::new(blocks, ListFlags::ORDERED_UP_TO_REVERSE)?)
}
