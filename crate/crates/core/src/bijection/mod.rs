//! Constructive maps between forests and permutations, partitions and cycle
//! decompositions, together with their inverses.
//!
//! | map | domain | image |
//! |-----|--------|-------|
//! | [`phi`] | permutations of a set `A` | increasing forests on `A` |
//! | [`phi_d`] | permutations of `A` | decreasing forests on `A` |
//! | [`theta`] | ordered cycle decompositions | forests avoiding 213, 312 |
//! | [`shallow`] | set partitions | increasing forests of height at most 2 |
//! | [`xi`] | partitioned cycle decompositions | forests avoiding 213, 312, 123 |
//! | [`gamma`] | ordered set partitions | forests avoiding 213, 312, 321 |
//! | [`tau`] | partitions into lists | forests avoiding 312, 213, 132 (or 321, 132, 213) |
//! | [`rho`] | permutations with 2 before 1 | trees with a proper root descent and no other descent |
//! | [`psi`] | ordered partitions into lists up to reverse | forests avoiding 321, 2143, 3142 |
//! | [`alpha`] / [`beta_wilf`] | forests avoiding 312 / 321 | forests avoiding 321 / 312 |
//!
//! The inverses of `xi`, `gamma` and `psi` are read off the forest
//! structurally (top-down maxima, then the inverse of `phi` and `phi_d` or
//! `rho` on each piece); they are checked by round trips rather than taken
//! from a published construction.

mod cycles;
mod descent;
mod phi;
mod sets;
mod tau;
mod text;
mod wilf;

use thiserror::Error;

use crate::forest::ForestError;
use crate::partition::PartitionError;
use crate::perm::PermError;

pub use cycles::{theta, theta_inv, xi, xi_inv};
pub use descent::{psi, psi_inv, rho, rho_inv, root_descent_tree, root_descent_tree_inv};
pub use phi::{phi, phi_d, phi_d_inv, phi_inv};
pub use sets::{gamma, gamma_inv, shallow, shallow_inv};
pub use tau::{tau, tau_inv, TauVariant};
pub use text::{apply_by_name, BijectionName};
pub use wilf::{alpha, beta_wilf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("forest is not increasing")]
    NotIncreasing,
    #[error("forest is not decreasing")]
    NotDecreasing,
    #[error("forest is not unimodal")]
    NotUnimodal,
    #[error("forest is outside the image class ({0})")]
    NotInClass(String),
    #[error("the second smallest entry must precede the smallest")]
    TwoAfterOne,
    #[error("list partition has the wrong block structure: {0}")]
    WrongFlags(&'static str),
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Input(String),
}

use crate::forest::Forest;
use crate::perm::Label;

/// Hangs the trees of `sub` under `onto` (or keeps them as roots when
/// `onto == 0`), appending the resulting `(vertex, parent)` pairs.
pub(crate) fn graft(pairs: &mut Vec<(Label, Label)>, sub: &Forest, onto: Label) {
    for (&v, &p) in sub.labels().iter().zip(sub.parents()) {
        pairs.push((v, if p == 0 { onto } else { p }));
    }
}

/// The subforest formed by the subtrees hanging below `v` whose roots pass
/// `keep`, with those roots turned into roots.
pub(crate) fn subtrees_below(f: &Forest, v: Label, keep: impl Fn(Label) -> bool) -> Forest {
    let mut pairs = Vec::new();
    let mut stack: Vec<Label> = f.children(v).into_iter().filter(|&c| keep(c)).collect();
    for &c in &stack {
        pairs.push((c, 0));
    }
    while let Some(u) = stack.pop() {
        for c in f.children(u) {
            pairs.push((c, u));
            stack.push(c);
        }
    }
    Forest::from_pairs(pairs).expect("subtrees of a forest form a forest")
}

pub(crate) fn require_avoids(f: &Forest, set: &[&str]) -> Result<(), BijectionError> {
    let ps = crate::pattern::PatternSet::classical(set);
    if f.avoids(&ps) {
        Ok(())
    } else {
        Err(BijectionError::NotInClass(format!("must avoid {ps}")))
    }
}
