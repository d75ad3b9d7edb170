//! Cycle decompositions to unimodal forests.
//!
//! Each cycle, written maximum-first, contributes its maximum as a top-down
//! maximum; the rest of the cycle becomes the decreasing forest `phi_d` of the
//! remaining entries, hung below that maximum. The maxima themselves are
//! arranged by `phi` (ordered decompositions) or by `shallow` (partitioned
//! ones).

use std::collections::BTreeSet;

use super::{
    graft, phi, phi_d, phi_d_inv, phi_inv, require_avoids, shallow, shallow_inv, subtrees_below,
    BijectionError,
};
use crate::forest::Forest;
use crate::partition::SetPartition;
use crate::perm::{CycleDecomposition, CycleStructure, Label, Permutation};

fn attach_cycle_tails(pairs: &mut Vec<(Label, Label)>, cycles: &[Vec<Label>]) -> Result<(), BijectionError> {
    for c in cycles {
        if c.len() > 1 {
            let tail = Permutation::new(c[1..].to_vec())?;
            graft(pairs, &phi_d(&tail), c[0]);
        }
    }
    Ok(())
}

/// Maps an ordered cycle decomposition to a unimodal forest.
pub fn theta(cd: &CycleDecomposition) -> Result<Forest, BijectionError> {
    if !matches!(cd.structure(), CycleStructure::Ordered) {
        return Err(BijectionError::Input(
            "theta takes an ordered decomposition".into(),
        ));
    }
    let cd = cd.canonical();
    let maxima = Permutation::new(cd.cycles().iter().map(|c| c[0]).collect())?;
    let mut pairs = Vec::new();
    graft(&mut pairs, &phi(&maxima), 0);
    attach_cycle_tails(&mut pairs, cd.cycles())?;
    Ok(Forest::from_pairs(pairs)?)
}

/// The cycle headed by each top-down maximum `m`: `m` followed by the
/// `phi_d` preimage of the non-maximum subtrees below it.
fn cycle_at(f: &Forest, m: Label, tdm: &BTreeSet<Label>) -> Result<Vec<Label>, BijectionError> {
    let below = subtrees_below(f, m, |c| !tdm.contains(&c));
    let mut cycle = vec![m];
    cycle.extend_from_slice(phi_d_inv(&below)?.word());
    Ok(cycle)
}

/// Inverse of [`theta`].
pub fn theta_inv(f: &Forest) -> Result<CycleDecomposition, BijectionError> {
    require_avoids(f, &["213", "312"]).map_err(|_| BijectionError::NotUnimodal)?;
    let tdm: BTreeSet<Label> = f.top_down_maxima().into_iter().collect();
    let order = phi_inv(&f.induced(&tdm))?;
    let cycles = order
        .word()
        .iter()
        .map(|&m| cycle_at(f, m, &tdm))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycleDecomposition::ordered(cycles)?)
}

/// Maps a partitioned cycle decomposition to a unimodal forest avoiding 123.
pub fn xi(cd: &CycleDecomposition) -> Result<Forest, BijectionError> {
    let CycleStructure::Partitioned(_) = cd.structure() else {
        return Err(BijectionError::Input(
            "xi takes a partitioned decomposition".into(),
        ));
    };
    let cd = cd.canonical();
    let maxima_blocks: Vec<Vec<Label>> = cd
        .blocks()
        .iter()
        .map(|b| b.iter().map(|c| c[0]).collect())
        .collect();
    let mut pairs = Vec::new();
    graft(&mut pairs, &shallow(&SetPartition::new(maxima_blocks)?), 0);
    attach_cycle_tails(&mut pairs, cd.cycles())?;
    Ok(Forest::from_pairs(pairs)?)
}

/// Inverse of [`xi`]; returns the canonical form.
pub fn xi_inv(f: &Forest) -> Result<CycleDecomposition, BijectionError> {
    require_avoids(f, &["213", "312", "123"])?;
    let tdm: BTreeSet<Label> = f.top_down_maxima().into_iter().collect();
    let maxima_partition = shallow_inv(&f.induced(&tdm))?;
    let mut by_max: Vec<Label> = tdm.iter().copied().collect();
    by_max.sort_unstable();
    let cycles = by_max
        .iter()
        .map(|&m| cycle_at(f, m, &tdm))
        .collect::<Result<Vec<_>, _>>()?;
    let index = |m: Label| by_max.binary_search(&m).unwrap() as Label + 1;
    let blocks = maxima_partition
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&m| index(m)).collect())
        .collect();
    Ok(CycleDecomposition::new(
        cycles,
        CycleStructure::Partitioned(SetPartition::new(blocks)?),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(s: &str) -> CycleDecomposition {
        s.parse().unwrap()
    }

    #[test]
    fn theta_of_the_twelve_element_example() {
        let f = theta(&cd("(11,4,10,7)(12)(8,3,1)(9,5,2,6)")).unwrap();
        let expected = Forest::from_pairs([
            (11, 0),
            (12, 11),
            (10, 11),
            (4, 10),
            (7, 10),
            (8, 0),
            (9, 8),
            (3, 8),
            (1, 8),
            (5, 9),
            (6, 9),
            (2, 6),
        ])
        .unwrap();
        assert_eq!(f, expected);
        assert_eq!(f.height(), 4);
        assert!(f.root_leaf_paths().contains(&vec![8, 9, 6, 2]));
        assert_eq!(f.top_down_maxima(), vec![8, 9, 11, 12]);
        assert_eq!(
            f.largest_increasing_subforest().unwrap().labels(),
            &[8, 9, 11, 12]
        );
        assert_eq!(
            theta_inv(&f).unwrap().to_string(),
            "(11,4,10,7)(12)(8,3,1)(9,5,2,6)"
        );
    }

    #[test]
    fn theta_small_cases() {
        assert_eq!(theta(&cd("(2,1)")).unwrap().to_string(), "2|2 0");
        let singletons = theta(&cd("(3)(1)(2)")).unwrap();
        assert_eq!(singletons, phi(&"3,1,2".parse().unwrap()));
        assert_eq!(
            theta_inv(&"3|2 0 1".parse().unwrap()),
            Err(BijectionError::NotUnimodal)
        );
    }

    #[test]
    fn xi_examples() {
        let f = xi(&cd("{(2,1)(3)}")).unwrap();
        assert_eq!(f.roots(), vec![2]);
        assert_eq!(f.children(2), vec![1, 3]);
        assert_eq!(xi_inv(&f).unwrap().to_string(), "{(2,1)(3)}");
        let g = xi(&cd("{(1)}{(2)}{(3)}")).unwrap();
        assert_eq!(g.to_string(), "3|0 0 0");
    }
}
