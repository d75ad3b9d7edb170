use std::collections::BTreeSet;

use super::{graft, phi, phi_inv, require_avoids, BijectionError};
use crate::forest::Forest;
use crate::partition::{OrderedSetPartition, SetPartition};
use crate::perm::{Label, Permutation};

/// Increasing forest of height at most two: each block becomes a tree whose
/// root is the block minimum and whose other elements are its children.
pub fn shallow(sp: &SetPartition) -> Forest {
    let pairs = sp.blocks().iter().flat_map(|b| {
        let root = b[0];
        b.iter().map(move |&v| (v, if v == root { 0 } else { root }))
    });
    Forest::from_pairs(pairs).expect("blocks are disjoint")
}

pub fn shallow_inv(f: &Forest) -> Result<SetPartition, BijectionError> {
    let ok = f
        .labels()
        .iter()
        .zip(f.parents())
        .all(|(&v, &p)| p == 0 || (p < v && f.parent(p) == Some(0)));
    if !ok {
        return Err(BijectionError::NotInClass(
            "must be increasing with height at most 2".into(),
        ));
    }
    let blocks = f
        .roots()
        .into_iter()
        .map(|r| {
            let mut b = vec![r];
            b.extend(f.children(r));
            b
        })
        .collect();
    Ok(SetPartition::new(blocks)?)
}

/// Ordered set partition to a unimodal forest avoiding 321: block maxima are
/// arranged by `phi` in block order, and every other element of a block is a
/// child of its maximum.
pub fn gamma(osp: &OrderedSetPartition) -> Result<Forest, BijectionError> {
    let maxima = Permutation::new(osp.blocks().iter().map(|b| *b.last().unwrap()).collect())?;
    let mut pairs = Vec::new();
    graft(&mut pairs, &phi(&maxima), 0);
    for b in osp.blocks() {
        let (&m, rest) = b.split_last().unwrap();
        pairs.extend(rest.iter().map(|&v| (v, m)));
    }
    Ok(Forest::from_pairs(pairs)?)
}

pub fn gamma_inv(f: &Forest) -> Result<OrderedSetPartition, BijectionError> {
    require_avoids(f, &["213", "312", "321"])?;
    let tdm: BTreeSet<Label> = f.top_down_maxima().into_iter().collect();
    let order = phi_inv(&f.induced(&tdm))?;
    let blocks = order
        .word()
        .iter()
        .map(|&m| {
            let mut b: Vec<Label> = f.children(m).into_iter().filter(|c| !tdm.contains(c)).collect();
            b.push(m);
            b
        })
        .collect();
    Ok(OrderedSetPartition::new(blocks)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shallow_examples() {
        let f = shallow(&"{1,3,4,5}{2,6}".parse().unwrap());
        assert_eq!(f.roots(), vec![1, 2]);
        assert_eq!(f.children(1), vec![3, 4, 5]);
        assert_eq!(f.children(2), vec![6]);
        assert_eq!(shallow(&"{1}{2}{3}".parse().unwrap()).to_string(), "3|0 0 0");
        assert_eq!(shallow(&"{1,2,3,4}".parse().unwrap()).to_string(), "4|0 1 1 1");
        assert_eq!(shallow_inv(&f).unwrap().to_string(), "{1,3,4,5}{2,6}");
        assert!(shallow_inv(&"3|0 1 2".parse().unwrap()).is_err());
    }

    #[test]
    fn gamma_examples() {
        let f = gamma(&"{2}{1,3}".parse().unwrap()).unwrap();
        assert_eq!(f.roots(), vec![2]);
        assert_eq!(f.children(2), vec![3]);
        assert_eq!(f.children(3), vec![1]);
        assert_eq!(gamma_inv(&f).unwrap().to_string(), "{2}{1,3}");
        let chain = gamma(&"{1}{2}{3}".parse().unwrap()).unwrap();
        assert_eq!(chain.to_string(), "3|0 1 2");
    }
}
