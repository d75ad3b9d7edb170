use super::BijectionError;
use crate::forest::Forest;
use crate::perm::{Label, Permutation};

/// Increasing forest of a permutation: left-to-right minima become roots, and
/// every other entry becomes a child of the nearest entry to its left that is
/// smaller than it.
pub fn phi(p: &Permutation) -> Forest {
    let w = p.word();
    let pairs = w.iter().enumerate().map(|(i, &v)| {
        let parent = w[..i].iter().rev().find(|&&u| u < v).copied().unwrap_or(0);
        (v, parent)
    });
    Forest::from_pairs(pairs).expect("phi builds a forest")
}

/// Preorder reading with children (and roots) visited in decreasing order.
pub(crate) fn read_decreasing_preorder(f: &Forest, from: Label, out: &mut Vec<Label>) {
    let mut kids = f.children(from);
    kids.reverse();
    for c in kids {
        out.push(c);
        read_decreasing_preorder(f, c, out);
    }
}

/// Inverse of [`phi`].
pub fn phi_inv(f: &Forest) -> Result<Permutation, BijectionError> {
    let increasing = f.labels().iter().zip(f.parents()).all(|(&v, &p)| p < v);
    if !increasing {
        return Err(BijectionError::NotIncreasing);
    }
    let mut word = Vec::with_capacity(f.len());
    read_decreasing_preorder(f, 0, &mut word);
    Ok(Permutation::new(word)?)
}

/// Decreasing forest of a permutation: `phi` followed by complementing the
/// labels within the ground set.
pub fn phi_d(p: &Permutation) -> Forest {
    phi(p).complement()
}

/// Inverse of [`phi_d`].
pub fn phi_d_inv(f: &Forest) -> Result<Permutation, BijectionError> {
    phi_inv(&f.complement()).map_err(|_| BijectionError::NotDecreasing)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_of_the_ten_element_example() {
        let f = phi(&perm("3,6,8,4,1,10,2,9,7,5"));
        let expected = Forest::from_pairs([
            (3, 0),
            (6, 3),
            (8, 6),
            (4, 3),
            (1, 0),
            (10, 1),
            (2, 1),
            (9, 2),
            (7, 2),
            (5, 2),
        ])
        .unwrap();
        assert_eq!(f, expected);
        assert_eq!(phi_inv(&f).unwrap(), perm("3,6,8,4,1,10,2,9,7,5"));
    }

    #[test]
    fn phi_extremes() {
        assert_eq!(phi(&perm("1,2,3,4")).to_string(), "4|0 1 2 3");
        assert_eq!(phi(&perm("4,3,2,1")).to_string(), "4|0 0 0 0");
        assert_eq!(
            phi_inv(&"2|2 0".parse().unwrap()),
            Err(BijectionError::NotIncreasing)
        );
    }

    #[test]
    fn phi_d_examples() {
        let f = phi_d(&perm("4,10,7"));
        assert_eq!(f.roots(), vec![10]);
        assert_eq!(f.children(10), vec![4, 7]);
        let g = phi_d(&perm("5,2,6"));
        assert_eq!(g.roots(), vec![5, 6]);
        assert_eq!(g.children(6), vec![2]);
        assert_eq!(phi_d(&perm("7")).to_string(), "{7}|0");
        assert_eq!(phi_d_inv(&g).unwrap(), perm("5,2,6"));
    }
}
