//! Randomized checks beyond the exhaustively covered sizes.

use forest_patterns::bijection::*;
use forest_patterns::{CycleDecomposition, Forest, Label, ListFlags, ListPartition, PatternSet, Permutation};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as Label).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

/// A random forest: vertices arrive in a random order and each picks an
/// earlier arrival (or the virtual root) as its parent.
fn forest(max: usize) -> impl Strategy<Value = Forest> {
    permutation(max)
        .prop_flat_map(|p| {
            let n = p.len();
            (
                Just(p),
                proptest::collection::vec(any::<prop::sample::Index>(), n),
            )
        })
        .prop_map(|(p, picks)| {
            let w = p.word();
            let pairs = (0..w.len()).map(|i| {
                let k = picks[i].index(i + 1);
                (w[i], if k == i { 0 } else { w[k] })
            });
            Forest::from_pairs(pairs).unwrap()
        })
}

/// Cuts a permutation word into consecutive pieces.
fn pieces(w: &[Label], cuts: &[usize]) -> Vec<Vec<Label>> {
    let mut out = Vec::new();
    let mut start = 0;
    for &c in cuts.iter().chain([&w.len()]) {
        if c > start {
            out.push(w[start..c].to_vec());
            start = c;
        }
    }
    out
}

fn cut_points(n: usize) -> impl Strategy<Value = Vec<usize>> {
    subsequence((1..n.max(1)).collect::<Vec<_>>(), 0..n.max(1))
}

proptest! {
    #[test]
    fn phi_round_trip(p in permutation(12)) {
        let f = phi(&p);
        prop_assert!(f.avoids(&"21".parse().unwrap()));
        prop_assert_eq!(phi_inv(&f).unwrap(), p);
    }

    #[test]
    fn theta_round_trip((p, cuts) in permutation(11).prop_flat_map(|p| { let n = p.len(); (Just(p), cut_points(n)) })) {
        let cd = CycleDecomposition::ordered(pieces(p.word(), &cuts)).unwrap();
        let f = theta(&cd).unwrap();
        prop_assert!(f.avoids(&PatternSet::classical(&["213", "312"])));
        prop_assert_eq!(theta_inv(&f).unwrap(), cd.canonical());
    }

    #[test]
    fn tau_round_trip((p, cuts) in permutation(11).prop_flat_map(|p| { let n = p.len(); (Just(p), cut_points(n)) })) {
        let lp = ListPartition::new(pieces(p.word(), &cuts), ListFlags::UNORDERED).unwrap();
        for variant in [TauVariant::Unimodal132, TauVariant::OneDescent] {
            let f = tau(&lp, variant).unwrap();
            prop_assert_eq!(tau_inv(&f, variant).unwrap(), lp.clone());
        }
    }

    #[test]
    fn psi_round_trip((p, cuts) in permutation(11).prop_flat_map(|p| { let n = p.len(); (Just(p), cut_points(n)) })) {
        let lp = ListPartition::new(pieces(p.word(), &cuts), ListFlags::ORDERED_UP_TO_REVERSE).unwrap();
        let f = psi(&lp).unwrap();
        prop_assert!(f.avoids(&PatternSet::classical(&["321", "2143", "3142"])));
        prop_assert_eq!(psi_inv(&f).unwrap(), lp);
    }

    #[test]
    fn alpha_beta_on_larger_forests(f in forest(10)) {
        if f.avoids(&"312".parse().unwrap()) {
            let g = alpha(&f).unwrap();
            prop_assert!(g.avoids(&"321".parse().unwrap()));
            prop_assert_eq!(g.shape_signature(), f.shape_signature());
            prop_assert_eq!(beta_wilf(&g).unwrap(), f);
        }
    }

    #[test]
    fn complement_duality(f in forest(9), w in prop::sample::select(vec!["123", "132", "213", "231", "312", "321", "!132", "!321", "2143"])) {
        let ps: PatternSet = w.parse().unwrap();
        prop_assert_eq!(f.avoids(&ps), f.complement().avoids(&ps.complement()));
        prop_assert_eq!(f.complement().complement(), f);
    }

    #[test]
    fn text_and_json_round_trip(f in forest(12)) {
        let back: Forest = f.to_string().parse().unwrap();
        prop_assert_eq!(&back, &f);
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Forest>(&json).unwrap(), f);
    }
}
