//! Rooted labeled forests.
//!
//! A [`Forest`] is a parent function on a finite set of positive labels, with
//! `0` standing for the unlabeled virtual root that every tree hangs from. For
//! unordered forests the parent map is a canonical form, so structural equality
//! is forest equality. Ordered (plane) forests additionally carry a child order
//! for every vertex, the virtual root included.
//!
//! Text form for forests on `[n]` is `n|p_1 p_2 … p_n`, with the parent of
//! vertex `i` at position `i`. Ordered forests append `|` and then the child
//! order of every vertex `0..=n`, separated by `;`. Forests on a ground set
//! other than `[n]` replace the leading `n` by the ground in braces, e.g.
//! `{4,7,10}|10 0 0`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pattern::PatternSet;
use crate::perm::{parse_label_list, write_list, Label, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("following parents from {0} never reaches the root")]
    CycleDetected(Label),
    #[error("vertex {vertex} has parent {parent}, which is not a vertex")]
    ParentOutOfRange { vertex: Label, parent: Label },
    #[error("expected {expected} parents, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("label {0} is repeated or reserved")]
    BadLabel(Label),
    #[error("child order of {0} is not a permutation of its children")]
    BadChildOrder(Label),
    #[error("the top-down maxima are not closed under taking ancestors")]
    NotAncestorClosed,
    #[error("text form needs a ground set of the form [n]")]
    NonStandardGround,
    #[error("cannot parse forest {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl From<PermError> for ForestError {
    fn from(e: PermError) -> Self {
        ForestError::Parse {
            input: String::new(),
            reason: e.to_string(),
        }
    }
}

/// The three forest families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    /// Unordered forests.
    Unordered,
    /// Unordered forests in which every vertex, the virtual root included, has
    /// at most two children.
    #[serde(rename = "binary")]
    UnorderedBinary,
    /// Plane forests: children of every vertex are linearly ordered.
    Ordered,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 3] = [
        FamilyTag::Unordered,
        FamilyTag::UnorderedBinary,
        FamilyTag::Ordered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Unordered => "unordered",
            FamilyTag::UnorderedBinary => "binary",
            FamilyTag::Ordered => "ordered",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unordered" => Ok(FamilyTag::Unordered),
            "binary" | "unordered-binary" => Ok(FamilyTag::UnorderedBinary),
            "ordered" | "plane" => Ok(FamilyTag::Ordered),
            _ => Err(format!(
                "unknown family {s:?}; expected unordered, binary or ordered"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentKind {
    /// A leaf, or smaller than all of its children.
    None,
    /// Larger than some but not all of its children.
    Descent,
    /// Larger than every child.
    ProperDescent,
}

/// An unordered or ordered rooted labeled forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    /// Sorted vertex labels.
    labels: Vec<Label>,
    /// `parents[i]` is the parent label of `labels[i]`, `0` for roots.
    parents: Vec<Label>,
    /// Child orders of the virtual root (index 0) and of `labels[i]` (index
    /// `i + 1`).
    child_order: Option<Vec<Vec<Label>>>,
}

impl Forest {
    /// A forest on `[n]`; `parents[i - 1]` is the parent of vertex `i`.
    pub fn from_parents(n: usize, parents: &[Label]) -> Result<Self, ForestError> {
        if parents.len() != n {
            return Err(ForestError::WrongLength {
                expected: n,
                got: parents.len(),
            });
        }
        Self::validated((1..=n as Label).collect(), parents.to_vec())
    }

    /// A forest from `(vertex, parent)` pairs over any set of positive labels.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self, ForestError> {
        let mut pairs: Vec<(Label, Label)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(ForestError::BadLabel(w[0].0));
            }
        }
        let (labels, parents) = pairs.into_iter().unzip();
        Self::validated(labels, parents)
    }

    pub fn empty() -> Self {
        Forest {
            labels: Vec::new(),
            parents: Vec::new(),
            child_order: None,
        }
    }

    fn validated(labels: Vec<Label>, parents: Vec<Label>) -> Result<Self, ForestError> {
        if labels.first() == Some(&0) {
            return Err(ForestError::BadLabel(0));
        }
        let f = Forest {
            labels,
            parents,
            child_order: None,
        };
        for (i, &p) in f.parents.iter().enumerate() {
            if p != 0 && f.index_of(p).is_none() {
                return Err(ForestError::ParentOutOfRange {
                    vertex: f.labels[i],
                    parent: p,
                });
            }
        }
        for i in 0..f.len() {
            let mut steps = 0;
            let mut v = f.parents[i];
            while v != 0 {
                steps += 1;
                if steps > f.len() {
                    return Err(ForestError::CycleDetected(f.labels[i]));
                }
                v = f.parents[f.index_of(v).unwrap()];
            }
        }
        Ok(f)
    }

    /// Attaches a child order to every vertex, turning this into an ordered
    /// forest. `orders[0]` orders the roots, `orders[i + 1]` the children of
    /// the `i`-th smallest label.
    pub fn with_child_order(mut self, orders: Vec<Vec<Label>>) -> Result<Self, ForestError> {
        if orders.len() != self.len() + 1 {
            return Err(ForestError::WrongLength {
                expected: self.len() + 1,
                got: orders.len(),
            });
        }
        for (slot, order) in orders.iter().enumerate() {
            let v = if slot == 0 { 0 } else { self.labels[slot - 1] };
            let mut got = order.clone();
            got.sort_unstable();
            if got != self.children(v) {
                return Err(ForestError::BadChildOrder(v));
            }
        }
        self.child_order = Some(orders);
        Ok(self)
    }

    /// Drops any child order.
    pub fn unordered(&self) -> Forest {
        Forest {
            labels: self.labels.clone(),
            parents: self.parents.clone(),
            child_order: None,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn parents(&self) -> &[Label] {
        &self.parents
    }

    pub fn is_ordered(&self) -> bool {
        self.child_order.is_some()
    }

    /// True when the labels are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    pub(crate) fn index_of(&self, v: Label) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub fn contains(&self, v: Label) -> bool {
        self.index_of(v).is_some()
    }

    /// Parent of `v`, `Some(0)` for a root, `None` if `v` is not a vertex.
    pub fn parent(&self, v: Label) -> Option<Label> {
        self.index_of(v).map(|i| self.parents[i])
    }

    /// Children of `v` (`0` for the roots) in increasing order.
    pub fn children(&self, v: Label) -> Vec<Label> {
        self.labels
            .iter()
            .zip(&self.parents)
            .filter(|&(_, &p)| p == v)
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn roots(&self) -> Vec<Label> {
        self.children(0)
    }

    /// Children of `v` in plane order, or `None` for an unordered forest.
    pub fn child_order(&self, v: Label) -> Option<&[Label]> {
        let orders = self.child_order.as_ref()?;
        let slot = if v == 0 { 0 } else { self.index_of(v)? + 1 };
        Some(&orders[slot])
    }

    pub fn child_orders(&self) -> Option<&[Vec<Label>]> {
        self.child_order.as_deref()
    }

    /// Labels from the root of `v`'s tree down to `v`.
    pub fn path_to(&self, v: Label) -> Vec<Label> {
        let mut path = Vec::new();
        let mut cur = v;
        while cur != 0 {
            path.push(cur);
            cur = self.parent(cur).expect("vertex of this forest");
        }
        path.reverse();
        path
    }

    fn child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.len() + 1];
        for &p in &self.parents {
            let slot = if p == 0 { 0 } else { self.index_of(p).unwrap() + 1 };
            counts[slot] += 1;
        }
        counts
    }

    pub fn leaves(&self) -> Vec<Label> {
        let counts = self.child_counts();
        self.labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| counts[i + 1] == 0)
            .map(|(_, &l)| l)
            .collect()
    }

    /// One root-to-leaf label sequence per leaf, leaves taken in increasing
    /// order. Every root-to-vertex path is a prefix of one of these.
    pub fn root_leaf_paths(&self) -> Vec<Vec<Label>> {
        self.leaves().into_iter().map(|l| self.path_to(l)).collect()
    }

    /// Whether every root-to-vertex path avoids every pattern in `ps`.
    ///
    /// Only leaf paths are inspected: containment is inherited by extensions,
    /// so a path to an inner vertex contains a pattern only if the paths to
    /// the leaves below it do. Child order plays no role.
    pub fn avoids(&self, ps: &PatternSet) -> bool {
        self.leaves().into_iter().all(|l| ps.avoided_by(&self.path_to(l)))
    }

    /// Replaces the i-th smallest label by the i-th largest at every vertex.
    pub fn complement(&self) -> Forest {
        let m = self.len();
        let flip = |v: Label| {
            if v == 0 {
                0
            } else {
                self.labels[m - 1 - self.index_of(v).unwrap()]
            }
        };
        let mut pairs: Vec<(Label, Label, usize)> = (0..m)
            .map(|i| (flip(self.labels[i]), flip(self.parents[i]), i))
            .collect();
        pairs.sort_unstable();
        let child_order = self.child_order.as_ref().map(|orders| {
            let mut out = vec![orders[0].iter().map(|&c| flip(c)).collect::<Vec<_>>()];
            for &(_, _, old) in &pairs {
                out.push(orders[old + 1].iter().map(|&c| flip(c)).collect());
            }
            out
        });
        Forest {
            labels: pairs.iter().map(|t| t.0).collect(),
            parents: pairs.iter().map(|t| t.1).collect(),
            child_order,
        }
    }

    /// Vertices larger than all of their ancestors, in increasing order.
    /// Roots always qualify.
    pub fn top_down_maxima(&self) -> Vec<Label> {
        self.labels
            .iter()
            .copied()
            .filter(|&v| {
                let mut cur = self.parent(v).unwrap();
                while cur != 0 {
                    if cur > v {
                        return false;
                    }
                    cur = self.parent(cur).unwrap();
                }
                true
            })
            .collect()
    }

    /// The subforest induced on the top-down maxima. Fails unless every
    /// ancestor of a top-down maximum is itself one.
    pub fn largest_increasing_subforest(&self) -> Result<Forest, ForestError> {
        let tdm: BTreeSet<Label> = self.top_down_maxima().into_iter().collect();
        if tdm
            .iter()
            .any(|&v| self.parent(v).is_some_and(|p| p != 0 && !tdm.contains(&p)))
        {
            return Err(ForestError::NotAncestorClosed);
        }
        let sub = self.induced(&tdm);
        Ok(sub)
    }

    /// Restriction to an ancestor-closed vertex set.
    pub(crate) fn induced(&self, keep: &BTreeSet<Label>) -> Forest {
        let mut labels = Vec::new();
        let mut parents = Vec::new();
        for (i, &l) in self.labels.iter().enumerate() {
            if keep.contains(&l) {
                labels.push(l);
                parents.push(self.parents[i]);
            }
        }
        let child_order = self.child_order.as_ref().map(|orders| {
            let filter = |o: &Vec<Label>| o.iter().copied().filter(|c| keep.contains(c)).collect();
            let mut out = vec![filter(&orders[0])];
            for (i, l) in self.labels.iter().enumerate() {
                if keep.contains(l) {
                    out.push(filter(&orders[i + 1]));
                }
            }
            out
        });
        Forest {
            labels,
            parents,
            child_order,
        }
    }

    /// Number of vertices on a longest root-to-vertex path.
    pub fn height(&self) -> usize {
        self.labels
            .iter()
            .map(|&v| self.path_to(v).len())
            .max()
            .unwrap_or(0)
    }

    pub fn descent_kind(&self, v: Label) -> DescentKind {
        let children = self.children(v);
        let below = children.iter().filter(|&&c| c < v).count();
        match below {
            0 => DescentKind::None,
            b if b == children.len() => DescentKind::ProperDescent,
            _ => DescentKind::Descent,
        }
    }

    /// Canonical encoding of the unlabeled unordered shape. Two forests get the
    /// same signature exactly when their shapes are isomorphic.
    pub fn shape_signature(&self) -> Vec<u8> {
        fn encode(f: &Forest, v: Label) -> Vec<u8> {
            let mut parts: Vec<Vec<u8>> = f.children(v).into_iter().map(|c| encode(f, c)).collect();
            parts.sort_unstable();
            let mut out = vec![b'('];
            for p in parts {
                out.extend(p);
            }
            out.push(b')');
            out
        }
        encode(self, 0)
    }

    pub fn is_in_family(&self, family: FamilyTag) -> bool {
        match family {
            FamilyTag::Unordered => !self.is_ordered(),
            FamilyTag::UnorderedBinary => !self.is_ordered() && self.child_counts().iter().all(|&c| c <= 2),
            FamilyTag::Ordered => self.is_ordered(),
        }
    }

    /// Applies a label map to every vertex. The map must be injective on the
    /// labels and must not produce 0.
    pub fn relabel(&self, map: impl Fn(Label) -> Label) -> Result<Forest, ForestError> {
        let m = |v: Label| if v == 0 { 0 } else { map(v) };
        let pairs = self.labels.iter().zip(&self.parents).map(|(&l, &p)| (m(l), m(p)));
        let out = Forest::from_pairs(pairs)?;
        match &self.child_order {
            None => Ok(out),
            Some(orders) => {
                let mut new_orders = vec![Vec::new(); out.len() + 1];
                new_orders[0] = orders[0].iter().map(|&c| m(c)).collect();
                for (i, &l) in self.labels.iter().enumerate() {
                    let slot = out.index_of(m(l)).unwrap() + 1;
                    new_orders[slot] = orders[i + 1].iter().map(|&c| m(c)).collect();
                }
                out.with_child_order(new_orders)
            }
        }
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_standard() {
            write!(f, "{}|", self.len())?;
        } else {
            f.write_str("{")?;
            write_list(f, &self.labels, ",")?;
            f.write_str("}|")?;
        }
        write_list(f, &self.parents, " ")?;
        if let Some(orders) = &self.child_order {
            f.write_str("|")?;
            for (i, o) in orders.iter().enumerate() {
                if i > 0 {
                    f.write_str(";")?;
                }
                write_list(f, o, " ")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Forest {
    type Err = ForestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| ForestError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut fields = s.trim().split('|');
        let head = fields.next().ok_or_else(|| bad("missing size"))?.trim();
        let labels: Vec<Label> = if let Some(inner) = head.strip_prefix('{') {
            let inner = inner.strip_suffix('}').ok_or_else(|| bad("unbalanced brace"))?;
            parse_label_list(inner, ',')?
        } else {
            let n: usize = head.parse().map_err(|_| bad("size is not a number"))?;
            (1..=n as Label).collect()
        };
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("ground set must be strictly increasing"));
        }
        let parents: Vec<Label> = fields
            .next()
            .ok_or_else(|| bad("missing parent list"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("parent is not a number")))
            .collect::<Result<_, _>>()?;
        if parents.len() != labels.len() {
            return Err(ForestError::WrongLength {
                expected: labels.len(),
                got: parents.len(),
            });
        }
        let forest = Forest::validated(labels, parents)?;
        let forest = match fields.next() {
            None => forest,
            Some(orders) => {
                let orders = orders
                    .split(';')
                    .map(|o| {
                        o.split_whitespace()
                            .map(|t| t.parse().map_err(|_| bad("child is not a number")))
                            .collect::<Result<Vec<Label>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                forest.with_child_order(orders)?
            }
        };
        if fields.next().is_some() {
            return Err(bad("too many fields"));
        }
        Ok(forest)
    }
}

/// JSON shape of a forest: `{"n": 3, "parents": [0, 1, 1]}`, plus
/// `childOrder` for ordered forests and `labels` for ground sets other than
/// `[n]`.
#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ForestJson {
    n: usize,
    parents: Vec<Label>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    child_order: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Label>>,
}

impl Serialize for Forest {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ForestJson {
            n: self.len(),
            parents: self.parents.clone(),
            child_order: self.child_order.clone(),
            labels: (!self.is_standard()).then(|| self.labels.clone()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Forest {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = ForestJson::deserialize(deserializer)?;
        let labels = j.labels.unwrap_or_else(|| (1..=j.n as Label).collect());
        if labels.len() != j.n || labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(serde::de::Error::custom("labels must be n increasing values"));
        }
        if j.parents.len() != j.n {
            return Err(serde::de::Error::custom("expected n parents"));
        }
        let f = Forest::validated(labels, j.parents).map_err(serde::de::Error::custom)?;
        match j.child_order {
            None => Ok(f),
            Some(o) => f.with_child_order(o).map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(s: &str) -> Forest {
        s.parse().unwrap()
    }

    /// Parents of the forest drawn for φ(3,6,8,4,1,10,2,9,7,5).
    pub(crate) fn phi_example() -> Forest {
        Forest::from_pairs([
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
        .unwrap()
    }

    #[test]
    fn from_parents_validation() {
        let chain = Forest::from_parents(2, &[0, 1]).unwrap();
        assert_eq!(chain.roots(), vec![1]);
        assert_eq!(
            Forest::from_parents(2, &[2, 1]),
            Err(ForestError::CycleDetected(1))
        );
        assert_eq!(
            Forest::from_parents(2, &[0, 3]),
            Err(ForestError::ParentOutOfRange { vertex: 2, parent: 3 })
        );
        assert_eq!(
            Forest::from_parents(2, &[0, 2]),
            Err(ForestError::CycleDetected(2))
        );
        let f = phi_example();
        assert_eq!(f.to_string(), "10|0 1 0 3 2 3 2 6 2 1");
        assert_eq!(f.roots(), vec![1, 3]);
        assert_eq!(f.children(2), vec![5, 7, 9]);
    }

    #[test]
    fn paths() {
        assert_eq!(forest("2|0 1").root_leaf_paths(), vec![vec![1, 2]]);
        let f = phi_example();
        assert!(f.root_leaf_paths().contains(&vec![1, 2, 9]));
        assert!(f.root_leaf_paths().contains(&vec![3, 6, 8]));
        assert_eq!(f.root_leaf_paths().len(), 6);
    }

    #[test]
    fn avoidance() {
        let chain321 = forest("3|2 3 0");
        assert!(!chain321.avoids(&PatternSet::classical(&["321"])));
        let chain213 = forest("3|2 0 1");
        assert_eq!(chain213.path_to(3), vec![2, 1, 3]);
        assert!(chain213.avoids(&PatternSet::classical(&["312"])));
        assert!(!chain213.avoids(&PatternSet::classical(&["213"])));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(forest("2|0 1").complement(), forest("2|2 0"));
        let c = phi_example().complement();
        assert_eq!(c.roots(), vec![8, 10]);
        assert_eq!(c.complement(), phi_example());
    }

    #[test]
    fn top_down_maxima_examples() {
        assert_eq!(phi_example().top_down_maxima().len(), 10);
        assert_eq!(forest("3|2 0 1").top_down_maxima(), vec![2, 3]);
        assert_eq!(
            forest("3|2 0 1").largest_increasing_subforest(),
            Err(ForestError::NotAncestorClosed)
        );
        assert_eq!(
            phi_example().largest_increasing_subforest().unwrap(),
            phi_example()
        );
    }

    #[test]
    fn height_and_descents() {
        assert_eq!(Forest::empty().height(), 0);
        assert_eq!(forest("1|0").height(), 1);
        assert_eq!(phi_example().height(), 3);
        let f = Forest::from_pairs([(3, 0), (1, 3), (5, 3)]).unwrap();
        assert_eq!(f.descent_kind(3), DescentKind::Descent);
        assert_eq!(f.descent_kind(1), DescentKind::None);
        let g = Forest::from_pairs([(3, 0), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.descent_kind(3), DescentKind::ProperDescent);
    }

    #[test]
    fn shape_signatures() {
        assert_eq!(
            forest("2|0 1").shape_signature(),
            forest("2|2 0").shape_signature()
        );
        assert_ne!(
            forest("2|0 1").shape_signature(),
            forest("2|0 0").shape_signature()
        );
        assert_ne!(
            forest("3|0 1 1").shape_signature(),
            forest("3|0 1 2").shape_signature()
        );
    }

    #[test]
    fn text_round_trip_and_general_ground() {
        let f: Forest = "{4,7,10}|10 0 0".parse().unwrap();
        assert_eq!(f.roots(), vec![7, 10]);
        assert_eq!(f.to_string(), "{4,7,10}|10 0 0");
        assert_eq!(forest("0|"), Forest::empty());
        let o: Forest = "2|0 1|1;2;".parse().unwrap();
        assert!(o.is_ordered());
        assert_eq!(o.to_string(), "2|0 1|1;2;");
        let o2: Forest = "2|0 0|2 1;;".parse().unwrap();
        assert_eq!(o2.child_order(0), Some(&[2, 1][..]));
        assert!(matches!(
            "2|0 0|1;;".parse::<Forest>(),
            Err(ForestError::BadChildOrder(0))
        ));
    }

    #[test]
    fn json_round_trip() {
        for s in ["3|0 1 1", "{4,7,10}|10 0 0", "2|0 0|2 1;;"] {
            let f = forest(s);
            let j = serde_json::to_string(&f).unwrap();
            let back: Forest = serde_json::from_str(&j).unwrap();
            assert_eq!(back, f);
        }
        let j = serde_json::to_string(&forest("2|0 0|2 1;;")).unwrap();
        assert_eq!(j, r#"{"n":2,"parents":[0,0],"childOrder":[[2,1],[],[]]}"#);
        assert!(serde_json::from_str::<Forest>(r#"{"n":2,"parents":[2,1]}"#).is_err());
    }

    #[test]
    fn ordered_complement_keeps_plane_structure() {
        let o: Forest = "3|0 1 1|1;3 2;;".parse().unwrap();
        let c = o.complement();
        assert_eq!(c.child_order(3), Some(&[1, 2][..]));
        assert_eq!(c.complement(), o);
    }

    #[test]
    fn binary_family_counts_root_children() {
        assert!(forest("2|0 0").is_in_family(FamilyTag::UnorderedBinary));
        assert!(!forest("3|0 0 0").is_in_family(FamilyTag::UnorderedBinary));
        assert!(!forest("4|0 1 1 1").is_in_family(FamilyTag::UnorderedBinary));
    }
}
