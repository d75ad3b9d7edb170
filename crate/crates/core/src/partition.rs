//! Set partitions, ordered set partitions, partitions into lists and
//! compositions. These are the domains of the forest bijections.
//!
//! Text forms follow the usual brace notation: `{1,3,4,5}{2,6}`. Compositions
//! are written as a parenthesized list, `(2,2,1,4,1)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{parse_label_list, write_list, Label, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("blocks must be nonempty")]
    EmptyBlock,
    #[error("{0} appears in more than one block")]
    Overlap(Label),
    #[error("label 0 is reserved")]
    ZeroLabel,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error(transparent)]
    Parse(#[from] PermError),
}

fn check_blocks(blocks: &[Vec<Label>]) -> Result<(), PartitionError> {
    let mut seen = BTreeSet::new();
    for b in blocks {
        if b.is_empty() {
            return Err(PartitionError::EmptyBlock);
        }
        for &v in b {
            if v == 0 {
                return Err(PartitionError::ZeroLabel);
            }
            if !seen.insert(v) {
                return Err(PartitionError::Overlap(v));
            }
        }
    }
    Ok(())
}

fn ground_of(blocks: &[Vec<Label>]) -> Vec<Label> {
    let mut g: Vec<Label> = blocks.iter().flatten().copied().collect();
    g.sort_unstable();
    g
}

fn parse_braced(s: &str) -> Result<Vec<Vec<Label>>, PartitionError> {
    let mut blocks = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| PermError::parse(s, "expected '{'"))?;
        let close = body
            .find('}')
            .ok_or_else(|| PermError::parse(s, "unbalanced brace"))?;
        blocks.push(parse_label_list(&body[..close], ',')?);
        rest = body[close + 1..].trim_start();
    }
    Ok(blocks)
}

fn write_braced(f: &mut fmt::Formatter<'_>, blocks: &[Vec<Label>]) -> fmt::Result {
    for b in blocks {
        f.write_str("{")?;
        write_list(f, b, ",")?;
        f.write_str("}")?;
    }
    Ok(())
}

/// Unordered blocks of an unordered set. Stored canonically: each block
/// sorted, blocks sorted by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<Label>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<Label>>) -> Result<Self, PartitionError> {
        check_blocks(&blocks)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> Vec<Label> {
        ground_of(&self.blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.blocks)
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SetPartition::new(parse_braced(s)?)
    }
}

/// A set partition whose blocks come in a significant order. Each block is
/// stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<Label>>,
}

impl OrderedSetPartition {
    pub fn new(mut blocks: Vec<Vec<Label>>) -> Result<Self, PartitionError> {
        check_blocks(&blocks)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> Vec<Label> {
        ground_of(&self.blocks)
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.blocks)
    }
}

impl FromStr for OrderedSetPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderedSetPartition::new(parse_braced(s)?)
    }
}

/// Which identifications a [`ListPartition`] makes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListFlags {
    /// The order of the blocks is significant.
    pub ordered_blocks: bool,
    /// Each block is identified with its reversal.
    pub up_to_reverse: bool,
}

impl ListFlags {
    pub const UNORDERED: ListFlags = ListFlags {
        ordered_blocks: false,
        up_to_reverse: false,
    };
    pub const ORDERED_UP_TO_REVERSE: ListFlags = ListFlags {
        ordered_blocks: true,
        up_to_reverse: true,
    };
}

/// A set partition whose blocks are sequences.
///
/// Canonical storage: when `up_to_reverse` is set, a block of length at least
/// two is oriented so its smallest element lies to the right of its second
/// smallest; when blocks are unordered they are sorted by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListPartition {
    blocks: Vec<Vec<Label>>,
    flags: ListFlags,
}

/// Orients a list so that its smallest entry comes after its second smallest.
pub fn orient_up_to_reverse(list: &mut [Label]) {
    if list.len() < 2 {
        return;
    }
    let mut sorted = list.to_vec();
    sorted.sort_unstable();
    let pos = |v: Label| list.iter().position(|&x| x == v).unwrap();
    if pos(sorted[0]) < pos(sorted[1]) {
        list.reverse();
    }
}

impl ListPartition {
    pub fn new(mut blocks: Vec<Vec<Label>>, flags: ListFlags) -> Result<Self, PartitionError> {
        check_blocks(&blocks)?;
        if flags.up_to_reverse {
            for b in &mut blocks {
                orient_up_to_reverse(b);
            }
        }
        if !flags.ordered_blocks {
            blocks.sort_unstable_by_key(|b| *b.iter().min().unwrap());
        }
        Ok(ListPartition { blocks, flags })
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    pub fn flags(&self) -> ListFlags {
        self.flags
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> Vec<Label> {
        ground_of(&self.blocks)
    }
}

impl fmt::Display for ListPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.blocks)
    }
}

impl ListPartition {
    pub fn parse(s: &str, flags: ListFlags) -> Result<Self, PartitionError> {
        ListPartition::new(parse_braced(s)?, flags)
    }
}

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_partition_is_canonical() {
        let a: SetPartition = "{6,2}{5,1,4,3}".parse().unwrap();
        assert_eq!(a.to_string(), "{1,3,4,5}{2,6}");
        assert_eq!(a.ground(), vec![1, 2, 3, 4, 5, 6]);
        assert!(matches!(
            "{1,2}{2}".parse::<SetPartition>(),
            Err(PartitionError::Overlap(2))
        ));
        assert!(matches!(
            "{1}{}".parse::<SetPartition>(),
            Err(PartitionError::EmptyBlock)
        ));
    }

    #[test]
    fn ordered_blocks_keep_their_order() {
        let a: OrderedSetPartition = "{1,6}{2}{3,4,5}".parse().unwrap();
        let b: OrderedSetPartition = "{2}{1,6}{3,4,5}".parse().unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn lists_distinguish_internal_order() {
        let a = ListPartition::parse("{1,6}{2}{3,4,5}", ListFlags::UNORDERED).unwrap();
        let b = ListPartition::parse("{6,1}{2}{3,5,4}", ListFlags::UNORDERED).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn up_to_reverse_identifications() {
        let f = ListFlags::ORDERED_UP_TO_REVERSE;
        let p = |s| ListPartition::parse(s, f).unwrap();
        assert_eq!(p("{1,2}{3,4,5}"), p("{2,1}{3,4,5}"));
        assert_eq!(p("{1,2}{3,4,5}"), p("{2,1}{5,4,3}"));
        assert_ne!(p("{1,2}{3,4,5}"), p("{1,2}{4,3,5}"));
        assert_ne!(p("{1,2}{3,4,5}"), p("{3,4,5}{1,2}"));
        assert_eq!(p("{11,2,9,8,12,3}").blocks()[0], vec![3, 12, 8, 9, 2, 11]);
        assert_eq!(p("{12,3,11,2,9,8}").blocks()[0], vec![12, 3, 11, 2, 9, 8]);
    }

    #[test]
    fn composition_rejects_zero() {
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Composition::new(vec![2, 2, 1, 4, 1]).unwrap().total(), 10);
    }
}
