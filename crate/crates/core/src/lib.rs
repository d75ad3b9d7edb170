//! Pattern avoidance in rooted labeled forests.
//!
//! A forest on a label set is stored as a parent map, with `0` standing for
//! an unlabeled root above all trees. A forest avoids a permutation pattern
//! when the labels along every root-to-vertex path avoid it.
//!
//! ```
//! use forest_patterns::{gen_forests, FamilyTag, PatternSet};
//!
//! let avoid: PatternSet = "321".parse().unwrap();
//! let count = gen_forests(4, FamilyTag::Unordered)
//!     .filter(|f| f.avoids(&avoid))
//!     .count();
//! assert_eq!(count, 104);
//! ```

pub mod bijection;
pub mod forest;
pub mod generate;
pub mod oracle;
pub mod partition;
pub mod pattern;
pub mod perm;

pub use forest::{DescentKind, FamilyTag, Forest, ForestError};
pub use generate::{gen_forests, gen_permutations};
pub use partition::{Composition, ListFlags, ListPartition, OrderedSetPartition, SetPartition};
pub use pattern::{Pattern, PatternError, PatternMode, PatternSet};
pub use perm::{CycleDecomposition, CycleStructure, Label, PermError, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/forests.md")]
    mod forests {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
}
