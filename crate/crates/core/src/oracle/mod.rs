//! Exact counting: classical number sequences, the closed forms for the
//! counted classes, and a brute-force engine that every formula and table is
//! checked against.

mod brute;
mod formulas;
mod numbers;
mod tables;
mod theorems;

use thiserror::Error;

use crate::forest::FamilyTag;

pub use brute::{
    brute_count, brute_count_per_vertex, family_size, naive_contains, refined_count, refined_counts, Budget,
    CountOptions, Statistic, BUDGET_ENV,
};
pub use formulas::{
    formula, root_descent_trees, uni132_by_trees, uni231_sequence, unimodal_by_top_down_maxima,
    unimodal_by_trees, FormulaName,
};
pub use numbers::{bell, binom, catalan, factorial, stirling1, stirling2};
pub use tables::{figure, CountTable, Figure, FigureCell, FigureColumn, FIGURES};
pub use theorems::{theorem, verify, Theorem, VerifyRow, THEOREMS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "n = {n} exceeds the {family} budget of {limit}; raise it with {} or ignore it",
        BUDGET_ENV
    )]
    BudgetExceeded {
        family: FamilyTag,
        n: usize,
        limit: usize,
    },
    #[error("formula {formula} produced a non-integer at n = {n}")]
    InternalNonInteger { formula: &'static str, n: usize },
    #[error("unknown name {name:?}; expected one of {valid}")]
    UnknownName { name: String, valid: String },
    #[error("bad budget {0:?}: expected N or family=N,...")]
    BadBudget(String),
}
