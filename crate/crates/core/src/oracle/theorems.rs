use num_bigint::BigUint;

use super::{brute_count, formula, CountOptions, FormulaName, OracleError};
use crate::forest::FamilyTag;
use crate::pattern::PatternSet;

/// A closed form together with the avoidance classes it counts.
#[derive(Clone, Copy, Debug)]
pub struct Theorem {
    pub formula: FormulaName,
    pub pattern_sets: &'static [&'static [&'static str]],
}

impl Theorem {
    pub fn name(&self) -> &'static str {
        self.formula.name()
    }

    pub fn sets(&self) -> Vec<PatternSet> {
        self.pattern_sets
            .iter()
            .map(|s| PatternSet::classical(s))
            .collect()
    }
}

pub const THEOREMS: [Theorem; 7] = [
    Theorem {
        formula: FormulaName::Unimodal,
        pattern_sets: &[&["213", "312"], &["231", "132"]],
    },
    Theorem {
        formula: FormulaName::Uni123,
        pattern_sets: &[&["213", "312", "123"], &["231", "132", "321"]],
    },
    Theorem {
        formula: FormulaName::Uni321,
        pattern_sets: &[&["213", "312", "321"], &["231", "132", "123"]],
    },
    Theorem {
        formula: FormulaName::Uni132,
        pattern_sets: &[&["312", "213", "132"], &["132", "231", "312"]],
    },
    Theorem {
        formula: FormulaName::OneDescentPlus,
        pattern_sets: &[&["321", "132", "213"], &["123", "312", "231"]],
    },
    Theorem {
        formula: FormulaName::Uni231Recurrence,
        pattern_sets: &[&["213", "312", "231"], &["231", "132", "213"]],
    },
    Theorem {
        formula: FormulaName::OneDescent,
        pattern_sets: &[&["321", "2143", "3142"], &["123", "3412", "2413"]],
    },
];

pub fn theorem(name: &str) -> Result<&'static Theorem, OracleError> {
    let formula: FormulaName = name.parse()?;
    Ok(THEOREMS.iter().find(|t| t.formula == formula).unwrap())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: usize,
    pub patterns: PatternSet,
    pub formula: BigUint,
    pub brute: BigUint,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.formula == self.brute
    }
}

/// Compares the formula against brute force on unordered forests for every
/// pattern set of the theorem and every `n` in `1..=max_n`.
pub fn verify(th: &Theorem, max_n: usize, opts: &CountOptions) -> Result<Vec<VerifyRow>, OracleError> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let expected = formula(th.formula, n)?;
        for patterns in th.sets() {
            let brute = brute_count(n, FamilyTag::Unordered, &patterns, opts)?;
            rows.push(VerifyRow {
                n,
                patterns,
                formula: expected.clone(),
                brute,
            });
        }
    }
    Ok(rows)
}
