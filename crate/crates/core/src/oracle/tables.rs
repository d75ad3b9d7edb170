use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{brute_count, CountOptions, OracleError};
use crate::forest::FamilyTag;
use crate::pattern::PatternSet;

/// Counts of avoiding forests for `n = 1..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub family: FamilyTag,
    pub patterns: PatternSet,
    pub rows: BTreeMap<usize, BigUint>,
}

impl CountTable {
    pub fn compute(
        family: FamilyTag,
        patterns: PatternSet,
        max_n: usize,
        opts: &CountOptions,
    ) -> Result<CountTable, OracleError> {
        let rows = (1..=max_n)
            .map(|n| Ok((n, brute_count(n, family, &patterns, opts)?)))
            .collect::<Result<_, OracleError>>()?;
        Ok(CountTable {
            family,
            patterns,
            rows,
        })
    }
}

/// One column of a published table: a single pattern and the values printed
/// for `n = 1, 2, …` (`None` where the value was not known).
#[derive(Clone, Copy, Debug)]
pub struct FigureColumn {
    pub pattern: &'static str,
    pub expected: &'static [Option<u64>],
}

#[derive(Clone, Copy, Debug)]
pub struct Figure {
    pub number: u8,
    pub family: FamilyTag,
    pub columns: &'static [FigureColumn],
}

/// A computed cell next to the published value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureCell {
    pub n: usize,
    pub pattern: &'static str,
    pub computed: BigUint,
    pub expected: Option<BigUint>,
}

impl FigureCell {
    /// False only when a published value exists and differs.
    pub fn agrees(&self) -> bool {
        self.expected.as_ref().is_none_or(|e| *e == self.computed)
    }
}

const fn col(pattern: &'static str, expected: &'static [Option<u64>]) -> FigureColumn {
    FigureColumn { pattern, expected }
}

pub const FIGURES: [Figure; 3] = [
    Figure {
        number: 7,
        family: FamilyTag::Unordered,
        columns: &[
            col("321", &[Some(1), Some(3), Some(15), Some(104), Some(918)]),
            col("231", &[Some(1), Some(3), Some(15), Some(104), Some(917)]),
            col("132", &[Some(1), Some(3), Some(15), Some(104), Some(918)]),
            col("!321", &[Some(1), Some(3), Some(15), Some(107), Some(997)]),
            col("!231", &[Some(1), Some(3), Some(15), Some(106), Some(973)]),
            col("!132", &[Some(1), Some(3), Some(15), Some(106), Some(972)]),
        ],
    },
    Figure {
        number: 12,
        family: FamilyTag::UnorderedBinary,
        columns: &[
            col("321", &[Some(1), Some(3), Some(14), Some(87), Some(668)]),
            col("231", &[Some(1), Some(3), Some(14), Some(87), Some(667)]),
            col("132", &[Some(1), Some(3), Some(14), Some(87), Some(668)]),
            col("!321", &[Some(1), Some(3), Some(14), Some(90), Some(747)]),
            col("!231", &[Some(1), Some(3), Some(14), Some(89), Some(723)]),
            col("!132", &[Some(1), Some(3), Some(14), Some(89), Some(722)]),
        ],
    },
    Figure {
        number: 13,
        family: FamilyTag::Ordered,
        columns: &[
            col("321", &[Some(1), Some(4), Some(29), Some(304), Some(4158)]),
            col("231", &[Some(1), Some(4), Some(29), Some(304), Some(4156)]),
            col("132", &[Some(1), Some(4), Some(29), Some(304), Some(4158)]),
            col("!321", &[Some(1), Some(4), Some(29), Some(307), None]),
            col("!231", &[Some(1), Some(4), Some(29), Some(306), None]),
            col("!132", &[Some(1), Some(4), Some(29), Some(306), None]),
        ],
    },
];

pub fn figure(number: u8) -> Result<&'static Figure, OracleError> {
    FIGURES
        .iter()
        .find(|f| f.number == number)
        .ok_or_else(|| OracleError::UnknownName {
            name: number.to_string(),
            valid: "7, 12, 13".into(),
        })
}

impl Figure {
    /// Every cell for `n = 1..=max_n`, row by row.
    pub fn compute(&self, max_n: usize, opts: &CountOptions) -> Result<Vec<FigureCell>, OracleError> {
        let mut cells = Vec::new();
        for n in 1..=max_n {
            for c in self.columns {
                let patterns: PatternSet = c.pattern.parse().expect("figure patterns are valid");
                cells.push(FigureCell {
                    n,
                    pattern: c.pattern,
                    computed: brute_count(n, self.family, &patterns, opts)?,
                    expected: c.expected.get(n - 1).copied().flatten().map(BigUint::from),
                });
            }
        }
        Ok(cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows_match() {
        for fig in &FIGURES {
            for cell in fig.compute(4, &CountOptions::sequential()).unwrap() {
                assert!(
                    cell.agrees(),
                    "figure {} n={} {}",
                    fig.number,
                    cell.n,
                    cell.pattern
                );
                assert!(cell.expected.is_some());
            }
        }
    }

    #[test]
    fn count_table_rows() {
        let t = CountTable::compute(
            FamilyTag::Unordered,
            "21".parse().unwrap(),
            5,
            &CountOptions::sequential(),
        )
        .unwrap();
        let got: Vec<u64> = t.rows.values().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(got, [1, 2, 6, 24, 120]);
    }
}
