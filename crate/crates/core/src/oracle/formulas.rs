//! Closed forms and recurrences for the counted forest classes.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::numbers::{bell, binom, factorial, stirling1, stirling2};
use super::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaName {
    /// `sum k! c(n,k)`
    Unimodal,
    /// `sum B(k) c(n,k)`
    Uni123,
    /// `sum k! S(n,k)`
    Uni321,
    /// `n! sum (1/k!) C(n-1,k-1)`
    Uni132,
    /// Same sum as [`FormulaName::Uni132`].
    OneDescentPlus,
    /// `n! (1 + sum 1/2^l C(n-k-1,l-1) C(k,l))` over `1 <= l <= k`, `l + k <= n`.
    OneDescent,
    /// `F(n) = sum_k sum_r C(n-1,k-1) (r-1)! F(n-k) F(k-r)`, `F(0) = 1`.
    Uni231Recurrence,
}

impl FormulaName {
    pub const ALL: [FormulaName; 7] = [
        FormulaName::Unimodal,
        FormulaName::Uni123,
        FormulaName::Uni321,
        FormulaName::Uni132,
        FormulaName::OneDescentPlus,
        FormulaName::Uni231Recurrence,
        FormulaName::OneDescent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaName::Unimodal => "unimodal",
            FormulaName::Uni123 => "uni123",
            FormulaName::Uni321 => "uni321",
            FormulaName::Uni132 => "uni132",
            FormulaName::OneDescentPlus => "onedescent_plus",
            FormulaName::OneDescent => "onedescent",
            FormulaName::Uni231Recurrence => "uni231_recurrence",
        }
    }
}

impl fmt::Display for FormulaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaName {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormulaName::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| OracleError::UnknownName {
                name: s.to_string(),
                valid: FormulaName::ALL
                    .iter()
                    .map(|f| f.name())
                    .collect::<Vec<_>>()
                    .join(", "),
            })
    }
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn to_integer(name: FormulaName, n: usize, r: BigRational) -> Result<BigUint, OracleError> {
    if !r.is_integer() {
        return Err(OracleError::InternalNonInteger {
            formula: name.name(),
            n,
        });
    }
    r.to_integer()
        .to_biguint()
        .ok_or(OracleError::InternalNonInteger {
            formula: name.name(),
            n,
        })
}

fn uni132_sum(n: usize) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 1..=n {
        sum += ratio(binom(n - 1, k - 1), factorial(k));
    }
    sum * ratio(factorial(n), BigUint::one())
}

fn onedescent_sum(n: usize) -> BigRational {
    let mut sum = BigRational::one();
    for k in 1..=n {
        for l in 1..=k {
            if l + k > n {
                break;
            }
            sum += ratio(binom(n - k - 1, l - 1) * binom(k, l), BigUint::one() << l);
        }
    }
    sum * ratio(factorial(n), BigUint::one())
}

/// The recurrence values `F(0..=n)`.
pub fn uni231_sequence(n: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    for m in 1..=n {
        let mut total = BigUint::zero();
        for k in 1..=m {
            let t: BigUint = (1..=k).map(|r| factorial(r - 1) * &f[k - r]).sum();
            total += binom(m - 1, k - 1) * &f[m - k] * t;
        }
        f.push(total);
    }
    f
}

/// Evaluates a formula at `n >= 1`.
pub fn formula(name: FormulaName, n: usize) -> Result<BigUint, OracleError> {
    Ok(match name {
        FormulaName::Unimodal => (1..=n).map(|k| factorial(k) * stirling1(n, k)).sum(),
        FormulaName::Uni123 => (1..=n).map(|k| bell(k) * stirling1(n, k)).sum(),
        FormulaName::Uni321 => (1..=n).map(|k| factorial(k) * stirling2(n, k)).sum(),
        FormulaName::Uni132 | FormulaName::OneDescentPlus => to_integer(name, n, uni132_sum(n))?,
        FormulaName::OneDescent => to_integer(name, n, onedescent_sum(n))?,
        FormulaName::Uni231Recurrence => uni231_sequence(n).pop().unwrap(),
    })
}

/// Unimodal forests on `[n]` with exactly `k` top-down maxima: `k! c(n,k)`.
pub fn unimodal_by_top_down_maxima(n: usize, k: usize) -> BigUint {
    factorial(k) * stirling1(n, k)
}

/// Unimodal forests on `[n]` with exactly `m` trees.
pub fn unimodal_by_trees(n: usize, m: usize) -> BigUint {
    (m..=n).map(|k| stirling1(k, m) * stirling1(n, k)).sum()
}

/// Forests on `[n]` avoiding 312, 213 and 132 with exactly `k` trees:
/// `(n!/k!) C(n-1,k-1)`.
pub fn uni132_by_trees(n: usize, k: usize) -> BigUint {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    factorial(n) / factorial(k) * binom(n - 1, k - 1)
}

/// Trees on `[n]` whose root is larger than all its children and that have no
/// other descent: `n!/2` for `n >= 2`.
pub fn root_descent_trees(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::from(n);
    }
    factorial(n) / 2u32
}
