//! Classical counting sequences, computed exactly and cached.
//!
//! All functions are total: out-of-range arguments (such as `k > n`) give 0.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Stirling1,
    Stirling2,
    Binom,
}

type Cache = RwLock<HashMap<(Kind, usize, usize), BigUint>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn table(kind: Kind, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if let Some(v) = cache().read().unwrap().get(&(kind, n, k)) {
        return v.clone();
    }
    let v = match (kind, n, k) {
        (Kind::Binom, _, 0) => BigUint::one(),
        (Kind::Binom, _, _) if k == n => BigUint::one(),
        (Kind::Binom, _, _) => table(kind, n - 1, k - 1) + table(kind, n - 1, k),
        (_, 0, 0) => BigUint::one(),
        (_, _, 0) => BigUint::zero(),
        (Kind::Stirling1, _, _) => table(kind, n - 1, k - 1) + (n - 1) * table(kind, n - 1, k),
        (Kind::Stirling2, _, _) => table(kind, n - 1, k - 1) + k * table(kind, n - 1, k),
    };
    cache().write().unwrap().insert((kind, n, k), v.clone());
    v
}

/// Unsigned Stirling numbers of the first kind `c(n, k)`: permutations of
/// `[n]` with `k` cycles.
pub fn stirling1(n: usize, k: usize) -> BigUint {
    table(Kind::Stirling1, n, k)
}

/// Stirling numbers of the second kind `S(n, k)`: partitions of `[n]` into
/// `k` blocks.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    table(Kind::Stirling2, n, k)
}

pub fn binom(n: usize, k: usize) -> BigUint {
    table(Kind::Binom, n, k)
}

pub fn bell(n: usize) -> BigUint {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn catalan(n: usize) -> BigUint {
    binom(2 * n, n) / (n + 1)
}
