//! Exact rational sequences: Bernoulli numbers, Euler-polynomial endpoint
//! values and factorials.
//!
//! Bernoulli numbers come from the defining recurrence
//! `sum_{k=0}^{n} C(n+1, k) B_k = 0` and are memoized in a process-wide,
//! grow-only table. Readers share a read lock; extension takes the write
//! lock, so there is a single writer at a time.

mod cache;

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numkernel::ExactRational;

pub use cache::{cache_load, cache_store, CACHE_HEADER};

/// Even-index Bernoulli numbers `B_0, B_2, ..., B_max_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    // entries[n] = B_{2n}
    entries: Vec<ExactRational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable { entries: vec![ExactRational::one()] }
    }

    /// A table holding every even index up to `max_index`.
    pub fn up_to(max_index: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(max_index);
        t
    }

    pub(crate) fn from_entries(entries: Vec<ExactRational>) -> Self {
        BernoulliTable { entries }
    }

    /// Highest cached even index.
    pub fn max_index(&self) -> usize {
        2 * (self.entries.len() - 1)
    }

    /// `B_index` for an even index already in the table.
    pub fn get(&self, index: usize) -> Option<&ExactRational> {
        if index % 2 == 1 {
            return None;
        }
        self.entries.get(index / 2)
    }

    /// `(index, B_index)` for every cached even index, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.entries.iter().enumerate().map(|(n, b)| (2 * n, b))
    }

    pub fn extend_to(&mut self, max_index: usize) {
        while self.max_index() < max_index {
            let next = 2 * self.entries.len();
            let b = self.recurrence_value(next);
            self.entries.push(b);
        }
    }

    /// `B_{2n}` from the recurrence, using the entries below it.
    fn recurrence_value(&self, index: usize) -> ExactRational {
        let m = index;
        // C(m+1, 0) B_0 + C(m+1, 1) B_1 with B_1 = -1/2
        let mut acc = ExactRational::one() - ExactRational::new(m as i64 + 1, 2);
        let mut binom = BigInt::from(m as u64 + 1);
        for k in 2..m {
            binom = binom * BigInt::from((m + 2 - k) as u64) / BigInt::from(k as u64);
            if k % 2 == 0 {
                acc = acc + &self.entries[k / 2] * ExactRational::from(binom.clone());
            }
        }
        -acc / ExactRational::from(m as i64 + 1)
    }

    /// Checks the stored `B_2, ..., B_{2 count}` against the recurrence, each
    /// from its stored predecessors.
    pub fn verify_prefix(&self, count: usize) -> Result<()> {
        if self.entries[0] != ExactRational::one() {
            return Err(Error::Corruption("B_0 must be 1".into()));
        }
        let last = count.min(self.entries.len() - 1);
        for n in 1..=last {
            let expected = self.recurrence_value(2 * n);
            if self.entries[n] != expected {
                return Err(Error::Corruption(format!(
                    "B_{} = {} fails the recurrence (expected {})",
                    2 * n,
                    self.entries[n],
                    expected
                )));
            }
        }
        Ok(())
    }

    /// Sign pattern `sign(B_{2n}) = (-1)^(n-1)` over the whole table.
    pub fn verify_signs(&self) -> Result<()> {
        for (n, b) in self.entries.iter().enumerate().skip(1) {
            let ok = if n % 2 == 1 { b.is_positive() } else { b.is_negative() };
            if !ok {
                return Err(Error::Corruption(format!("B_{} has the wrong sign", 2 * n)));
            }
        }
        Ok(())
    }
}

fn shared_table() -> &'static RwLock<BernoulliTable> {
    static TABLE: OnceLock<RwLock<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(BernoulliTable::new()))
}

/// Makes sure the shared table covers `max_index` and returns a snapshot
/// of the requested prefix.
pub fn bernoulli_table(max_index: usize) -> BernoulliTable {
    {
        let t = shared_table().read().expect("bernoulli table lock poisoned");
        if t.max_index() >= max_index {
            return BernoulliTable::from_entries(t.entries[..=max_index / 2].to_vec());
        }
    }
    let mut t = shared_table().write().expect("bernoulli table lock poisoned");
    t.extend_to(max_index);
    BernoulliTable::from_entries(t.entries[..=max_index / 2].to_vec())
}

/// Seeds the shared table from a verified one (for example a loaded cache).
/// Entries already present are kept.
pub fn install_table(table: &BernoulliTable) {
    let mut t = shared_table().write().expect("bernoulli table lock poisoned");
    if table.entries.len() > t.entries.len() {
        let start = t.entries.len();
        t.entries.extend_from_slice(&table.entries[start..]);
    }
}

/// Exact `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> ExactRational {
    match n {
        0 => ExactRational::one(),
        1 => ExactRational::new(-1, 2),
        n if n % 2 == 1 => ExactRational::zero(),
        n => {
            {
                let t = shared_table().read().expect("bernoulli table lock poisoned");
                if let Some(b) = t.get(n) {
                    return b.clone();
                }
            }
            let mut t = shared_table().write().expect("bernoulli table lock poisoned");
            t.extend_to(n);
            t.get(n).cloned().expect("table extended past n")
        }
    }
}

/// Exact `E_{2m+1}(1) = 2 (2^{2m+2} - 1) B_{2m+2} / (2m+2)`.
pub fn euler_endpoint(m: usize) -> ExactRational {
    let idx = 2 * m + 2;
    let pow = ExactRational::from(BigInt::one() << idx) - ExactRational::one();
    ExactRational::from(2) * pow * bernoulli(idx) / ExactRational::from(idx as i64)
}

/// Endpoint values `E_1(1), E_3(1), ..., E_{2 max_m + 1}(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerEndpointTable {
    // entries[m] = E_{2m+1}(1)
    entries: Vec<ExactRational>,
}

impl EulerEndpointTable {
    pub fn build(max_m: usize) -> Self {
        EulerEndpointTable { entries: (0..=max_m).map(euler_endpoint).collect() }
    }

    /// `E_{degree}(1)` for an odd degree in range.
    pub fn get(&self, degree: usize) -> Option<&ExactRational> {
        if degree.is_multiple_of(2) {
            return None;
        }
        self.entries.get(degree / 2)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.entries.iter().enumerate().map(|(m, e)| (2 * m + 1, e))
    }
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
