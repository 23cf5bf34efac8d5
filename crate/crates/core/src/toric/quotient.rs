use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::ToricError;

/// The cyclic quotient singularity `1/r (a_1, ..., a_k)`: `ζ_r` acts on
/// `C^k` by `(ζ^{a_1}, ..., ζ^{a_k})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicQuotient {
    pub r: u32,
    pub weights: Vec<u32>,
}

impl CyclicQuotient {
    pub fn new(r: u32, weights: Vec<u32>) -> Result<Self, ToricError> {
        if r == 0 {
            return Err(ToricError::InvalidQuotient("order must be positive".into()));
        }
        if weights.is_empty() {
            return Err(ToricError::InvalidQuotient("need at least one weight".into()));
        }
        let weights = weights.into_iter().map(|a| a % r).collect();
        Ok(CyclicQuotient { r, weights })
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    /// `Σ a_i ≡ 0 mod r`, so the volume form descends to the quotient.
    pub fn is_gorenstein(&self) -> bool {
        self.weights.iter().map(|&a| a as u64).sum::<u64>() % self.r as u64 == 0
    }

    /// The exponents `(m a_1 mod r, ..., m a_k mod r)` of `ζ^m`.
    pub fn element(&self, m: u32) -> Vec<u32> {
        let r = self.r as u64;
        self.weights.iter().map(|&a| ((m as u64 * a as u64) % r) as u32).collect()
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "1/{}({})", self.r, w.join(","))
    }
}

/// `age(ζ^m) = (1/r) Σ (m a_i mod r)`.
pub fn element_age(q: &CyclicQuotient, m: u32) -> Rational64 {
    let s: u32 = q.element(m % q.r).iter().sum();
    Rational64::new(s as i64, q.r as i64)
}

/// The `m ∈ [1, r)` whose age is exactly 1.
pub fn junior_elements(q: &CyclicQuotient) -> Vec<u32> {
    (1..q.r).filter(|&m| element_age(q, m) == Rational64::from_integer(1)).collect()
}

/// Number of group elements of each age, sorted by age.
pub fn age_histogram(q: &CyclicQuotient) -> Vec<(Rational64, u32)> {
    let mut counts: std::collections::BTreeMap<Rational64, u32> = Default::default();
    for m in 0..q.r {
        *counts.entry(element_age(q, m)).or_default() += 1;
    }
    counts.into_iter().collect()
}
