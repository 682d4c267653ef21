use alloc::vec::Vec;
use core::ops::Index;

use num_bigint::BigUint;

/// Exact nonnegative counts indexed from `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CountSequence {
    values: Vec<BigUint>,
}

impl CountSequence {
    pub fn new(values: Vec<BigUint>) -> Self {
        CountSequence { values }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        CountSequence {
            values: values.iter().map(|&v| BigUint::from(v)).collect(),
        }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest index held, or `None` when empty.
    pub fn n_max(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn truncated(&self, n_max: usize) -> CountSequence {
        CountSequence {
            values: self.values.iter().take(n_max + 1).cloned().collect(),
        }
    }

    /// First index where the two sequences differ over their common range.
    pub fn first_divergence(&self, other: &CountSequence) -> Option<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
    }
}

impl Index<usize> for CountSequence {
    type Output = BigUint;

    fn index(&self, n: usize) -> &BigUint {
        &self.values[n]
    }
}

impl FromIterator<BigUint> for CountSequence {
    fn from_iter<I: IntoIterator<Item = BigUint>>(iter: I) -> Self {
        CountSequence {
            values: iter.into_iter().collect(),
        }
    }
}
