//! Brute-force ground truth.
//!
//! Every count here is the definition executed literally: walk the
//! permutations of `S_n` (optionally those with a fixed prefix) in
//! lexicographic order and test each against every member of the family with
//! the backtracking matcher. The recurrences and series are checked against
//! it.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::families::PatternFamily;
use crate::perm::next_permutation;
use crate::sequence::CountSequence;

pub const DEFAULT_CEILING: usize = 9;
/// Hard upper bound for an overridden ceiling.
pub const MAX_CEILING: usize = 16;

/// Brute-force counter with a runtime guard on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    ceiling: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_ceiling(ceiling: usize) -> Result<Self> {
        if ceiling > MAX_CEILING {
            return Err(Error::InvalidParams(format!(
                "ceiling {ceiling} exceeds the hard limit {MAX_CEILING}"
            )));
        }
        Ok(Oracle { ceiling })
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.ceiling {
            Err(Error::CeilingExceeded {
                n,
                ceiling: self.ceiling,
            })
        } else {
            Ok(())
        }
    }

    /// `|{pi in S_n : pi avoids every member of fam}|`.
    pub fn count(&self, fam: &PatternFamily, n: usize) -> Result<BigUint> {
        self.refined(fam, n, &[])
    }

    /// Avoiders in `S_n` whose first letters equal `prefix`.
    pub fn refined(&self, fam: &PatternFamily, n: usize, prefix: &[u8]) -> Result<BigUint> {
        self.check(n)?;
        Ok(BigUint::from(count_avoiders(fam, n, prefix)?))
    }

    /// Counts for `n = 0..=n_max`.
    pub fn sequence(&self, fam: &PatternFamily, n_max: usize) -> Result<CountSequence> {
        self.check(n_max)?;
        (0..=n_max)
            .map(|n| self.count(fam, n))
            .collect::<Result<Vec<_>>>()
            .map(CountSequence::new)
    }
}

pub fn brute_force_count(fam: &PatternFamily, n: usize) -> Result<BigUint> {
    Oracle::default().count(fam, n)
}

pub fn brute_force_refined(fam: &PatternFamily, n: usize, prefix: &[u8]) -> Result<BigUint> {
    Oracle::default().refined(fam, n, prefix)
}

pub fn brute_force_sequence(fam: &PatternFamily, n_max: usize) -> Result<CountSequence> {
    Oracle::default().sequence(fam, n_max)
}

/// Checks that `prefix` is a list of distinct letters from `1..=n`.
pub fn validate_prefix(n: usize, prefix: &[u8]) -> Result<()> {
    if prefix.len() > n {
        return Err(Error::InvalidPrefix(format!(
            "prefix {prefix:?} is longer than n = {n}"
        )));
    }
    let mut seen = alloc::vec![false; n + 1];
    for &v in prefix {
        let v = v as usize;
        if v == 0 || v > n {
            return Err(Error::InvalidPrefix(format!(
                "letter {v} in {prefix:?} is outside 1..={n}"
            )));
        }
        if seen[v] {
            return Err(Error::InvalidPrefix(format!(
                "letter {v} repeats in {prefix:?}"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Calls `visit` with every permutation of `S_n` starting with `prefix`, in
/// lexicographic order. No ceiling is applied.
pub fn for_each_with_prefix(n: usize, prefix: &[u8], mut visit: impl FnMut(&[u8])) -> Result<()> {
    validate_prefix(n, prefix)?;
    let mut word: Vec<u8> = prefix.to_vec();
    word.extend((1..=n as u8).filter(|v| !prefix.contains(v)));
    let fixed = prefix.len();
    loop {
        visit(&word);
        if !next_permutation(&mut word[fixed..]) {
            break;
        }
    }
    Ok(())
}

/// Calls `visit` with every avoider of `fam` in `S_n` starting with
/// `prefix`, in lexicographic order. No ceiling is applied.
pub fn for_each_avoider(
    fam: &PatternFamily,
    n: usize,
    prefix: &[u8],
    mut visit: impl FnMut(&[u8]),
) -> Result<()> {
    for_each_with_prefix(n, prefix, |w| {
        if fam.avoided_by(w) {
            visit(w)
        }
    })
}

/// Unguarded avoider count as a machine integer.
pub fn count_avoiders(fam: &PatternFamily, n: usize, prefix: &[u8]) -> Result<u64> {
    let mut total = 0u64;
    for_each_avoider(fam, n, prefix, |_| total += 1)?;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c_family, classical_centralizer_set, p_family, CentralizerReading};

    fn seq(fam: &PatternFamily, n_max: usize) -> Vec<u64> {
        brute_force_sequence(fam, n_max)
            .unwrap()
            .values()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn counts_match_known_sequences() {
        assert_eq!(
            brute_force_count(&c_family(3, 1, 2).unwrap(), 4).unwrap(),
            14u32.into()
        );
        assert_eq!(
            brute_force_count(&p_family(3, 1, 2).unwrap(), 4).unwrap(),
            10u32.into()
        );
        assert_eq!(seq(&c_family(3, 1, 2).unwrap(), 5), [1, 1, 2, 5, 14, 42]);
        assert_eq!(seq(&p_family(3, 1, 2).unwrap(), 5), [1, 1, 2, 4, 10, 26]);
        let t = classical_centralizer_set(4, CentralizerReading::Prefix).unwrap();
        assert_eq!(seq(&t, 5), [1, 1, 2, 6, 22, 90]);
    }

    #[test]
    fn short_permutations_avoid_long_patterns() {
        let fam = c_family(5, 2, 2).unwrap();
        assert_eq!(brute_force_count(&fam, 4).unwrap(), 24u32.into());
    }

    #[test]
    fn refined_examples() {
        let fam = c_family(3, 1, 2).unwrap();
        assert_eq!(brute_force_refined(&fam, 3, &[1]).unwrap(), 1u32.into());
        assert_eq!(brute_force_refined(&fam, 4, &[2]).unwrap(), 3u32.into());
        assert_eq!(
            brute_force_refined(&fam, 5, &[]).unwrap(),
            brute_force_count(&fam, 5).unwrap()
        );
        assert!(matches!(
            brute_force_refined(&fam, 4, &[2, 2]),
            Err(Error::InvalidPrefix(_))
        ));
        assert!(brute_force_refined(&fam, 3, &[4]).is_err());
        assert!(brute_force_refined(&fam, 1, &[1, 2]).is_err());
    }

    #[test]
    fn first_letter_partition() {
        let fam = p_family(4, 1, 2).unwrap();
        for n in 1..=7 {
            let total: BigUint = (1..=n as u8)
                .map(|i| brute_force_refined(&fam, n, &[i]).unwrap())
                .sum();
            assert_eq!(total, brute_force_count(&fam, n).unwrap());
        }
    }

    #[test]
    fn ceiling_guard() {
        let fam = c_family(3, 1, 2).unwrap();
        assert_eq!(
            brute_force_count(&fam, 10),
            Err(Error::CeilingExceeded { n: 10, ceiling: 9 })
        );
        assert!(Oracle::with_ceiling(10)
            .unwrap()
            .refined(&fam, 10, &[1, 2, 3, 4, 5])
            .is_ok());
        assert!(Oracle::with_ceiling(MAX_CEILING + 1).is_err());
    }

    #[test]
    fn empty_permutation_counts_once() {
        let fam = c_family(3, 1, 1).unwrap();
        assert_eq!(brute_force_count(&fam, 0).unwrap(), 1u32.into());
    }
}
