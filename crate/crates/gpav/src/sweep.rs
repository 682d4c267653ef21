//! Parallel brute-force counting.
//!
//! Work is split by the letter that follows the requested prefix; each chunk
//! is counted by the serial oracle and the partial counts are added. The sum
//! does not depend on the number of workers or on scheduling.

use gpav_core::oracle::{count_avoiders, validate_prefix};
use gpav_core::{CountSequence, Error, Oracle, PatternFamily};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::Result;

pub struct Sweeper {
    oracle: Oracle,
    pool: rayon::ThreadPool,
}

impl Sweeper {
    /// `jobs = None` uses one worker per available core.
    pub fn new(ceiling: usize, jobs: Option<usize>) -> Result<Self> {
        let oracle = Oracle::with_ceiling(ceiling)?;
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = jobs {
            builder = builder.num_threads(j.max(1));
        }
        Ok(Sweeper {
            oracle,
            pool: builder.build()?,
        })
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.oracle.ceiling() {
            return Err(Error::CeilingExceeded {
                n,
                ceiling: self.oracle.ceiling(),
            }
            .into());
        }
        Ok(())
    }

    pub fn count(&self, fam: &PatternFamily, n: usize) -> Result<BigUint> {
        self.refined(fam, n, &[])
    }

    pub fn refined(&self, fam: &PatternFamily, n: usize, prefix: &[u8]) -> Result<BigUint> {
        self.check(n)?;
        validate_prefix(n, prefix)?;
        if prefix.len() == n {
            return Ok(BigUint::from(count_avoiders(fam, n, prefix)?));
        }
        let chunks: Vec<Vec<u8>> = (1..=n as u8)
            .filter(|v| !prefix.contains(v))
            .map(|v| {
                let mut p = prefix.to_vec();
                p.push(v);
                p
            })
            .collect();
        let total = self.pool.install(|| {
            chunks
                .par_iter()
                .map(|p| count_avoiders(fam, n, p))
                .try_reduce(|| 0u64, |a, b| Ok(a + b))
        })?;
        Ok(BigUint::from(total))
    }

    /// Avoider counts indexed by first letter; entry 0 is unused.
    pub fn first_letter_profile(&self, fam: &PatternFamily, n: usize) -> Result<Vec<BigUint>> {
        self.check(n)?;
        let counts: Vec<u64> = self.pool.install(|| {
            (1..=n as u8)
                .into_par_iter()
                .map(|v| count_avoiders(fam, n, &[v]))
                .collect::<std::result::Result<_, _>>()
        })?;
        let mut out = vec![BigUint::from(0u32)];
        out.extend(counts.into_iter().map(BigUint::from));
        Ok(out)
    }

    pub fn sequence(&self, fam: &PatternFamily, n_max: usize) -> Result<CountSequence> {
        self.check(n_max)?;
        (0..=n_max)
            .map(|n| self.count(fam, n))
            .collect::<Result<Vec<_>>>()
            .map(CountSequence::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gpav_core::{brute_force_sequence, c_family, p_family};

    #[test]
    fn matches_serial_oracle_for_any_job_count() {
        let fam = p_family(4, 2, 2).unwrap();
        let serial = brute_force_sequence(&fam, 7).unwrap();
        for jobs in [1, 2, 3] {
            let sweeper = Sweeper::new(9, Some(jobs)).unwrap();
            assert_eq!(sweeper.sequence(&fam, 7).unwrap(), serial);
        }
    }

    #[test]
    fn profile_sums_to_total() {
        let fam = c_family(4, 1, 2).unwrap();
        let sweeper = Sweeper::new(9, Some(2)).unwrap();
        let profile = sweeper.first_letter_profile(&fam, 6).unwrap();
        let total: BigUint = profile.iter().sum();
        assert_eq!(total, sweeper.count(&fam, 6).unwrap());
        assert_eq!(sweeper.refined(&fam, 6, &[3]).unwrap(), profile[3]);
    }

    #[test]
    fn guards() {
        let fam = c_family(3, 1, 2).unwrap();
        let sweeper = Sweeper::new(6, Some(1)).unwrap();
        assert!(sweeper.count(&fam, 7).is_err());
        assert!(sweeper.refined(&fam, 4, &[1, 1]).is_err());
        assert_eq!(sweeper.count(&fam, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(
            sweeper.refined(&fam, 3, &[2, 3, 1]).unwrap(),
            BigUint::from(1u32)
        );
    }
}
