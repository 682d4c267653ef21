//! Big-integer sequence engines.
//!
//! For both families the first `k` terms are `n!`: a permutation shorter
//! than the patterns cannot contain one. From `n = k` on,
//!
//! ```text
//! c(n) = (k-l-1) c(n-1)
//!      + sum_{j=0}^{floor((n-k)/l)+1} (-1)^j C(n-k+2-(j-1)(l-1), j+1) c(n-1-j)
//!
//! p(n) = (k-l) sum_{j=0}^{l-1} j! C(n-k+l, j) p(n-1-j)
//! ```
//!
//! Neither formula reads the anchor `a`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{FamilyParams, Kind};
use crate::sequence::CountSequence;

/// `C(n, j)` with `C(n, j) = 0` for `j < 0` or `j > n`. A negative `n` is an
/// error rather than the generalized binomial.
pub fn binomial(n: i64, j: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::NegativeBinomial { top: n, bottom: j });
    }
    if j < 0 || j > n {
        return Ok(BigUint::zero());
    }
    let j = j.min(n - j) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..j {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, v| acc * v)
}

fn signed(value: BigUint, negative: bool) -> BigInt {
    BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, value)
}

fn to_count(index: usize, value: BigInt) -> Result<BigUint> {
    value.to_biguint().ok_or_else(|| Error::NotACount {
        index,
        value: format!("{value}"),
    })
}

fn require(params: &FamilyParams, kind: Kind) -> Result<()> {
    if params.kind() != kind {
        return Err(Error::InvalidParams(format!(
            "{params} is not a {kind} family"
        )));
    }
    Ok(())
}

/// Avoider counts for the `C` family, `n = 0..=n_max`.
pub fn c_sequence(params: &FamilyParams, n_max: usize) -> Result<CountSequence> {
    require(params, Kind::C)?;
    let (k, l) = (params.k(), params.l());
    let mut values: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n < k {
            values.push(factorial(n));
            continue;
        }
        let mut acc = BigInt::from(k - l - 1) * BigInt::from(values[n - 1].clone());
        for j in 0..=(n - k) / l + 1 {
            let top = (n - k + 2) as i64 - (j as i64 - 1) * (l as i64 - 1);
            let term = binomial(top, j as i64 + 1)? * &values[n - 1 - j];
            acc += signed(term, j % 2 == 1);
        }
        values.push(to_count(n, acc)?);
    }
    Ok(CountSequence::new(values))
}

/// Avoiders of the `C` family in `S_n` that start with `n - k + a + 1 - i`,
/// for `1 <= i <= n - k + 1`.
pub fn refined_c_boundary(params: &FamilyParams, n: usize, i: usize) -> Result<BigUint> {
    require(params, Kind::C)?;
    let (k, l) = (params.k(), params.l());
    if n < k {
        return Err(Error::InvalidParams(format!("n = {n}: need n >= k = {k}")));
    }
    if i < 1 || i > n - k + 1 {
        return Err(Error::InvalidParams(format!(
            "i = {i}: need 1 <= i <= n - k + 1 = {}",
            n - k + 1
        )));
    }
    let c = c_sequence(params, n - 1)?;
    boundary_from_sequence(&c, l, n, i)
}

fn boundary_from_sequence(c: &CountSequence, l: usize, n: usize, i: usize) -> Result<BigUint> {
    let mut acc = BigInt::zero();
    for j in 0..=(i - 1) / l + 1 {
        let top = i as i64 - (j as i64 - 1) * (l as i64 - 1);
        let term = binomial(top, j as i64)? * &c[n - 1 - j];
        acc += signed(term, j % 2 == 1);
    }
    to_count(n, acc)
}

/// All boundary refined counts `i = 1..=n-k+1` for one `n`, sharing one
/// sequence computation.
pub fn refined_c_boundaries(params: &FamilyParams, n: usize) -> Result<Vec<BigUint>> {
    require(params, Kind::C)?;
    let (k, l) = (params.k(), params.l());
    if n < k {
        return Err(Error::InvalidParams(format!("n = {n}: need n >= k = {k}")));
    }
    let c = c_sequence(params, n - 1)?;
    (1..=n - k + 1)
        .map(|i| boundary_from_sequence(&c, l, n, i))
        .collect()
}

/// Avoider counts for the `P` family, `n = 0..=n_max`.
pub fn p_sequence(params: &FamilyParams, n_max: usize) -> Result<CountSequence> {
    require(params, Kind::P)?;
    let (k, l) = (params.k(), params.l());
    let mut values: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n < k {
            values.push(factorial(n));
            continue;
        }
        let mut acc = BigUint::zero();
        for j in 0..l {
            acc += factorial(j) * binomial((n - k + l) as i64, j as i64)? * &values[n - 1 - j];
        }
        values.push(acc * (k - l));
    }
    Ok(CountSequence::new(values))
}

/// `(k-2)! (k-1)^(n-k+2)`, the `P` count for `l = 1` and `n >= k - 1`.
pub fn p_closed_form_l1(k: usize, n: usize) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("k = {k}: need k >= 3")));
    }
    if n + 1 < k {
        return Err(Error::InvalidParams(format!(
            "n = {n}: closed form needs n >= k - 1 = {}",
            k - 1
        )));
    }
    Ok(factorial(k - 2) * BigUint::from(k - 1).pow((n + 2 - k) as u32))
}

/// Sequences computed from their own recurrences, for cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reference {
    Catalan,
    Bell,
    Motzkin,
    Involutions,
}

impl Reference {
    pub const ALL: [Reference; 4] = [
        Reference::Catalan,
        Reference::Bell,
        Reference::Motzkin,
        Reference::Involutions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Reference::Catalan => "catalan",
            Reference::Bell => "bell",
            Reference::Motzkin => "motzkin",
            Reference::Involutions => "involutions",
        }
    }
}

impl fmt::Display for Reference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Reference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Reference::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown reference sequence {s:?}")))
    }
}

pub fn reference_sequence(name: Reference, n_max: usize) -> CountSequence {
    let values = match name {
        Reference::Catalan => (0..=n_max)
            .map(|n| {
                binomial(2 * n as i64, n as i64).expect("nonnegative top") / BigUint::from(n + 1)
            })
            .collect(),
        Reference::Bell => bell(n_max),
        Reference::Motzkin => {
            let mut m: Vec<BigUint> = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let next = if n < 2 {
                    BigUint::one()
                } else {
                    let conv: BigUint = (0..=n - 2).map(|i| &m[i] * &m[n - 2 - i]).sum();
                    &m[n - 1] + conv
                };
                m.push(next);
            }
            m
        }
        Reference::Involutions => {
            let mut v: Vec<BigUint> = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let next = if n < 2 {
                    BigUint::one()
                } else {
                    &v[n - 1] + &v[n - 2] * (n - 1)
                };
                v.push(next);
            }
            v
        }
    };
    CountSequence::new(values)
}

// Bell triangle: each row starts with the last entry of the previous row and
// each later entry adds its left neighbour to the entry above that neighbour.
fn bell(n_max: usize) -> Vec<BigUint> {
    let mut out = alloc::vec![BigUint::one()];
    let mut row = alloc::vec![BigUint::one()];
    for _ in 1..=n_max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty row").clone());
        for (j, above) in row.iter().enumerate() {
            let value = &next[j] + above;
            next.push(value);
        }
        out.push(row.last().expect("nonempty row").clone());
        row = next;
    }
    out.truncate(n_max + 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u64s(seq: &CountSequence) -> Vec<u64> {
        seq.values()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2).unwrap(), 10u32.into());
        assert_eq!(binomial(0, 0).unwrap(), 1u32.into());
        assert_eq!(binomial(3, 4).unwrap(), BigUint::zero());
        assert_eq!(binomial(3, -1).unwrap(), BigUint::zero());
        assert_eq!(
            binomial(-1, 0),
            Err(Error::NegativeBinomial { top: -1, bottom: 0 })
        );
        for n in 1..20 {
            for j in 1..=n {
                assert_eq!(
                    binomial(n, j).unwrap(),
                    binomial(n - 1, j - 1).unwrap() + binomial(n - 1, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn c_sequence_examples() {
        let c = |k, a, l| FamilyParams::c(k, a, l).unwrap();
        assert_eq!(
            u64s(&c_sequence(&c(3, 1, 2), 5).unwrap()),
            [1, 1, 2, 5, 14, 42]
        );
        assert_eq!(
            u64s(&c_sequence(&c(3, 1, 1), 5).unwrap()),
            [1, 1, 2, 5, 15, 52]
        );
        assert_eq!(c_sequence(&c(4, 1, 2), 4).unwrap()[3], 6u32.into());
        assert!(c_sequence(&FamilyParams::p(3, 1, 2).unwrap(), 4).is_err());
    }

    #[test]
    fn boundary_examples() {
        let params = FamilyParams::c(3, 1, 2).unwrap();
        assert_eq!(refined_c_boundary(&params, 4, 1).unwrap(), 3u32.into());
        // starts with n - k + a + 1 - 2 = 1: avoiders of 13-2 beginning with 1
        assert_eq!(refined_c_boundary(&params, 4, 2).unwrap(), 1u32.into());
        assert!(refined_c_boundary(&params, 4, 3).is_err());
        assert!(refined_c_boundary(&params, 2, 1).is_err());
        let all = refined_c_boundaries(&params, 4).unwrap();
        assert_eq!(all, [BigUint::from(3u32), BigUint::from(1u32)]);
    }

    #[test]
    fn boundary_first_term_is_a_difference() {
        for params in FamilyParams::all(Kind::C, 6) {
            for n in params.k()..=12 {
                let c = c_sequence(&params, n).unwrap();
                assert_eq!(
                    refined_c_boundary(&params, n, 1).unwrap(),
                    &c[n - 1] - &c[n - 2],
                    "{params} n={n}"
                );
            }
        }
    }

    #[test]
    fn p_sequence_examples() {
        let p = |k, a, l| FamilyParams::p(k, a, l).unwrap();
        assert_eq!(
            u64s(&p_sequence(&p(3, 1, 1), 6).unwrap()),
            [1, 1, 2, 4, 8, 16, 32]
        );
        assert_eq!(
            u64s(&p_sequence(&p(3, 1, 2), 6).unwrap()),
            [1, 1, 2, 4, 10, 26, 76]
        );
        assert_eq!(p_sequence(&p(4, 1, 2), 4).unwrap()[4], 20u32.into());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(p_closed_form_l1(3, 2).unwrap(), 2u32.into());
        assert_eq!(p_closed_form_l1(4, 4).unwrap(), 18u32.into());
        assert_eq!(p_closed_form_l1(4, 4).unwrap(), factorial(4) - factorial(3));
        assert_eq!(p_closed_form_l1(4, 6).unwrap(), 162u32.into());
        assert!(p_closed_form_l1(4, 2).is_err());
        assert!(p_closed_form_l1(2, 4).is_err());
    }

    #[test]
    fn reference_sequences() {
        let r = |name, n| u64s(&reference_sequence(name, n));
        assert_eq!(r(Reference::Catalan, 5), [1, 1, 2, 5, 14, 42]);
        assert_eq!(r(Reference::Involutions, 5), [1, 1, 2, 4, 10, 26]);
        assert_eq!(r(Reference::Bell, 6), [1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(r(Reference::Motzkin, 7), [1, 1, 2, 4, 9, 21, 51, 127]);
        assert_eq!(r(Reference::Bell, 0), [1]);
        assert_eq!("bell".parse::<Reference>().unwrap(), Reference::Bell);
        assert!("fibonacci".parse::<Reference>().is_err());
    }

    #[test]
    fn sequences_outgrow_machine_words() {
        let params = FamilyParams::c(5, 1, 2).unwrap();
        let c = c_sequence(&params, 40).unwrap();
        assert!(c[40].bits() > 64);
        assert_eq!(c[4], factorial(4));
    }
}
