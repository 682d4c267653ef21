//! Counting a family by brute force, by recurrence or from a generating function.

use clap::ValueEnum;
use gpav_core::gf::{c_ogf_counts, centralizer_ogf, p_egf_counts, parabolic_ogf, EgfExponent};
use gpav_core::{c_sequence, p_sequence, CountSequence, FamilySource, Kind, PatternFamily};
use num_bigint::BigUint;

use crate::error::{CliError, Result};
use crate::sweep::Sweeper;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Recurrence,
    Series,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Oracle, Method::Recurrence, Method::Series];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Recurrence => "recurrence",
            Method::Series => "series",
        }
    }
}

pub fn applicable(method: Method, fam: &PatternFamily) -> bool {
    match (method, fam.source()) {
        (Method::Oracle, _) => true,
        (Method::Recurrence, FamilySource::Generalized(_)) => true,
        (Method::Series, FamilySource::Generalized(p)) => p.kind() == Kind::P || p.l() >= 2,
        (Method::Series, FamilySource::ClassicalCentralizer { .. }) => true,
        (Method::Series, FamilySource::ClassicalParabolic { .. }) => true,
        _ => false,
    }
}

/// Recurrence when there is one, then series, then brute force.
pub fn default_method(fam: &PatternFamily) -> Method {
    [Method::Recurrence, Method::Series]
        .into_iter()
        .find(|m| applicable(*m, fam))
        .unwrap_or(Method::Oracle)
}

pub fn sequence(
    method: Method,
    fam: &PatternFamily,
    n_max: usize,
    sweeper: &Sweeper,
) -> Result<CountSequence> {
    if !applicable(method, fam) {
        return Err(CliError::Usage(format!(
            "method {} does not apply to a {} family",
            method.name(),
            fam.source().kind_name()
        )));
    }
    let seq = match (method, fam.source()) {
        (Method::Oracle, _) => sweeper.sequence(fam, n_max)?,
        (Method::Recurrence, FamilySource::Generalized(p)) => match p.kind() {
            Kind::C => c_sequence(p, n_max)?,
            Kind::P => p_sequence(p, n_max)?,
        },
        (Method::Series, FamilySource::Generalized(p)) => match p.kind() {
            Kind::C => c_ogf_counts(p, n_max)?,
            Kind::P => p_egf_counts(p.k(), p.l(), n_max, EgfExponent::KMinusL)?,
        },
        (Method::Series, FamilySource::ClassicalCentralizer { k, .. }) => {
            CountSequence::new(centralizer_ogf(*k, n_max)?.count_coeffs()?)
        }
        (Method::Series, FamilySource::ClassicalParabolic { l, m, .. }) => {
            CountSequence::new(parabolic_ogf(*l, *m, n_max)?.count_coeffs()?)
        }
        _ => unreachable!("checked by applicable"),
    };
    Ok(seq)
}

pub fn count(method: Method, fam: &PatternFamily, n: usize, sweeper: &Sweeper) -> Result<BigUint> {
    if method == Method::Oracle {
        return sweeper.count(fam, n);
    }
    let seq = sequence(method, fam, n, sweeper)?;
    Ok(seq[n].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gpav_core::{
        c_family, classical_centralizer_set, classical_parabolic_set, p_family, CentralizerReading,
    };

    #[test]
    fn every_applicable_method_agrees() {
        let sweeper = Sweeper::new(9, Some(1)).unwrap();
        let fams = [
            c_family(3, 1, 2).unwrap(),
            c_family(4, 2, 1).unwrap(),
            p_family(4, 1, 3).unwrap(),
            classical_centralizer_set(4, CentralizerReading::Prefix).unwrap(),
            classical_parabolic_set(2, 1, 2).unwrap(),
            PatternFamily::explicit(vec!["2-13".parse().unwrap()]).unwrap(),
        ];
        for fam in &fams {
            let oracle = sequence(Method::Oracle, fam, 7, &sweeper).unwrap();
            for m in Method::ALL.into_iter().filter(|m| applicable(*m, fam)) {
                assert_eq!(
                    sequence(m, fam, 7, &sweeper).unwrap(),
                    oracle,
                    "{m:?} {:?}",
                    fam.source()
                );
            }
        }
    }

    #[test]
    fn dispatch_rules() {
        let c1 = c_family(3, 1, 1).unwrap();
        assert!(!applicable(Method::Series, &c1));
        assert_eq!(default_method(&c1), Method::Recurrence);
        let ex = PatternFamily::explicit(vec!["1-23".parse().unwrap()]).unwrap();
        assert_eq!(default_method(&ex), Method::Oracle);
        let sweeper = Sweeper::new(9, Some(1)).unwrap();
        assert_eq!(
            sequence(Method::Series, &c1, 4, &sweeper)
                .unwrap_err()
                .exit_code(),
            2
        );
        assert_eq!(
            count(Method::Series, &c_family(3, 1, 2).unwrap(), 0, &sweeper).unwrap(),
            1u32.into()
        );
    }
}
