//! Turning command-line flags into a pattern family.

use clap::{Args, ValueEnum};
use gpav_core::{
    classical_centralizer_set, classical_parabolic_set, parse_pattern, CentralizerReading,
    FamilyParams, Kind, PatternFamily,
};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    #[value(name = "C")]
    C,
    #[value(name = "P")]
    P,
    /// Classical patterns starting `k-1, k`.
    #[value(alias = "classical-centralizer")]
    Centralizer,
    /// Classical patterns whose first block is a permutation of `a..a+l-1`.
    #[value(alias = "classical-parabolic")]
    Parabolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Prefix,
    Stabilizer,
}

impl From<Reading> for CentralizerReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Prefix => CentralizerReading::Prefix,
            Reading::Stabilizer => CentralizerReading::Stabilizer,
        }
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct FamilySpec {
    /// Family to build from parameters.
    #[arg(long, value_enum, ignore_case = true)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Second block length of the parabolic family.
    #[arg(long)]
    pub m: Option<usize>,
    /// Interpretation of the centralizer family.
    #[arg(long, value_enum)]
    pub reading: Option<Reading>,
    /// Explicit patterns in dash notation; repeat or separate with commas.
    #[arg(long = "pattern", value_delimiter = ',', conflicts_with = "family")]
    pub patterns: Vec<String>,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for family {family}")))
}

impl FamilySpec {
    pub fn resolve(&self) -> Result<PatternFamily> {
        let Some(kind) = self.family else {
            if self.patterns.is_empty() {
                return Err(CliError::Usage(
                    "give --family or at least one --pattern".into(),
                ));
            }
            let pats = self
                .patterns
                .iter()
                .map(|s| parse_pattern(s.trim()))
                .collect::<gpav_core::Result<Vec<_>>>()?;
            return Ok(PatternFamily::explicit(pats)?);
        };
        let fam = match kind {
            FamilyKind::C | FamilyKind::P => {
                let name = if kind == FamilyKind::C { "C" } else { "P" };
                let k = need(self.k, "k", name)?;
                let a = need(self.a, "a", name)?;
                let l = need(self.l, "l", name)?;
                let kind = if kind == FamilyKind::C {
                    Kind::C
                } else {
                    Kind::P
                };
                FamilyParams::new(kind, k, a, l)?.family()
            }
            FamilyKind::Centralizer => {
                let k = need(self.k, "k", "centralizer")?;
                let reading = self.reading.unwrap_or(Reading::Prefix);
                classical_centralizer_set(k, reading.into())?
            }
            FamilyKind::Parabolic => {
                let l = need(self.l, "l", "parabolic")?;
                let m = need(self.m, "m", "parabolic")?;
                let a = need(self.a, "a", "parabolic")?;
                classical_parabolic_set(l, m, a)?
            }
        };
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolution() {
        let spec = FamilySpec {
            family: Some(FamilyKind::C),
            k: Some(4),
            a: Some(1),
            l: Some(2),
            ..Default::default()
        };
        assert_eq!(spec.resolve().unwrap().len(), 2);
        let missing = FamilySpec {
            family: Some(FamilyKind::P),
            k: Some(4),
            ..Default::default()
        };
        assert_eq!(missing.resolve().unwrap_err().exit_code(), 2);
        let explicit = FamilySpec {
            patterns: vec!["1-23".into(), "1-32".into()],
            ..Default::default()
        };
        assert_eq!(explicit.resolve().unwrap().len(), 2);
        assert!(FamilySpec::default().resolve().is_err());
    }
}
