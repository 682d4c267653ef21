//! Constructors for the pattern families being counted.
//!
//! `C(k, a, l)` holds every pattern `s1 s2-s3-...-sk` over `1..=k` whose
//! adjacent opening pair is `(a, a + l)`; there are `(k - 2)!` of them.
//! `P(k, a, l)` holds every pattern whose opening block of length `l` is a
//! rearrangement of `a..a + l` followed by the other `k - l` letters as
//! singletons; there are `l! (k - l)!` of them. The two classical sets are
//! the all-dash counterparts: patterns starting `k-1, k`, and patterns whose
//! first `l` letters are `a..a + l` inside `S_{l+m}`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{next_permutation, GeneralizedPattern, MAX_PATTERN_LEN};

/// The two parameterized generalized-pattern families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    C,
    P,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::C => "C",
            Kind::P => "P",
        })
    }
}

/// Validated `(kind, k, a, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    kind: Kind,
    k: usize,
    a: usize,
    l: usize,
}

impl FamilyParams {
    pub fn new(kind: Kind, k: usize, a: usize, l: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParams(format!("k = {k}: need k >= 3")));
        }
        if k > MAX_PATTERN_LEN {
            return Err(Error::InvalidParams(format!(
                "k = {k}: patterns longer than {MAX_PATTERN_LEN} are not supported"
            )));
        }
        if a < 1 {
            return Err(Error::InvalidParams(format!("a = {a}: need a >= 1")));
        }
        match kind {
            Kind::C => {
                if l < 1 {
                    return Err(Error::InvalidParams(format!("l = {l}: need l >= 1")));
                }
                if a + l > k {
                    return Err(Error::InvalidParams(format!(
                        "a + l = {} exceeds k = {k}",
                        a + l
                    )));
                }
            }
            Kind::P => {
                if l < 1 || l > k - 1 {
                    return Err(Error::InvalidParams(format!(
                        "l = {l}: need 1 <= l <= k - 1 = {}",
                        k - 1
                    )));
                }
                if a + l - 1 > k {
                    return Err(Error::InvalidParams(format!(
                        "a + l - 1 = {} exceeds k = {k}",
                        a + l - 1
                    )));
                }
            }
        }
        Ok(FamilyParams { kind, k, a, l })
    }

    pub fn c(k: usize, a: usize, l: usize) -> Result<Self> {
        Self::new(Kind::C, k, a, l)
    }

    pub fn p(k: usize, a: usize, l: usize) -> Result<Self> {
        Self::new(Kind::P, k, a, l)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Every valid anchor `a` for this kind, `k` and `l`.
    pub fn anchors(kind: Kind, k: usize, l: usize) -> core::ops::RangeInclusive<usize> {
        match kind {
            Kind::C => 1..=k.saturating_sub(l),
            Kind::P => 1..=(k + 1).saturating_sub(l),
        }
    }

    /// All valid parameter triples with `3 <= k <= k_max`, ordered by
    /// `(k, l, a)`.
    pub fn all(kind: Kind, k_max: usize) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for k in 3..=k_max.min(MAX_PATTERN_LEN) {
            for l in 1..k {
                for a in Self::anchors(kind, k, l) {
                    if let Ok(p) = Self::new(kind, k, a, l) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    pub fn family(&self) -> PatternFamily {
        match self.kind {
            Kind::C => build_c(self.k, self.a, self.l),
            Kind::P => build_p(self.k, self.a, self.l),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={}, a={}, l={})", self.kind, self.k, self.a, self.l)
    }
}

/// Which prefix-fixing set stands in for "the centralizer of k-1 and k".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralizerReading {
    /// `{pi in S_k : pi_1 = k-1, pi_2 = k}`.
    Prefix,
    /// `{pi in S_k : pi_{k-1} = k-1, pi_k = k}`.
    Stabilizer,
}

impl fmt::Display for CentralizerReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CentralizerReading::Prefix => "prefix",
            CentralizerReading::Stabilizer => "stabilizer",
        })
    }
}

/// Where a family came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySource {
    Generalized(FamilyParams),
    ClassicalCentralizer {
        k: usize,
        reading: CentralizerReading,
    },
    ClassicalParabolic {
        l: usize,
        m: usize,
        a: usize,
    },
    Explicit,
}

impl FamilySource {
    /// Kind tag used in serialized output.
    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySource::Generalized(p) => match p.kind() {
                Kind::C => "C",
                Kind::P => "P",
            },
            FamilySource::ClassicalCentralizer { .. } => "classical-centralizer",
            FamilySource::ClassicalParabolic { .. } => "classical-parabolic",
            FamilySource::Explicit => "explicit",
        }
    }
}

/// A finite set of patterns of one common length, kept sorted by their
/// dash notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternFamily {
    source: FamilySource,
    patterns: Vec<GeneralizedPattern>,
}

impl PatternFamily {
    /// A family from a user-supplied list. Patterns must share one length and
    /// be pairwise distinct.
    pub fn explicit(patterns: Vec<GeneralizedPattern>) -> Result<Self> {
        if let Some(first) = patterns.first() {
            if let Some(odd) = patterns.iter().find(|p| p.len() != first.len()) {
                return Err(Error::InvalidParams(format!(
                    "patterns {first} and {odd} have different lengths"
                )));
            }
        }
        let family = Self::from_parts(FamilySource::Explicit, patterns);
        if let Some(w) = family.patterns.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams(format!("duplicate pattern {}", w[0])));
        }
        Ok(family)
    }

    fn from_parts(source: FamilySource, mut patterns: Vec<GeneralizedPattern>) -> Self {
        patterns.sort_by_cached_key(|p| format!("{p}"));
        PatternFamily { source, patterns }
    }

    pub fn source(&self) -> &FamilySource {
        &self.source
    }

    pub fn patterns(&self) -> &[GeneralizedPattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Common pattern length; `None` for the empty family.
    pub fn pattern_len(&self) -> Option<usize> {
        self.patterns.first().map(GeneralizedPattern::len)
    }

    /// True when no member occurs in `text`.
    pub fn avoided_by(&self, text: &[u8]) -> bool {
        !self.patterns.iter().any(|p| p.occurs_in(text))
    }
}

pub fn avoids_all(fam: &PatternFamily, pi: &crate::perm::Permutation) -> bool {
    fam.avoided_by(pi.as_slice())
}

// Calls `f` with every arrangement of `values` in lexicographic order.
fn for_each_arrangement(mut values: Vec<u8>, mut f: impl FnMut(&[u8])) {
    values.sort_unstable();
    loop {
        f(&values);
        if !next_permutation(&mut values) {
            break;
        }
    }
}

fn complement(k: usize, taken: &[u8]) -> Vec<u8> {
    (1..=k as u8).filter(|v| !taken.contains(v)).collect()
}

// Every pattern `head ++ tail'` where `head'` ranges over arrangements of
// `head` (when `permute_head`) and `tail'` over arrangements of the rest.
fn prefixed_family(
    k: usize,
    head: Vec<u8>,
    permute_head: bool,
    head_block: bool,
) -> Vec<GeneralizedPattern> {
    let tail = complement(k, &head);
    let heads = if permute_head {
        let mut hs = Vec::new();
        for_each_arrangement(head.clone(), |h| hs.push(h.to_vec()));
        hs
    } else {
        alloc::vec![head.clone()]
    };
    let mut lengths = Vec::new();
    if head_block {
        lengths.push(head.len());
        lengths.extend(core::iter::repeat_n(1, tail.len()));
    } else {
        lengths.extend(core::iter::repeat_n(1, k));
    }
    let mut out = Vec::new();
    for h in heads {
        for_each_arrangement(tail.clone(), |t| {
            let mut word = h.clone();
            word.extend_from_slice(t);
            out.push(
                GeneralizedPattern::with_block_lengths(word, &lengths)
                    .expect("constructed words are permutations"),
            );
        });
    }
    out
}

fn build_c(k: usize, a: usize, l: usize) -> PatternFamily {
    let head = alloc::vec![a as u8, (a + l) as u8];
    let patterns = prefixed_family(k, head, false, true);
    PatternFamily::from_parts(
        FamilySource::Generalized(FamilyParams {
            kind: Kind::C,
            k,
            a,
            l,
        }),
        patterns,
    )
}

fn build_p(k: usize, a: usize, l: usize) -> PatternFamily {
    let head: Vec<u8> = (a..a + l).map(|v| v as u8).collect();
    let patterns = prefixed_family(k, head, true, true);
    PatternFamily::from_parts(
        FamilySource::Generalized(FamilyParams {
            kind: Kind::P,
            k,
            a,
            l,
        }),
        patterns,
    )
}

pub fn c_family(k: usize, a: usize, l: usize) -> Result<PatternFamily> {
    Ok(FamilyParams::c(k, a, l)?.family())
}

pub fn p_family(k: usize, a: usize, l: usize) -> Result<PatternFamily> {
    Ok(FamilyParams::p(k, a, l)?.family())
}

/// Classical patterns of length `k` fixing `k-1` and `k` in the positions
/// chosen by `reading`.
pub fn classical_centralizer_set(k: usize, reading: CentralizerReading) -> Result<PatternFamily> {
    if !(3..=MAX_PATTERN_LEN).contains(&k) {
        return Err(Error::InvalidParams(format!(
            "k = {k}: need 3 <= k <= {MAX_PATTERN_LEN}"
        )));
    }
    let pair = [(k - 1) as u8, k as u8];
    let patterns = match reading {
        CentralizerReading::Prefix => prefixed_family(k, pair.to_vec(), false, false),
        CentralizerReading::Stabilizer => {
            let mut out = Vec::new();
            for_each_arrangement(complement(k, &pair), |head| {
                let mut word = head.to_vec();
                word.extend_from_slice(&pair);
                out.push(GeneralizedPattern::classical(word).expect("permutation word"));
            });
            out
        }
    };
    Ok(PatternFamily::from_parts(
        FamilySource::ClassicalCentralizer { k, reading },
        patterns,
    ))
}

/// Classical patterns in `S_{l+m}` whose first `l` letters are exactly
/// `a..a + l`.
pub fn classical_parabolic_set(l: usize, m: usize, a: usize) -> Result<PatternFamily> {
    if l < 1 || m < 1 {
        return Err(Error::InvalidParams(format!(
            "l = {l}, m = {m}: need l, m >= 1"
        )));
    }
    if l + m > MAX_PATTERN_LEN {
        return Err(Error::InvalidParams(format!(
            "l + m = {} exceeds {MAX_PATTERN_LEN}",
            l + m
        )));
    }
    if a < 1 || a > m + 1 {
        return Err(Error::InvalidParams(format!(
            "a = {a}: need 1 <= a <= m + 1 = {}",
            m + 1
        )));
    }
    let head: Vec<u8> = (a..a + l).map(|v| v as u8).collect();
    let patterns = prefixed_family(l + m, head, true, false);
    Ok(PatternFamily::from_parts(
        FamilySource::ClassicalParabolic { l, m, a },
        patterns,
    ))
}
