//! Permutations, generalized (dashed) patterns and the occurrence matcher.
//!
//! A generalized pattern is a permutation word of `1..=k` together with
//! `k - 1` adjacency flags. Positions joined by a flag form a block and must
//! be matched by consecutive letters of the permutation; a dash clears the
//! flag. A classical pattern has every flag cleared.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Longest pattern expressible in single-digit notation.
pub const MAX_PATTERN_LEN: usize = 9;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        if !is_rearrangement(&word) {
            return Err(Error::InvalidPermutation(format!(
                "{word:?} is not a rearrangement of 1..={}",
                word.len()
            )));
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "permutation length {n} too large");
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u8> {
        self.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

/// Writes a one-line word: bare digits when every letter is below 10,
/// comma-separated otherwise.
pub fn write_word(f: &mut impl fmt::Write, word: &[u8]) -> fmt::Result {
    let compact = word.iter().all(|&v| v < 10);
    for (i, v) in word.iter().enumerate() {
        if !compact && i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn is_rearrangement(word: &[u8]) -> bool {
    let n = word.len();
    let mut seen = alloc::vec![false; n + 1];
    for &v in word {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// A permutation pattern with adjacency requirements between consecutive
/// positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedPattern {
    word: Vec<u8>,
    // adjacent[t] ties position t to position t + 1.
    adjacent: Vec<bool>,
}

impl GeneralizedPattern {
    pub fn new(word: Vec<u8>, adjacent: Vec<bool>) -> Result<Self> {
        let k = word.len();
        if k == 0 {
            return Err(Error::InvalidPattern(
                "pattern must have at least one letter".into(),
            ));
        }
        if k > MAX_PATTERN_LEN {
            return Err(Error::InvalidPattern(format!(
                "pattern length {k} exceeds {MAX_PATTERN_LEN}"
            )));
        }
        if !is_rearrangement(&word) {
            return Err(Error::InvalidPattern(format!(
                "{word:?} is not a rearrangement of 1..={k}"
            )));
        }
        if adjacent.len() != k - 1 {
            return Err(Error::InvalidPattern(format!(
                "expected {} adjacency flags, got {}",
                k - 1,
                adjacent.len()
            )));
        }
        Ok(GeneralizedPattern { word, adjacent })
    }

    /// Pattern with every position in its own block.
    pub fn classical(word: Vec<u8>) -> Result<Self> {
        let flags = alloc::vec![false; word.len().saturating_sub(1)];
        Self::new(word, flags)
    }

    /// Pattern whose blocks have the given lengths, in order.
    pub fn with_block_lengths(word: Vec<u8>, lengths: &[usize]) -> Result<Self> {
        if lengths.contains(&0) || lengths.iter().sum::<usize>() != word.len() {
            return Err(Error::InvalidPattern(format!(
                "block lengths {lengths:?} do not cover {} positions",
                word.len()
            )));
        }
        let mut flags = Vec::with_capacity(word.len().saturating_sub(1));
        for (b, &len) in lengths.iter().enumerate() {
            flags.extend(core::iter::repeat_n(true, len - 1));
            if b + 1 < lengths.len() {
                flags.push(false);
            }
        }
        Self::new(word, flags)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false; patterns have at least one letter.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn adjacency(&self) -> &[bool] {
        &self.adjacent
    }

    pub fn is_classical(&self) -> bool {
        self.adjacent.iter().all(|&a| !a)
    }

    /// Maximal dash-free runs as zero-based position ranges.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (t, &adj) in self.adjacent.iter().enumerate() {
            if !adj {
                out.push(start..t + 1);
                start = t + 1;
            }
        }
        out.push(start..self.word.len());
        out
    }

    /// True when the pattern has an occurrence in `text`, a word of distinct
    /// letters.
    pub fn occurs_in(&self, text: &[u8]) -> bool {
        self.search(text, 1) > 0
    }

    /// Number of index tuples witnessing an occurrence in `text`.
    pub fn count_occurrences(&self, text: &[u8]) -> u64 {
        self.search(text, u64::MAX)
    }

    // Backtracking over index tuples, stopping once `limit` occurrences are
    // seen. Each new position is compared against every chosen one, so a
    // completed tuple is order-isomorphic to the pattern word.
    fn search(&self, text: &[u8], limit: u64) -> u64 {
        let k = self.word.len();
        let n = text.len();
        if k > n {
            return 0;
        }
        let mut chosen = [0usize; MAX_PATTERN_LEN];
        let mut found = 0;
        self.extend(text, 0, &mut chosen, &mut found, limit);
        found
    }

    fn extend(
        &self,
        text: &[u8],
        t: usize,
        chosen: &mut [usize; MAX_PATTERN_LEN],
        found: &mut u64,
        limit: u64,
    ) {
        let k = self.word.len();
        if t == k {
            *found += 1;
            return;
        }
        let n = text.len();
        // Leave room for the k - t - 1 positions still to place.
        let last = n - (k - t);
        let candidates = if t > 0 && self.adjacent[t - 1] {
            let i = chosen[t - 1] + 1;
            i..(i + 1).min(last + 1)
        } else if t > 0 {
            chosen[t - 1] + 1..last + 1
        } else {
            0..last + 1
        };
        for i in candidates {
            let value = text[i];
            let consistent =
                (0..t).all(|s| (text[chosen[s]] < value) == (self.word[s] < self.word[t]));
            if !consistent {
                continue;
            }
            chosen[t] = i;
            self.extend(text, t + 1, chosen, found, limit);
            if *found >= limit {
                return;
            }
        }
    }
}

impl fmt::Display for GeneralizedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, &v) in self.word.iter().enumerate() {
            if t > 0 && !self.adjacent[t - 1] {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneralizedPattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_pattern(text)
    }
}

/// Parses dash notation such as `13-2-4`.
pub fn parse_pattern(text: &str) -> Result<GeneralizedPattern> {
    if text.is_empty() {
        return Err(Error::InvalidPattern("empty pattern".into()));
    }
    let mut word = Vec::new();
    let mut adjacent = Vec::new();
    let mut pending_dash = false;
    for (pos, ch) in text.char_indices() {
        match ch {
            '1'..='9' => {
                if !word.is_empty() {
                    adjacent.push(!pending_dash);
                }
                pending_dash = false;
                word.push(ch as u8 - b'0');
            }
            '-' => {
                if word.is_empty() {
                    return Err(Error::InvalidPattern(format!("{text:?}: leading dash")));
                }
                if pending_dash {
                    return Err(Error::InvalidPattern(format!(
                        "{text:?}: double dash at byte {pos}"
                    )));
                }
                pending_dash = true;
            }
            _ => {
                return Err(Error::InvalidPattern(format!(
                    "{text:?}: unexpected character {ch:?} at byte {pos}"
                )))
            }
        }
    }
    if pending_dash {
        return Err(Error::InvalidPattern(format!("{text:?}: trailing dash")));
    }
    GeneralizedPattern::new(word, adjacent)
}

pub fn format_pattern(p: &GeneralizedPattern) -> String {
    format!("{p}")
}

/// True iff `u` and `v` have the same pairwise comparison profile.
///
/// Both words must have equal length and distinct entries.
pub fn order_isomorphic<T: Ord, U: Ord>(u: &[T], v: &[U]) -> bool {
    assert_eq!(u.len(), v.len(), "order_isomorphic: length mismatch");
    (0..u.len()).all(|i| (i + 1..u.len()).all(|j| (u[i] < u[j]) == (v[i] < v[j])))
}

pub fn occurs_in(p: &GeneralizedPattern, pi: &Permutation) -> bool {
    p.occurs_in(pi.as_slice())
}

pub fn count_occurrences(p: &GeneralizedPattern, pi: &Permutation) -> u64 {
    p.count_occurrences(pi.as_slice())
}

/// Rearranges `word` into its lexicographic successor. Returns false, leaving
/// the word sorted ascending, when it was already the last arrangement.
pub fn next_permutation<T: Ord>(word: &mut [T]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        word.reverse();
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
