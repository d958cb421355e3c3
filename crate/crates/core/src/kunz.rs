//! Kunz words and the semigroups they encode.
//!
//! A numerical semigroup of multiplicity `m` is determined by the vector
//! `(k_1, ..., k_{m-1})` where `k_i * m + i` is the least element of the
//! semigroup congruent to `i` modulo `m`. Read as a word over the positive
//! integers this is the Kunz word; the empty word encodes `N_0`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Letter type. Depth 255 is far beyond anything enumerated here.
pub type Letter = u8;

/// A validated Kunz word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KunzWord {
    letters: Vec<Letter>,
}

impl KunzWord {
    /// The empty word, i.e. the semigroup `N_0`.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates `letters` and wraps them.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if let Some(reason) = kunz_violation(&letters)? {
            return Err(Error::NotKunz {
                word: format_letters(&letters),
                reason,
            });
        }
        Ok(Self { letters })
    }

    /// Wraps letters the caller has already proven to be Kunz.
    pub(crate) fn from_trusted(letters: Vec<Letter>) -> Self {
        debug_assert!(matches!(kunz_violation(&letters), Ok(None)));
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn genus(&self) -> u32 {
        self.letters.iter().map(|&w| u32::from(w)).sum()
    }

    /// Maximal letter, or 0 for the empty word.
    pub fn depth(&self) -> u32 {
        self.letters.iter().copied().max().map_or(0, u32::from)
    }

    pub fn properties(&self) -> SemigroupProperties {
        SemigroupProperties::of(self)
    }

    pub fn to_gaps(&self) -> GapSet {
        word_to_gaps(self)
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Concatenation `self ‖ other`, validated.
    pub fn concat(&self, other: &KunzWord) -> Result<KunzWord> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        KunzWord::new(letters)
    }
}

impl fmt::Display for KunzWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

impl FromStr for KunzWord {
    type Err = Error;

    /// Accepts either a run of decimal digits (`"31221"`) or, for letters above
    /// 9, a comma separated list (`"10,4,7"`). The empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        KunzWord::new(parse_letters(s)?)
    }
}

/// Parses a word without checking the Kunz inequalities.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<Letter>()
                    .map_err(|e| Error::InvalidInput(format!("bad letter {part:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Letter)
                    .ok_or_else(|| Error::InvalidInput(format!("bad letter {c:?}")))
            })
            .collect()
    }
}

fn format_letters(letters: &[Letter]) -> String {
    if letters.iter().all(|&w| w < 10) {
        letters.iter().map(|w| char::from(b'0' + w)).collect()
    } else {
        letters
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Returns the first violated inequality, if any. Letters equal to zero are an
/// input error rather than a violation.
fn kunz_violation(letters: &[Letter]) -> Result<Option<String>> {
    if let Some(pos) = letters.iter().position(|&w| w == 0) {
        return Err(Error::InvalidInput(format!(
            "letter {} of {} is zero; letters must be positive",
            pos + 1,
            format_letters(letters)
        )));
    }
    let len = letters.len();
    // 1-based accessor
    let w = |i: usize| u32::from(letters[i - 1]);
    for i in 1..=len {
        for j in i..=len {
            if i + j <= len && w(i) + w(j) < w(i + j) {
                return Ok(Some(format!("w_{i} + w_{j} < w_{}", i + j)));
            }
            if i + j > len + 1 {
                let k = i + j - len - 1;
                if w(i) + w(j) + 1 < w(k) {
                    return Ok(Some(format!("w_{i} + w_{j} + 1 < w_{k}")));
                }
            }
        }
    }
    Ok(None)
}

/// True iff both families of Kunz inequalities hold. Zero letters are rejected.
pub fn is_kunz(letters: &[Letter]) -> Result<bool> {
    Ok(kunz_violation(letters)?.is_none())
}

/// True iff the word is Kunz and every letter is at most `q`.
pub fn is_q_kunz(letters: &[Letter], q: u32) -> Result<bool> {
    Ok(is_kunz(letters)? && letters.iter().all(|&w| u32::from(w) <= q))
}

/// A stressed word is 3-Kunz and ends in 3. Malformed input is simply not stressed.
pub fn is_stressed(letters: &[Letter]) -> bool {
    letters.last() == Some(&3) && matches!(is_q_kunz(letters, 3), Ok(true))
}

/// Multiplicity, genus, depth, Frobenius number and conductor of a semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemigroupProperties {
    pub multiplicity: u32,
    pub genus: u32,
    pub depth: u32,
    pub frobenius: i64,
    pub conductor: u64,
}

impl SemigroupProperties {
    pub fn of(word: &KunzWord) -> Self {
        let multiplicity = word.len() as u32 + 1;
        let genus = word.genus();
        let depth = word.depth();
        let frobenius = if word.is_empty() {
            -1
        } else {
            // j is the last position holding the maximal letter
            let j = word
                .letters()
                .iter()
                .rposition(|&w| u32::from(w) == depth)
                .map_or(0, |p| p + 1) as i64;
            (i64::from(depth) - 1) * i64::from(multiplicity) + j
        };
        Self {
            multiplicity,
            genus,
            depth,
            frobenius,
            conductor: (frobenius + 1) as u64,
        }
    }

    /// `f - 2m`, the statistic whose limiting law is computed in
    /// [`crate::analytics::fm2m_limit`].
    pub fn frobenius_minus_twice_multiplicity(&self) -> i64 {
        self.frobenius - 2 * i64::from(self.multiplicity)
    }
}

/// Validates the letters and computes the semigroup invariants.
pub fn properties(letters: &[Letter]) -> Result<SemigroupProperties> {
    Ok(KunzWord::new(letters.to_vec())?.properties())
}

/// The gaps of a numerical semigroup, sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GapSet {
    gaps: Vec<u32>,
}

impl GapSet {
    /// Builds a gap set after checking that its complement in `N_0` is
    /// closed under addition.
    pub fn new(gaps: impl IntoIterator<Item = u32>) -> Result<Self> {
        let set: BTreeSet<u32> = gaps.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::NotSemigroup("0 cannot be a gap".into()));
        }
        let gaps: Vec<u32> = set.into_iter().collect();
        if let Some((a, b)) = closure_violation(&gaps) {
            return Err(Error::NotSemigroup(format!(
                "{a} and {b} are elements but their sum {} is a gap",
                a + b
            )));
        }
        Ok(Self { gaps })
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Largest gap, or -1 for `N_0`.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| i64::from(f))
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u32 {
        (1..).find(|n| self.gaps.binary_search(n).is_err()).unwrap()
    }

    pub fn contains_gap(&self, n: u32) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    pub fn to_word(&self) -> Result<KunzWord> {
        gaps_to_word(self)
    }
}

/// Finds elements `a <= b` of the semigroup below the conductor whose sum is a
/// gap. Checking all pairs is quadratic in the conductor.
fn closure_violation(sorted_gaps: &[u32]) -> Option<(u32, u32)> {
    let &frobenius = sorted_gaps.last()?;
    let is_gap = |n: u32| sorted_gaps.binary_search(&n).is_ok();
    let elements: Vec<u32> = (1..frobenius).filter(|&n| !is_gap(n)).collect();
    for (idx, &a) in elements.iter().enumerate() {
        for &b in &elements[idx..] {
            if a + b > frobenius {
                break;
            }
            if is_gap(a + b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// The gaps encoded by a Kunz word: `{i, m + i, ..., (w_i - 1) m + i}` over all positions.
pub fn word_to_gaps(word: &KunzWord) -> GapSet {
    let m = word.len() as u32 + 1;
    let mut gaps: Vec<u32> = word
        .letters()
        .iter()
        .enumerate()
        .flat_map(|(idx, &w)| {
            let i = idx as u32 + 1;
            (0..u32::from(w)).map(move |k| k * m + i)
        })
        .collect();
    gaps.sort_unstable();
    GapSet { gaps }
}

/// Inverse of [`word_to_gaps`]. Letter `i` counts the gaps congruent to `i`
/// modulo the multiplicity.
pub fn gaps_to_word(gaps: &GapSet) -> Result<KunzWord> {
    if let Some((a, b)) = closure_violation(&gaps.gaps) {
        return Err(Error::NotSemigroup(format!(
            "{a} + {b} = {} is a gap",
            a + b
        )));
    }
    let m = gaps.multiplicity() as usize;
    let mut counts = vec![0u32; m];
    for &gap in &gaps.gaps {
        counts[gap as usize % m] += 1;
    }
    let letters = counts[1..]
        .iter()
        .map(|&k| {
            Letter::try_from(k).map_err(|_| {
                Error::InvalidInput(format!("Kunz coordinate {k} does not fit in a letter"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    KunzWord::new(letters)
}

/// Splits a word of depth at most 3 into its prefix (empty, or the stressed
/// word ending at the last 3) and the 2-Kunz remainder.
pub fn prefix_decompose(word: &KunzWord) -> Result<(KunzWord, KunzWord)> {
    let depth = word.depth();
    if depth > 3 {
        return Err(Error::DepthTooLarge { depth });
    }
    let split = if depth == 3 {
        word.letters().iter().rposition(|&w| w == 3).unwrap() + 1
    } else {
        0
    };
    let (prefix, suffix) = word.letters().split_at(split);
    // Prefixes and suffixes of Kunz words of depth <= 3 stay Kunz.
    Ok((
        KunzWord::from_trusted(prefix.to_vec()),
        KunzWord::from_trusted(suffix.to_vec()),
    ))
}
