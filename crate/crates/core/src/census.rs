//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! Every semigroup of genus `g` is listed exactly once as its Kunz word. Words
//! are grown left to right for each multiplicity; each new letter is checked
//! against all constraints whose largest index it completes, so every partial
//! word is a valid prefix and no word is produced twice.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{self, Count, Error, Result};
use crate::kunz::{KunzWord, Letter};

/// Largest genus enumerated without an explicit opt-in.
pub const DEFAULT_ORACLE_CAP: u32 = 22;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub cap: u32,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ORACLE_CAP,
            threads: None,
        }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: u32) -> Self {
        if cap > DEFAULT_ORACLE_CAP {
            log::warn!(
                "oracle cap raised to {cap}; enumeration time grows like 1.6^g"
            );
        }
        Self {
            cap,
            ..Self::default()
        }
    }

    fn check(&self, genus: u32) -> Result<()> {
        if genus > self.cap {
            return Err(Error::CapExceeded {
                requested: genus,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// Calls `visit` on every Kunz word of the given genus and length `len`
/// (multiplicity `len + 1`).
pub fn visit_words_of_length<F>(genus: u32, len: usize, mut visit: F)
where
    F: FnMut(&[Letter]),
{
    if len == 0 {
        if genus == 0 {
            visit(&[]);
        }
        return;
    }
    if (genus as usize) < len {
        return;
    }
    let mut word: Vec<Letter> = Vec::with_capacity(len);
    extend(&mut word, len, genus, &mut visit);
}

fn extend<F>(word: &mut Vec<Letter>, len: usize, budget: u32, visit: &mut F)
where
    F: FnMut(&[Letter]),
{
    let p = word.len() + 1;
    let m = len + 1;
    let remaining_after = (len - p) as u32;
    // 1-based accessor into the prefix
    let w = |word: &Vec<Letter>, i: usize| u32::from(word[i - 1]);

    let mut hi = budget - remaining_after;
    for i in 1..p {
        hi = hi.min(w(word, i) + w(word, p - i));
    }
    if p == len {
        // the last letter must use the whole budget
        if hi < budget {
            return;
        }
    }
    let mut lo = if p == len { budget } else { 1 };
    if p + p > m {
        // wrap-around constraints x + w_i + 1 >= w_{i+p-m} for i < p
        for i in (m + 1 - p)..p {
            let k = i + p - m;
            lo = lo.max((w(word, k)).saturating_sub(w(word, i) + 1));
        }
        // and 2x + 1 >= w_{2p-m}
        let k = 2 * p - m;
        lo = lo.max(w(word, k).saturating_sub(1).div_ceil(2));
    }
    hi = hi.min(u32::from(Letter::MAX));
    for x in lo..=hi {
        word.push(x as Letter);
        if p == len {
            visit(word);
        } else {
            extend(word, len, budget - x, visit);
        }
        word.pop();
    }
}

/// Every semigroup of genus `genus`, grouped by increasing multiplicity.
pub fn enumerate_genus(genus: u32, config: &OracleConfig) -> Result<Vec<KunzWord>> {
    config.check(genus)?;
    let mut words = Vec::new();
    for len in lengths_for(genus) {
        visit_words_of_length(genus, len, |letters| {
            words.push(KunzWord::from_trusted(letters.to_vec()))
        });
    }
    Ok(words)
}

fn lengths_for(genus: u32) -> std::ops::RangeInclusive<usize> {
    if genus == 0 {
        0..=0
    } else {
        1..=genus as usize
    }
}

/// Exact per-genus counters gathered by the oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub genus: u32,
    pub n: Count,
    pub depth_histogram: BTreeMap<u32, Count>,
    /// Semigroups of depth at most 3.
    pub t: Count,
    /// Semigroups of depth at least 4.
    pub n_hat: Count,
    /// Count of semigroups with `f - 2m = k`, keyed by `k`.
    pub fm2m_histogram: BTreeMap<i64, Count>,
}

impl CensusRow {
    fn empty(genus: u32) -> Self {
        Self {
            genus,
            ..Self::default()
        }
    }

    fn record(&mut self, letters: &[Letter]) {
        let depth = letters.iter().copied().max().map_or(0, u32::from);
        *self.depth_histogram.entry(depth).or_default() += 1;
        let props = KunzWord::from_trusted(letters.to_vec()).properties();
        *self
            .fm2m_histogram
            .entry(props.frobenius_minus_twice_multiplicity())
            .or_default() += 1;
    }

    fn merge(mut self, other: Self) -> Result<Self> {
        for (depth, count) in other.depth_histogram {
            let slot = self.depth_histogram.entry(depth).or_default();
            *slot = error::add(*slot, count, "depth histogram")?;
        }
        for (k, count) in other.fm2m_histogram {
            let slot = self.fm2m_histogram.entry(k).or_default();
            *slot = error::add(*slot, count, "f - 2m histogram")?;
        }
        Ok(self)
    }

    fn finish(mut self) -> Result<Self> {
        let mut n: Count = 0;
        let mut t: Count = 0;
        for (&depth, &count) in &self.depth_histogram {
            n = error::add(n, count, "n_g")?;
            if depth <= 3 {
                t = error::add(t, count, "t_g")?;
            }
        }
        self.n = n;
        self.t = t;
        self.n_hat = n - t;
        Ok(self)
    }

    /// Semigroups of depth at most `q`.
    pub fn depth_at_most(&self, q: u32) -> Count {
        self.depth_histogram.range(..=q).map(|(_, c)| c).sum()
    }
}

/// Census of one genus. Multiplicities are independent partitions whose
/// counters are merged by summation, so the result does not depend on the
/// thread count.
pub fn census_row(genus: u32, config: &OracleConfig) -> Result<CensusRow> {
    config.check(genus)?;
    let run = || {
        lengths_for(genus)
            .into_par_iter()
            .map(|len| {
                let mut row = CensusRow::empty(genus);
                visit_words_of_length(genus, len, |letters| row.record(letters));
                Ok(row)
            })
            .try_reduce(|| CensusRow::empty(genus), CensusRow::merge)
    };
    let row = match config.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;
    row.finish()
}

/// Rows for genus `0..=max_genus`.
pub fn census(max_genus: u32, config: &OracleConfig) -> Result<Vec<CensusRow>> {
    config.check(max_genus)?;
    (0..=max_genus).map(|g| census_row(g, config)).collect()
}

/// `s_g = t_g - t_{g-1} - t_{g-2}` for `g >= 3` (and 0 below), from census rows
/// indexed by genus from 0.
pub fn stressed_from_census(rows: &[CensusRow]) -> Result<Vec<Count>> {
    let t: Vec<Count> = rows.iter().map(|r| r.t).collect();
    (0..t.len())
        .map(|g| {
            if g < 3 {
                return Ok(0);
            }
            t[g].checked_sub(t[g - 1] + t[g - 2]).ok_or_else(|| {
                Error::Inconsistent(format!("t_{g} < t_{} + t_{}", g - 1, g - 2))
            })
        })
        .collect()
}
