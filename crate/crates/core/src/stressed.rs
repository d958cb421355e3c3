//! Counting stressed words by genus and length.
//!
//! A stressed word of length `ℓ` is a word over `{1, 2, 3}` ending in 3 whose
//! first `ℓ - 1` positions split into the positions of ones `A`, of twos and of
//! threes `C`, subject to `ℓ ∉ A + A` and `C ∩ (A + A) = ∅`. Its genus is
//! `2ℓ + 1 - |A| + |C|`. For a fixed `A` the threes may occupy any subset of
//! the free set `S = [ℓ - 1] ∖ (A ∪ (A + A))`, so `A` accounts for
//! `C(|S|, k)` words of genus `2ℓ + 1 - |A| + k`.
//!
//! Valid `A` take at most one element from each pair `{i, ℓ - i}` with
//! `1 ≤ i < ℓ/2`, which gives `3^(⌈ℓ/2⌉ - 1)` candidates. They are searched
//! depth first, one pair at a time, with `A`, `A + A` and `S` held as bitmasks
//! so that inserting an element costs a shift and two masks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{self, Count, Error, Result};

/// Longest word the 128-bit masks can hold (positions `1..ℓ`).
pub const MAX_LENGTH: u32 = 127;

/// Smallest genus of a stressed word of length `len`: as many ones as the
/// pair constraint allows and no threes besides the last letter.
pub fn min_genus_for_length(len: u32) -> u32 {
    2 * len + 1 - pair_count(len)
}

/// Largest genus of a stressed word of length `len` (the all-threes word).
pub fn max_genus_for_length(len: u32) -> u32 {
    3 * len
}

fn pair_count(len: u32) -> u32 {
    len.div_ceil(2) - 1
}

fn bit(i: u32) -> u128 {
    1u128 << i
}

/// Bits `1..len`, i.e. the positions `[ℓ - 1]`.
fn position_mask(len: u32) -> u128 {
    if len <= 1 {
        0
    } else {
        (u128::MAX >> (128 - len)) & !1
    }
}

/// Pascal's triangle in exact integers.
#[derive(Clone, Debug)]
pub struct Binomials {
    rows: Vec<Vec<Count>>,
}

impl Binomials {
    pub fn new(max_n: u32) -> Result<Self> {
        let mut rows: Vec<Vec<Count>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![1]);
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = vec![1; n + 1];
            for k in 1..n {
                row[k] = error::add(prev[k - 1], prev[k], "binomial coefficient")?;
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn get(&self, n: u32, k: u32) -> Count {
        if k > n {
            return 0;
        }
        self.rows[n as usize][k as usize]
    }
}

/// Number of valid ones-sets `A` of a given length, keyed by `(|A|, |S|)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StressedClassAggregate {
    pub length: u32,
    /// `(|A|, |S|) -> count`
    pub counts: BTreeMap<(u32, u32), Count>,
    /// `|A| -> count` for sets whose free set was never computed because only
    /// words without extra threes fall inside the genus window.
    pub ones_only: BTreeMap<u32, Count>,
}

impl StressedClassAggregate {
    pub fn new(length: u32) -> Self {
        Self {
            length,
            ..Self::default()
        }
    }

    /// Number of ones-sets recorded.
    pub fn total(&self) -> Count {
        self.counts.values().chain(self.ones_only.values()).sum()
    }

    fn absorb(&mut self, tally: &Tally) -> Result<()> {
        for a in 0..tally.width_a {
            for s in 0..tally.width_s {
                let c = tally.free[a * tally.width_s + s];
                if c > 0 {
                    let slot = self.counts.entry((a as u32, s as u32)).or_default();
                    *slot = error::add(*slot, Count::from(c), "class aggregate")?;
                }
            }
            let c = tally.ones_only[a];
            if c > 0 {
                let slot = self.ones_only.entry(a as u32).or_default();
                *slot = error::add(*slot, Count::from(c), "class aggregate")?;
            }
        }
        Ok(())
    }
}

/// Inclusive genus window the search must cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusWindow {
    pub min: u32,
    pub max: u32,
}

impl GenusWindow {
    pub fn new(min: u32, max: u32) -> Result<Self> {
        if min > max {
            return Err(Error::InvalidInput(format!(
                "empty genus window [{min}, {max}]"
            )));
        }
        Ok(Self { min, max })
    }

    /// Every genus a word of this length can have.
    pub fn full(len: u32) -> Self {
        Self {
            min: 0,
            max: max_genus_for_length(len),
        }
    }
}

/// State at a node of the search: `A`, `A + A` restricted to `[ℓ - 1]`, and `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetNode {
    pub ones: u128,
    pub sums: u128,
    pub free: u128,
    pub size: u32,
}

impl SetNode {
    fn root(len: u32) -> Self {
        Self {
            ones: 0,
            sums: 0,
            free: position_mask(len),
            size: 0,
        }
    }

    /// Adds `x` to `A`. New sums are `x + A'` where `A'` already contains `x`.
    fn insert(self, x: u32, mask: u128) -> Self {
        let ones = self.ones | bit(x);
        let sums = (self.sums | (ones << x)) & mask;
        Self {
            ones,
            sums,
            free: self.free & !bit(x) & !sums,
            size: self.size + 1,
        }
    }

    /// Only `A` is maintained on the fast path.
    fn insert_ones_only(self, x: u32) -> Self {
        Self {
            ones: self.ones | bit(x),
            size: self.size + 1,
            ..self
        }
    }

    pub fn free_size(&self) -> u32 {
        self.free.count_ones()
    }
}

/// Dense per-task counters, indexed `[|A|][|S|]`.
struct Tally {
    width_a: usize,
    width_s: usize,
    free: Vec<u64>,
    ones_only: Vec<u64>,
}

impl Tally {
    fn new(len: u32) -> Self {
        let width_a = pair_count(len) as usize + 1;
        let width_s = len as usize;
        Self {
            width_a,
            width_s,
            free: vec![0; width_a * width_s],
            ones_only: vec![0; width_a],
        }
    }
}

/// Depth-first search over ones-sets for one length.
struct Search {
    len: u32,
    mask: u128,
    pairs: u32,
    base: u32,
    window: GenusWindow,
    prune: bool,
    fast_path: bool,
}

impl Search {
    fn new(len: u32, window: GenusWindow, prune: bool, fast_path: bool) -> Self {
        Self {
            len,
            mask: position_mask(len),
            pairs: pair_count(len),
            base: 2 * len + 1,
            window,
            prune,
            fast_path: prune && fast_path,
        }
    }

    /// Pair `depth` (0-based) is `{depth + 1, ℓ - depth - 1}`; branch order is
    /// skip, take the smaller, take the larger.
    fn child(&self, node: SetNode, depth: u32, choice: u8, track: bool) -> SetNode {
        let x = match choice {
            0 => return node,
            1 => depth + 1,
            _ => self.len - depth - 1,
        };
        if track {
            node.insert(x, self.mask)
        } else {
            node.insert_ones_only(x)
        }
    }

    /// Whether the free set is still needed below this node: some leaf could
    /// place an extra three and stay inside the window.
    fn needs_free(&self, node: &SetNode, depth: u32) -> bool {
        if !self.fast_path {
            return true;
        }
        let most_ones = node.size + (self.pairs - depth);
        self.base - most_ones < self.window.max
    }

    fn run(&self, node: SetNode, depth: u32, track: bool, tally: &mut Tally) {
        let track = track && self.needs_free(&node, depth);
        if self.prune {
            let most_ones = node.size + (self.pairs - depth);
            if self.base - most_ones > self.window.max {
                return;
            }
            let highest = if track {
                self.base - node.size + node.free_size()
            } else {
                self.base - node.size
            };
            if highest < self.window.min {
                return;
            }
        }
        if depth == self.pairs {
            let a = node.size as usize;
            if track {
                tally.free[a * tally.width_s + node.free_size() as usize] += 1;
            } else {
                tally.ones_only[a] += 1;
            }
            return;
        }
        for choice in 0..3 {
            self.run(self.child(node, depth, choice, track), depth + 1, track, tally);
        }
    }
}

/// All ones-sets for length `len` whose words can reach the genus window,
/// each with its exact `(|A|, |S|)`.
pub fn stressed_classes(len: u32, window: GenusWindow) -> Result<StressedClassAggregate> {
    classes_with(len, window, Mode::PRUNED, 1)
}

/// As [`stressed_classes`], but sets that can only yield words without extra
/// threes inside the window are recorded in
/// [`StressedClassAggregate::ones_only`] and their free set is never computed.
pub fn stressed_classes_fast(len: u32, window: GenusWindow) -> Result<StressedClassAggregate> {
    classes_with(len, window, Mode::FAST, 1)
}

/// As [`stressed_classes`] with genus pruning disabled.
pub fn stressed_classes_unpruned(len: u32) -> Result<StressedClassAggregate> {
    classes_with(len, GenusWindow::full(len), Mode::UNPRUNED, 1)
}

#[derive(Clone, Copy, Debug)]
struct Mode {
    prune: bool,
    fast_path: bool,
}

impl Mode {
    const UNPRUNED: Mode = Mode { prune: false, fast_path: false };
    const PRUNED: Mode = Mode { prune: true, fast_path: false };
    const FAST: Mode = Mode { prune: true, fast_path: true };
}

fn check_length(len: u32) -> Result<()> {
    if len == 0 || len > MAX_LENGTH {
        return Err(Error::InvalidInput(format!(
            "length {len} outside 1..={MAX_LENGTH}"
        )));
    }
    Ok(())
}

fn classes_with(
    len: u32,
    window: GenusWindow,
    mode: Mode,
    split_depth: u32,
) -> Result<StressedClassAggregate> {
    check_length(len)?;
    let tasks = split_tasks(len, split_depth);
    run_tasks(&tasks, window, mode)
        .map(|mut v| v.pop().unwrap_or_else(|| StressedClassAggregate::new(len)))
}

/// A subtree of the search for one length, identified by its first choices.
#[derive(Clone, Debug)]
struct Task {
    len: u32,
    prefix: Vec<u8>,
}

fn split_tasks(len: u32, split_depth: u32) -> Vec<Task> {
    let depth = split_depth.min(pair_count(len));
    let mut prefixes: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (0..3u8).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    prefixes
        .into_iter()
        .map(|prefix| Task { len, prefix })
        .collect()
}

fn run_task(task: &Task, window: GenusWindow, mode: Mode) -> Tally {
    let search = Search::new(task.len, window, mode.prune, mode.fast_path);
    let mut tally = Tally::new(task.len);
    let mut node = SetNode::root(task.len);
    for (depth, &choice) in task.prefix.iter().enumerate() {
        node = search.child(node, depth as u32, choice, true);
    }
    search.run(node, task.prefix.len() as u32, true, &mut tally);
    tally
}

/// Runs tasks (possibly of several lengths) and merges by length in
/// ascending order.
fn run_tasks(tasks: &[Task], window: GenusWindow, mode: Mode) -> Result<Vec<StressedClassAggregate>> {
    let tallies: Vec<(u32, Tally)> = tasks
        .par_iter()
        .map(|task| (task.len, run_task(task, window, mode)))
        .collect();
    let mut by_len: BTreeMap<u32, StressedClassAggregate> = BTreeMap::new();
    for (len, tally) in &tallies {
        by_len
            .entry(*len)
            .or_insert_with(|| StressedClassAggregate::new(*len))
            .absorb(tally)?;
    }
    Ok(by_len.into_values().collect())
}

/// Calls `visit` at every node of the unpruned search for `len`, with a flag
/// marking leaves (complete ones-sets).
pub fn walk_nodes<F>(len: u32, mut visit: F) -> Result<()>
where
    F: FnMut(&SetNode, bool),
{
    check_length(len)?;
    let search = Search::new(len, GenusWindow::full(len), false, false);
    fn go<F: FnMut(&SetNode, bool)>(s: &Search, node: SetNode, depth: u32, visit: &mut F) {
        let leaf = depth == s.pairs;
        visit(&node, leaf);
        if leaf {
            return;
        }
        for choice in 0..3 {
            go(s, s.child(node, depth, choice, true), depth + 1, visit);
        }
    }
    go(&search, SetNode::root(len), 0, &mut visit);
    Ok(())
}

/// The node reached from the root by the given pair choices (0 skip, 1 take
/// the smaller element, 2 take the larger).
pub fn follow_branch(len: u32, choices: &[u8]) -> Result<SetNode> {
    check_length(len)?;
    let search = Search::new(len, GenusWindow::full(len), false, false);
    if choices.len() > search.pairs as usize || choices.iter().any(|&c| c > 2) {
        return Err(Error::InvalidInput(format!(
            "{choices:?} is not a branch of the search for length {len}"
        )));
    }
    Ok(choices
        .iter()
        .enumerate()
        .fold(SetNode::root(len), |node, (depth, &c)| search.child(node, depth as u32, c, true)))
}

/// Expands an aggregate into stressed-word counts per genus.
pub fn expand_to_genus(
    aggregate: &StressedClassAggregate,
    binomials: &Binomials,
) -> Result<BTreeMap<u32, Count>> {
    let base = 2 * aggregate.length + 1;
    let mut out: BTreeMap<u32, Count> = BTreeMap::new();
    for (&(a, s), &count) in &aggregate.counts {
        if s > binomials.max_n() {
            return Err(Error::InvalidInput(format!(
                "binomial table stops at row {}, need {s}",
                binomials.max_n()
            )));
        }
        for k in 0..=s {
            let add = error::mul(count, binomials.get(s, k), "stressed count")?;
            let slot = out.entry(base - a + k).or_default();
            *slot = error::add(*slot, add, "stressed count")?;
        }
    }
    for (&a, &count) in &aggregate.ones_only {
        let slot = out.entry(base - a).or_default();
        *slot = error::add(*slot, count, "stressed count")?;
    }
    Ok(out)
}

/// Options for [`count_stressed`].
#[derive(Clone, Copy, Debug)]
pub struct StressedOptions {
    pub max_genus: u32,
    /// Only search lengths up to this bound.
    pub max_length: Option<u32>,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Genus pruning; disabling it only serves to cross-check soundness.
    pub prune: bool,
    /// Skip free-set maintenance where only words without extra threes can
    /// land in the window.
    pub fast_path: bool,
}

impl StressedOptions {
    pub fn new(max_genus: u32) -> Self {
        Self {
            max_genus,
            max_length: None,
            threads: None,
            prune: true,
            fast_path: true,
        }
    }
}

/// Stressed-word counts by genus and by `(length, genus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StressedCountTable {
    pub max_genus: u32,
    /// Longest length searched.
    pub max_length: u32,
    /// `s_g` is exact for every `g` up to this value.
    pub complete_through: u32,
    /// `s_g` indexed by genus `0..=max_genus`.
    pub by_genus: Vec<Count>,
    /// `(length, genus) -> count`, restricted to `genus <= max_genus`.
    pub by_length: BTreeMap<(u32, u32), Count>,
}

impl StressedCountTable {
    /// `s_g`, if `g` is covered.
    pub fn s(&self, g: u32) -> Option<Count> {
        (g <= self.complete_through).then(|| self.by_genus[g as usize])
    }

    /// Whether every genus of words of length `len` is present.
    pub fn length_complete(&self, len: u32) -> bool {
        len >= 1 && len <= self.max_length && max_genus_for_length(len) <= self.max_genus
    }

    /// Counts for one length, by genus.
    pub fn length_row(&self, len: u32) -> BTreeMap<u32, Count> {
        self.by_length
            .range((len, 0)..=(len, u32::MAX))
            .map(|(&(_, g), &c)| (g, c))
            .collect()
    }
}

/// Longest length that can produce a word of genus at most `max_genus`.
pub fn longest_contributing_length(max_genus: u32) -> u32 {
    (1..=MAX_LENGTH + 1)
        .take_while(|&len| min_genus_for_length(len) <= max_genus)
        .last()
        .unwrap_or(0)
}

/// Counts stressed words of every genus up to `max_genus`.
pub fn count_stressed(options: &StressedOptions) -> Result<StressedCountTable> {
    let natural = longest_contributing_length(options.max_genus);
    let max_length = options.max_length.map_or(natural, |cap| cap.min(natural));
    if natural > MAX_LENGTH && options.max_length.is_none_or(|cap| cap > MAX_LENGTH) {
        return Err(Error::InvalidInput(format!(
            "genus {} needs words longer than {MAX_LENGTH}",
            options.max_genus
        )));
    }
    let complete_through = if max_length >= natural {
        options.max_genus
    } else {
        min_genus_for_length(max_length + 1) - 1
    };
    let window = GenusWindow::new(0, options.max_genus)?;

    let run = || -> Result<Vec<StressedClassAggregate>> {
        let workers = rayon::current_num_threads() as u32;
        let tasks: Vec<Task> = (1..=max_length)
            .flat_map(|len| split_tasks(len, split_depth_for(workers)))
            .collect();
        let mode = Mode {
            prune: options.prune,
            fast_path: options.fast_path,
        };
        run_tasks(&tasks, window, mode)
    };
    let aggregates = match options.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;

    let binomials = Binomials::new(max_length.max(1))?;
    let mut by_genus = vec![0; options.max_genus as usize + 1];
    let mut by_length = BTreeMap::new();
    for aggregate in &aggregates {
        for (g, count) in expand_to_genus(aggregate, &binomials)? {
            if g > options.max_genus {
                continue;
            }
            let slot = &mut by_genus[g as usize];
            *slot = error::add(*slot, count, "s_g")?;
            by_length.insert((aggregate.length, g), count);
        }
    }
    Ok(StressedCountTable {
        max_genus: options.max_genus,
        max_length,
        complete_through,
        by_genus,
        by_length,
    })
}

/// Counts every stressed word of length at most `max_length`, across all genera.
pub fn count_stressed_by_length(max_length: u32, threads: Option<usize>) -> Result<StressedCountTable> {
    check_length(max_length)?;
    let mut options = StressedOptions::new(max_genus_for_length(max_length));
    options.max_length = Some(max_length);
    options.threads = threads;
    count_stressed(&options)
}

/// The first `⌈log₃ P⌉` pair choices fix a subtree per task; two extra levels
/// keep workers busy when subtrees are uneven.
fn split_depth_for(workers: u32) -> u32 {
    let mut depth = 0;
    let mut span = 1u32;
    while span < workers {
        span = span.saturating_mul(3);
        depth += 1;
    }
    depth + 2
}
