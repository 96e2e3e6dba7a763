//! Admissible-chain machinery over a compressed PSS-poset: depth-first
//! enumeration of full words, exact counting by a level-synchronous sweep,
//! and the longest-partial-word computation.
//!
//! Everything here is generic over [`PssRowFamily`] — the same code serves
//! shellings and peelings, because both languages are answered through
//! `is_pss` row-membership queries alone.

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::hash::{BuildHasherDefault, Hasher};
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::family::Word;
use crate::sets::IndexSubset;
use crate::shelling::PssRowFamily;

/// A (setment mask, suffix) pair; the unit of every level map.
pub type Key = (u64, u8);

/// splitmix64-style mixer: the sweeps hash tens of millions of small keys,
/// so the default hasher's per-byte cost is worth avoiding.
#[derive(Default)]
pub struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(u64::from(b));
        }
    }

    fn write_u8(&mut self, n: u8) {
        self.write_u64(u64::from(n));
    }

    fn write_u64(&mut self, n: u64) {
        let mut z = (self.0 ^ n).wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        self.0 = z ^ (z >> 31);
    }
}

pub type KeyBuild = BuildHasherDefault<KeyHasher>;

/// One level of the counting sweep: all reachable setment-suffix pairs of
/// one setment size, each with its number of admissible chains from below.
pub struct LevelMap {
    pub level: usize,
    pub entries: HashMap<Key, BigUint, KeyBuild>,
}

/// Order of stack pushes during enumeration. Both are deterministic;
/// `Lexicographic` pushes children by ascending facet index and is the
/// default everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOrder {
    Lexicographic,
    Arbitrary,
}

/// A stack entry of the depth-first search: the potential setment still to
/// be ordered, the suffix chosen below it, and the tail of suffixes already
/// fixed above (in word order).
#[derive(Clone, Debug)]
pub struct DfsItem {
    pub setment: IndexSubset,
    pub suffix: u8,
    pub tail: Vec<u8>,
}

/// Depth-first enumeration of full words from above.
///
/// The initial stack holds `([n]\{k}, k)` for every suffix whose full
/// complement is a potential setment. Popping `(A, b, tail)` replaces it by
/// `(A\{a}, a, b·tail)` for each `a ∈ A` that keeps the setment condition;
/// once the setment is exhausted the accumulated word is emitted.
pub struct FullWordIter<'a> {
    pss: &'a PssRowFamily,
    stack: Vec<DfsItem>,
    remaining: Option<usize>,
}

impl<'a> FullWordIter<'a> {
    fn new(pss: &'a PssRowFamily, limit: Option<usize>, _order: WordOrder) -> Self {
        let n = pss.len();
        let full = IndexSubset::full(n);
        let mut stack = Vec::new();
        for k in 0..n {
            let setment = full.without(k);
            if pss.is_pss(setment, k) {
                stack.push(DfsItem {
                    setment,
                    suffix: k as u8,
                    tail: Vec::new(),
                });
            }
        }
        FullWordIter {
            pss,
            stack,
            remaining: limit,
        }
    }

    /// Splits the not-yet-started search into its initial stack items, for
    /// partitioned processing.
    fn into_initial_items(self) -> Vec<DfsItem> {
        self.stack
    }
}

impl Iterator for FullWordIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.remaining == Some(0) {
            return None;
        }
        while let Some(item) = self.stack.pop() {
            if item.setment.is_empty() {
                let mut letters = Vec::with_capacity(1 + item.tail.len());
                letters.push(item.suffix);
                letters.extend_from_slice(&item.tail);
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                return Some(Word(letters));
            }
            let mut tail = Vec::with_capacity(item.tail.len() + 1);
            tail.push(item.suffix);
            tail.extend_from_slice(&item.tail);
            for a in item.setment.iter() {
                let lower = item.setment.without(a);
                if self.pss.is_pss(lower, a) {
                    self.stack.push(DfsItem {
                        setment: lower,
                        suffix: a as u8,
                        tail: tail.clone(),
                    });
                }
            }
        }
        None
    }
}

/// Streams the full words of the language, each exactly once, stopping
/// after `limit` words when given.
pub fn enumerate_full_words(
    pss: &PssRowFamily,
    limit: Option<usize>,
    order: WordOrder,
) -> FullWordIter<'_> {
    FullWordIter::new(pss, limit, order)
}

/// Collects the enumeration into a vector. With `threads > 1` the initial
/// stack is partitioned across workers and the per-item outputs are
/// concatenated in stack order, which reproduces the sequential stream
/// exactly.
pub fn enumerate_collect(
    pss: &PssRowFamily,
    limit: Option<usize>,
    order: WordOrder,
    threads: usize,
) -> Vec<Word> {
    if threads <= 1 {
        return enumerate_full_words(pss, limit, order).collect();
    }
    let items = FullWordIter::new(pss, None, order).into_initial_items();
    let per_item: Vec<Vec<Word>> = crate::parallel::pool(threads).install(|| {
        items
            .into_par_iter()
            .rev() // stack order: last pushed explored first
            .map(|item| {
                let mut iter = FullWordIter {
                    pss,
                    stack: vec![item],
                    remaining: limit,
                };
                iter.by_ref().collect()
            })
            .collect()
    });
    let mut words: Vec<Word> = per_item.into_iter().flatten().collect();
    if let Some(limit) = limit {
        words.truncate(limit);
    }
    words
}

/// Tuning knobs for the counting sweeps.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub threads: usize,
    /// total stored level entries before key lists spill to disk
    pub spill_threshold: usize,
    /// spill directory; falls back to `SHELLKIT_LEVEL_SPILL_DIR`, then the
    /// system temp directory
    pub spill_dir: Option<PathBuf>,
    /// one progress line per level on stderr
    pub verbose: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 1,
            spill_threshold: 50_000_000,
            spill_dir: None,
            verbose: false,
        }
    }
}

/// Result of the rising counting sweep.
#[derive(Clone, Debug)]
pub struct CountOutcome {
    /// exact number of full words
    pub count: BigUint,
    /// length of the longest word in the language
    pub max_partial_length: usize,
    /// entry k: number of full words whose last letter is k
    pub by_last: Vec<BigUint>,
}

fn level_zero(pss: &PssRowFamily) -> LevelMap {
    let mut entries: HashMap<Key, BigUint, KeyBuild> = HashMap::default();
    for b in 0..pss.len() {
        if pss.is_pss(IndexSubset::EMPTY, b) {
            entries.insert((0, b as u8), BigUint::from(1u32));
        }
    }
    LevelMap { level: 0, entries }
}

/// Forward-propagates one level: each chain count flows to every potential
/// setment-suffix that extends it. Merging is by addition, so the result
/// does not depend on iteration order or worker count.
fn expand_level(pss: &PssRowFamily, current: &LevelMap, threads: usize) -> LevelMap {
    let n = pss.len();
    let full = IndexSubset::full(n);
    let push_entry = |next: &mut HashMap<Key, BigUint, KeyBuild>, (mask, b): Key, cnt: &BigUint| {
        let setment = IndexSubset(mask).with(b as usize);
        for c in full.difference(setment).iter() {
            if pss.is_pss(setment, c) {
                *next
                    .entry((setment.0, c as u8))
                    .or_insert_with(BigUint::zero) += cnt;
            }
        }
    };
    let entries = if threads <= 1 {
        let mut next: HashMap<Key, BigUint, KeyBuild> = HashMap::default();
        for (&key, cnt) in &current.entries {
            push_entry(&mut next, key, cnt);
        }
        next
    } else {
        crate::parallel::pool(threads).install(|| {
            current
                .entries
                .par_iter()
                .fold(
                    HashMap::<Key, BigUint, KeyBuild>::default,
                    |mut acc, (&key, cnt)| {
                        push_entry(&mut acc, key, cnt);
                        acc
                    },
                )
                .reduce(HashMap::default, |mut a, b| {
                    for (key, cnt) in b {
                        *a.entry(key).or_insert_with(BigUint::zero) += cnt;
                    }
                    a
                })
        })
    };
    LevelMap {
        level: current.level + 1,
        entries,
    }
}

/// Rising level sweep with only two live levels: exact count of full
/// words, last-letter distribution, and the longest word length.
pub fn count_report(pss: &PssRowFamily, opts: &SearchOptions) -> CountOutcome {
    count_report_inner(pss, opts, None)
}

fn count_report_inner(
    pss: &PssRowFamily,
    opts: &SearchOptions,
    mut store: Option<&mut LevelStore>,
) -> CountOutcome {
    let n = pss.len();
    let mut current = level_zero(pss);
    if current.entries.is_empty() {
        return CountOutcome {
            count: BigUint::zero(),
            max_partial_length: 0,
            by_last: vec![BigUint::zero(); n],
        };
    }
    if let Some(store) = store.as_deref_mut() {
        store.push(current.entries.keys().copied());
    }
    while current.level < n - 1 {
        let next = expand_level(pss, &current, opts.threads);
        if next.entries.is_empty() {
            break;
        }
        if opts.verbose {
            eprintln!(
                "level {}: {} setment-suffix pairs",
                next.level,
                next.entries.len()
            );
        }
        if let Some(store) = store.as_deref_mut() {
            store.push(next.entries.keys().copied());
        }
        current = next;
    }
    let mut by_last = vec![BigUint::zero(); n];
    let mut count = BigUint::zero();
    if current.level == n - 1 {
        let full = IndexSubset::full(n);
        for (k, slot) in by_last.iter_mut().enumerate() {
            if let Some(c) = current.entries.get(&(full.without(k).0, k as u8)) {
                *slot = c.clone();
                count += c;
            }
        }
    }
    CountOutcome {
        count,
        max_partial_length: current.level + 1,
        by_last,
    }
}

/// Exact number of full words.
pub fn count_full_words(pss: &PssRowFamily) -> BigUint {
    count_report(pss, &SearchOptions::default()).count
}

/// Entry k: number of full words ending with letter k.
pub fn count_by_last_letter(pss: &PssRowFamily) -> Vec<BigUint> {
    count_report(pss, &SearchOptions::default()).by_last
}

/// Entry b: number of full words starting with letter b, via the falling
/// sweep over the stored rising levels. Chains that never reach the top
/// level contribute nothing.
pub fn count_by_first_letter(pss: &PssRowFamily, opts: &SearchOptions) -> Vec<BigUint> {
    let n = pss.len();
    let mut store = LevelStore::new(opts);
    let outcome = count_report_inner(pss, opts, Some(&mut store));
    let mut by_first = vec![BigUint::zero(); n];
    if outcome.max_partial_length < n {
        return by_first;
    }
    let full = IndexSubset::full(n);
    // top level: every reachable full-cosize key tops exactly one chain
    let mut upper: HashMap<Key, BigUint, KeyBuild> = HashMap::default();
    for key in store.load(n - 1) {
        upper.insert(key, BigUint::from(1u32));
    }
    for s in (0..n - 1).rev() {
        let mut level: HashMap<Key, BigUint, KeyBuild> = HashMap::default();
        for (mask, b) in store.load(s) {
            let above = IndexSubset(mask).with(b as usize);
            let mut sum = BigUint::zero();
            for c in full.difference(above).iter() {
                if let Some(v) = upper.get(&(above.0, c as u8)) {
                    sum += v;
                }
            }
            if !sum.is_zero() {
                level.insert((mask, b), sum);
            }
        }
        upper = level;
    }
    for (b, slot) in by_first.iter_mut().enumerate() {
        if let Some(v) = upper.get(&(0, b as u8)) {
            *slot = v.clone();
        }
    }
    by_first
}

/// Length of the longest word in the language (0 when even single letters
/// are impossible). Runs the rising sweep on bare key sets.
pub fn max_partial_length(pss: &PssRowFamily) -> usize {
    max_partial_length_opts(pss, &SearchOptions::default())
}

pub fn max_partial_length_opts(pss: &PssRowFamily, opts: &SearchOptions) -> usize {
    let n = pss.len();
    let full = IndexSubset::full(n);
    let mut current: HashSet<Key, KeyBuild> = HashSet::default();
    for b in 0..n {
        if pss.is_pss(IndexSubset::EMPTY, b) {
            current.insert((0, b as u8));
        }
    }
    if current.is_empty() {
        return 0;
    }
    let mut highest = 0usize;
    while highest < n - 1 {
        let mut next: HashSet<Key, KeyBuild> = HashSet::default();
        for &(mask, b) in &current {
            let setment = IndexSubset(mask).with(b as usize);
            for c in full.difference(setment).iter() {
                if pss.is_pss(setment, c) {
                    next.insert((setment.0, c as u8));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        highest += 1;
        if opts.verbose {
            eprintln!("level {highest}: {} setment-suffix pairs", next.len());
        }
        current = next;
    }
    highest + 1
}

/// Stored rising levels (keys only), kept in memory until the configured
/// threshold and spilled to flat files afterwards.
struct LevelStore {
    threshold: usize,
    dir_hint: Option<PathBuf>,
    total: usize,
    memory: Vec<Vec<Key>>,
    disk: Option<(tempfile::TempDir, Vec<PathBuf>)>,
}

impl LevelStore {
    fn new(opts: &SearchOptions) -> Self {
        LevelStore {
            threshold: opts.spill_threshold,
            dir_hint: opts.spill_dir.clone(),
            total: 0,
            memory: Vec::new(),
            disk: None,
        }
    }

    fn spill_root(&self) -> PathBuf {
        self.dir_hint.clone().unwrap_or_else(|| {
            std::env::var_os("SHELLKIT_LEVEL_SPILL_DIR")
                .map(PathBuf::from)
                .unwrap_or_else(std::env::temp_dir)
        })
    }

    fn push<I: Iterator<Item = Key>>(&mut self, keys: I) {
        let level: Vec<Key> = keys.collect();
        self.total += level.len();
        if self.disk.is_none() && self.total > self.threshold {
            let dir = tempfile::Builder::new()
                .prefix("shellkit-levels-")
                .tempdir_in(self.spill_root())
                .expect("create spill directory");
            self.disk = Some((dir, Vec::new()));
            let staged = std::mem::take(&mut self.memory);
            for level in staged {
                self.write_level(&level);
            }
        }
        if self.disk.is_some() {
            self.write_level(&level);
        } else {
            self.memory.push(level);
        }
    }

    fn write_level(&mut self, level: &[Key]) {
        let (dir, files) = self.disk.as_mut().expect("spill enabled");
        let path = dir.path().join(format!("level-{:03}.keys", files.len()));
        let mut w = BufWriter::new(File::create(&path).expect("create level file"));
        for &(mask, suffix) in level {
            w.write_all(&mask.to_le_bytes()).expect("write level file");
            w.write_all(&[suffix]).expect("write level file");
        }
        w.flush().expect("flush level file");
        files.push(path);
    }

    fn load(&self, level: usize) -> Vec<Key> {
        match &self.disk {
            None => self.memory[level].clone(),
            Some((_, files)) => {
                let mut r = BufReader::new(File::open(&files[level]).expect("open level file"));
                let mut keys = Vec::new();
                let mut buf = [0u8; 9];
                loop {
                    match r.read_exact(&mut buf) {
                        Ok(()) => {
                            let mask = u64::from_le_bytes(buf[..8].try_into().unwrap());
                            keys.push((mask, buf[8]));
                        }
                        Err(e) if e.kind() == std::io::ErrorKind::UnexpectedEof => break,
                        Err(e) => panic!("read level file: {e}"),
                    }
                }
                keys
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{parse_facets, Mode};
    use crate::oracle;
    use crate::shelling::pss_rows;

    fn toy_complex() -> crate::family::FacetFamily {
        parse_facets("a c d f\na b c f\na b c d e g\nc d e f g\n", Mode::Shelling).unwrap()
    }

    #[test]
    fn toy_complex_has_unique_word() {
        let fam = toy_complex();
        let p = pss_rows(&fam);
        let words: Vec<String> = enumerate_full_words(&p, None, WordOrder::Lexicographic)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, vec!["3,4,1,2"]);
        assert_eq!(count_full_words(&p), 1u32.into());
        assert_eq!(max_partial_length(&p), 4);
        let by_last = count_by_last_letter(&p);
        let as_u32: Vec<u32> = by_last.iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(as_u32, vec![0, 1, 0, 0]);
        let by_first = count_by_first_letter(&p, &SearchOptions::default());
        let as_u32: Vec<u32> = by_first.iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(as_u32, vec![0, 0, 1, 0]);
    }

    #[test]
    fn single_facet_word() {
        let fam = parse_facets("x", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let words: Vec<String> = enumerate_full_words(&p, None, WordOrder::Lexicographic)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, vec!["1"]);
        assert_eq!(count_full_words(&p), 1u32.into());
        assert_eq!(max_partial_length(&p), 1);
        let by_first = count_by_first_letter(&p, &SearchOptions::default());
        assert_eq!(by_first, vec![1u32.into()]);
    }

    #[test]
    fn type3_instance_counts_zero() {
        let fam = parse_facets("a b\nc d", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        assert_eq!(count_full_words(&p), 0u32.into());
        assert_eq!(
            enumerate_full_words(&p, None, WordOrder::Lexicographic).count(),
            0
        );
        assert_eq!(max_partial_length(&p), 1);
        assert!(count_by_last_letter(&p).iter().all(|c| c.is_zero()));
        assert!(count_by_first_letter(&p, &SearchOptions::default())
            .iter()
            .all(|c| c.is_zero()));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let fam = parse_facets("a b\nb c\nc d\nd a\na c", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let mut words: Vec<Word> =
            enumerate_full_words(&p, None, WordOrder::Lexicographic).collect();
        words.sort();
        let mut expected = oracle::full_words_brute(&fam);
        expected.sort();
        assert_eq!(words, expected);
        assert_eq!(count_full_words(&p), (words.len() as u32).into());
    }

    #[test]
    fn letter_counts_sum_to_total() {
        let fam = parse_facets("a b\nb c\nc d\nd a\na c", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let total = count_full_words(&p);
        let by_last = count_by_last_letter(&p);
        let by_first = count_by_first_letter(&p, &SearchOptions::default());
        let sum_last: BigUint = by_last.iter().sum();
        let sum_first: BigUint = by_first.iter().sum();
        assert_eq!(sum_last, total);
        assert_eq!(sum_first, total);
    }

    #[test]
    fn limit_stops_the_stream() {
        let fam = parse_facets("a b\nb c\nc a", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let all: Vec<Word> = enumerate_full_words(&p, None, WordOrder::Lexicographic).collect();
        assert_eq!(all.len(), 6);
        let limited: Vec<Word> =
            enumerate_full_words(&p, Some(2), WordOrder::Lexicographic).collect();
        assert_eq!(limited, all[..2].to_vec());
    }

    #[test]
    fn parallel_enumeration_reproduces_sequential_order() {
        let fam = parse_facets("a b\nb c\nc a\na d\nd b", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let sequential: Vec<Word> =
            enumerate_full_words(&p, None, WordOrder::Lexicographic).collect();
        let parallel = enumerate_collect(&p, None, WordOrder::Lexicographic, 4);
        assert_eq!(sequential, parallel);
        let limited = enumerate_collect(&p, Some(3), WordOrder::Lexicographic, 4);
        assert_eq!(limited, sequential[..3].to_vec());
    }

    #[test]
    fn parallel_count_matches_sequential() {
        let fam = parse_facets("a b\nb c\nc a\na d\nd b", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let seq = count_report(&p, &SearchOptions::default());
        let par = count_report(
            &p,
            &SearchOptions {
                threads: 4,
                ..Default::default()
            },
        );
        assert_eq!(seq.count, par.count);
        assert_eq!(seq.by_last, par.by_last);
        assert_eq!(seq.max_partial_length, par.max_partial_length);
    }

    #[test]
    fn level_keys_match_word_prefixes() {
        // keys reachable at level s are exactly the supports-with-suffix of
        // the length-(s+1) words
        let fam = parse_facets("a b\nb c\nc d\nd a", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let n = fam.len();
        let mut expected: Vec<HashSet<Key>> = vec![HashSet::new(); n];
        for len in 1..=n {
            for perm in oracle::permutations(n) {
                let prefix = &perm[..len];
                if oracle::is_shelling_sequence(&fam, prefix) {
                    let support = prefix[..len - 1]
                        .iter()
                        .fold(IndexSubset::EMPTY, |s, &a| s.with(a as usize));
                    expected[len - 1].insert((support.0, prefix[len - 1]));
                }
            }
        }
        let mut current = level_zero(&p);
        for (s, expected_level) in expected.iter().enumerate() {
            assert_eq!(current.level, s);
            let got: HashSet<Key> = current.entries.keys().copied().collect();
            assert_eq!(&got, expected_level, "level {s}");
            current = expand_level(&p, &current, 1);
        }
    }

    #[test]
    fn spilled_levels_round_trip() {
        let fam = parse_facets("a b\nb c\nc d\nd a\na c", Mode::Shelling).unwrap();
        let p = pss_rows(&fam);
        let spilled = SearchOptions {
            spill_threshold: 1,
            ..Default::default()
        };
        let in_memory = count_by_first_letter(&p, &SearchOptions::default());
        let on_disk = count_by_first_letter(&p, &spilled);
        assert_eq!(in_memory, on_disk);
    }
}
