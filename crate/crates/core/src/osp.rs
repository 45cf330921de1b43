//! Ordered set partitions of `[n]` and Fubini rankings.
//!
//! Canonical order of ordered set partitions: by number of blocks, then
//! lexicographically on the sequence of blocks, each block compared as its
//! ascending sequence of elements. Canonical text form is `4/1,3/2`; the
//! compact form `4/13/2` is accepted on input when `n <= 9`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{join, Permutation};
use crate::prime::pipe;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Sorts each block; fails unless the blocks are nonempty, disjoint and cover `1..=n`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidPartition(format!(
                        "blocks must partition 1..={n}"
                    )));
                }
                seen[e] = true;
            }
        }
        Ok(OrderedSetPartition { n, blocks })
    }

    pub(crate) fn new_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        OrderedSetPartition { n, blocks }
    }

    /// All singleton blocks in the order given by `u`.
    pub fn from_permutation(u: &Permutation) -> Self {
        OrderedSetPartition {
            n: u.len(),
            blocks: u.as_slice().iter().map(|&x| vec![x]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The blocks written one after another, as a permutation in one-line notation.
    pub fn concatenation(&self) -> Permutation {
        Permutation::new_unchecked(self.blocks.concat())
    }

    /// Whether the blocks are single elements.
    pub fn is_permutation(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn to_compact_string(&self) -> String {
        let sep = if self.n <= 9 { "" } else { "," };
        self.blocks
            .iter()
            .map(|b| join(b, sep))
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn to_fubini_ranking(&self) -> FubiniRanking {
        osp_to_fubini_ranking(self)
    }
}

impl Ord for OrderedSetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.blocks.len().cmp(&other.blocks.len()))
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl PartialOrd for OrderedSetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            f.write_str(&join(b, ","))?;
        }
        Ok(())
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyInput);
        }
        let digits = s.chars().filter(char::is_ascii_digit).count();
        let compact = !s.contains(',') && digits <= 9;
        let blocks = s
            .split('/')
            .map(|tok| {
                let tok = tok.trim();
                let parsed: Result<Vec<usize>> = if compact {
                    tok.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("unexpected {c:?} in {s:?}")))
                        })
                        .collect()
                } else {
                    tok.split(',')
                        .map(|e| {
                            e.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::Parse(format!("not an integer: {e:?}")))
                        })
                        .collect()
                };
                parsed
            })
            .collect::<Result<Vec<_>>>()?;
        OrderedSetPartition::new(blocks)
    }
}

/// Nonempty subsets of a bitmask pool, as ascending sequences in lexicographic order,
/// of size at most `limit`.
#[derive(Debug, Clone)]
struct LexSubsets {
    pool: u64,
    limit: usize,
    current: Vec<usize>,
    started: bool,
}

impl LexSubsets {
    fn new(pool: u64, limit: usize) -> Self {
        LexSubsets {
            pool,
            limit,
            current: Vec::new(),
            started: false,
        }
    }

    fn next_in_pool(&self, after: usize) -> Option<usize> {
        let rest = self.pool & !((1u64 << (after + 1)) - 1);
        (rest != 0).then(|| rest.trailing_zeros() as usize)
    }

    /// Advances `current`; returns false once exhausted.
    fn advance(&mut self) -> bool {
        if self.limit == 0 || self.pool == 0 {
            return false;
        }
        if !self.started {
            self.started = true;
            self.current.push(self.pool.trailing_zeros() as usize);
            return true;
        }
        let last = *self.current.last().expect("nonempty while running");
        if self.current.len() < self.limit {
            if let Some(e) = self.next_in_pool(last) {
                self.current.push(e);
                return true;
            }
        }
        while let Some(last) = self.current.pop() {
            if let Some(e) = self.next_in_pool(last) {
                self.current.push(e);
                return true;
            }
        }
        false
    }

    fn mask(&self) -> u64 {
        self.current.iter().fold(0, |m, &e| m | (1u64 << e))
    }
}

/// Streams ordered set partitions of `[n]` with a fixed number of blocks, in canonical order.
#[derive(Debug, Clone)]
pub struct OspsWithBlocks {
    n: usize,
    k: usize,
    /// One subset iterator per block except the last, which takes what is left.
    levels: Vec<LexSubsets>,
    done: bool,
    fresh: bool,
}

impl OspsWithBlocks {
    fn new(n: usize, k: usize) -> Self {
        let mut it = OspsWithBlocks {
            n,
            k,
            levels: Vec::with_capacity(k.saturating_sub(1)),
            done: k == 0 || k > n,
            fresh: true,
        };
        if !it.done && !it.fill_from(0) {
            it.done = true;
        }
        it
    }

    fn full_mask(&self) -> u64 {
        ((1u64 << self.n) - 1) << 1
    }

    fn remaining_before(&self, level: usize) -> u64 {
        self.levels[..level]
            .iter()
            .fold(self.full_mask(), |m, l| m & !l.mask())
    }

    /// Rebuilds levels `level..k-1` with their first subsets.
    fn fill_from(&mut self, level: usize) -> bool {
        self.levels.truncate(level);
        for j in level..self.k - 1 {
            let pool = self.remaining_before(j);
            let blocks_after = self.k - 1 - j;
            let limit = (pool.count_ones() as usize).saturating_sub(blocks_after);
            let mut subsets = LexSubsets::new(pool, limit);
            if !subsets.advance() {
                return false;
            }
            self.levels.push(subsets);
        }
        true
    }

    fn current(&self) -> OrderedSetPartition {
        let mut blocks: Vec<Vec<usize>> = self.levels.iter().map(|l| l.current.clone()).collect();
        let rest = self.remaining_before(self.levels.len());
        blocks.push((1..=self.n).filter(|&e| rest & (1u64 << e) != 0).collect());
        OrderedSetPartition::new_unchecked(self.n, blocks)
    }

    fn step(&mut self) -> bool {
        let mut level = self.levels.len();
        while level > 0 {
            level -= 1;
            if self.levels[level].advance() && self.fill_from(level + 1) {
                return true;
            }
        }
        false
    }
}

impl Iterator for OspsWithBlocks {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else if !self.step() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// All ordered set partitions of `[n]`, or only those with `block_count` blocks,
/// in canonical order.
pub fn enumerate_osps(
    n: usize,
    block_count: Option<usize>,
    limits: &Limits,
) -> Result<impl Iterator<Item = OrderedSetPartition>> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    limits.check_exhaustive(n)?;
    if n > 62 {
        return Err(Error::LimitExceeded { n, max: 62 });
    }
    let ks: Vec<usize> = match block_count {
        Some(k) if k == 0 || k > n => {
            return Err(Error::Domain(format!("block count {k} outside 1..={n}")))
        }
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    Ok(ks.into_iter().flat_map(move |k| OspsWithBlocks::new(n, k)))
}

/// A competition ranking with ties: after `c` competitors tie at rank `v`, the next rank is `v + c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FubiniRanking(Vec<usize>);

impl FubiniRanking {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        if is_fubini_ranking(&ranks) {
            Ok(FubiniRanking(ranks))
        } else {
            Err(Error::NotAFubiniRanking)
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn to_osp(&self) -> OrderedSetPartition {
        fubini_ranking_to_osp(self)
    }
}

impl fmt::Display for FubiniRanking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0, ","))
    }
}

pub fn is_fubini_ranking(ranks: &[usize]) -> bool {
    if ranks.is_empty() {
        return false;
    }
    let mut sorted = ranks.to_vec();
    sorted.sort_unstable();
    let mut expected = 1;
    let mut i = 0;
    while i < sorted.len() {
        let v = sorted[i];
        if v != expected {
            return false;
        }
        let run = sorted[i..].iter().take_while(|&&x| x == v).count();
        expected = v + run;
        i += run;
    }
    true
}

/// Every element of block `j` gets rank `1 + |B_1| + ... + |B_{j-1}|`.
pub fn osp_to_fubini_ranking(p: &OrderedSetPartition) -> FubiniRanking {
    let ones: Vec<Vec<usize>> = p.blocks.iter().map(|b| vec![1; b.len()]).collect();
    let piped = pipe(&ones).expect("blocks are nonempty");
    let ranks = p.concatenation().scatter(&piped).expect("lengths agree");
    FubiniRanking(ranks)
}

/// Level sets of the ranking, by increasing rank.
pub fn fubini_ranking_to_osp(r: &FubiniRanking) -> OrderedSetPartition {
    let n = r.0.len();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, &rank) in r.0.iter().enumerate() {
        levels[rank].push(i + 1);
    }
    let blocks = levels.into_iter().filter(|b| !b.is_empty()).collect();
    OrderedSetPartition::new_unchecked(n, blocks)
}
