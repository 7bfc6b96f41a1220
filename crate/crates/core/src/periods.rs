//! Regular Abelian periods by a block scan over the run-length encoding.
//!
//! For each block length `d` the string is cut into complete blocks
//! `w[(b-1)d+1 .. bd]` and a tail of length `n mod d`. A complete block lying
//! inside a single run settles the answer for non-unary strings at once;
//! otherwise adjacent blocks are compared over their own support only, which
//! keeps the cost of one `d` proportional to the number of runs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bench::{NoProbe, Probe, WorkCounters};
use crate::error::{Error, Result};
use crate::rle::RleString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RegularPeriod {
    pub p: usize,
    pub t: usize,
}

/// Tiling of a string by complete blocks of length `p` plus a tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub p: usize,
    pub complete_blocks: usize,
    pub tail_start: usize,
}

impl BlockDecomposition {
    pub fn new(n: usize, p: usize) -> Self {
        BlockDecomposition {
            p,
            complete_blocks: n / p,
            tail_start: n - n % p + 1,
        }
    }

    /// 1-based inclusive range of complete block `b` (1-based).
    pub fn block(&self, b: usize) -> (usize, usize) {
        ((b - 1) * self.p + 1, b * self.p)
    }
}

/// Parikh buffer that remembers which coordinates are non-zero so it can be
/// cleared without touching the whole alphabet.
struct SparseCounts {
    counts: Vec<usize>,
    touched: Vec<usize>,
}

impl SparseCounts {
    fn new(sigma: usize) -> Self {
        SparseCounts {
            counts: vec![0; sigma],
            touched: Vec::new(),
        }
    }

    fn fill<P: Probe>(&mut self, rle: &RleString, i: usize, j: usize, probe: &mut P) {
        let counts = &mut self.counts;
        let touched = &mut self.touched;
        let visited = rle.for_each_overlap(i, j, |id, len| {
            if counts[id] == 0 {
                touched.push(id);
            }
            counts[id] += len;
        });
        probe.parikh_ops(visited);
    }

    fn clear<P: Probe>(&mut self, probe: &mut P) {
        probe.parikh_ops(self.touched.len());
        for &c in &self.touched {
            self.counts[c] = 0;
        }
        self.touched.clear();
    }
}

struct Scratch {
    prev: SparseCounts,
    cur: SparseCounts,
}

impl Scratch {
    fn new(sigma: usize) -> Self {
        Scratch {
            prev: SparseCounts::new(sigma),
            cur: SparseCounts::new(sigma),
        }
    }
}

/// All regular Abelian periods `(d, n mod d)` with `1 <= d <= n / 2`,
/// ascending by `d`.
pub fn find_regular_periods(rle: &RleString) -> Vec<RegularPeriod> {
    find_regular_periods_with(rle, &mut NoProbe)
}

pub fn find_regular_periods_with<P: Probe>(rle: &RleString, probe: &mut P) -> Vec<RegularPeriod> {
    let mut scratch = Scratch::new(rle.sigma());
    (1..=rle.len() / 2)
        .filter_map(|d| check_period(rle, d, &mut scratch, probe).map(|t| RegularPeriod { p: d, t }))
        .collect()
}

/// Parallel over `d`; output order and content match [`find_regular_periods`].
pub fn find_regular_periods_par(rle: &RleString) -> Vec<RegularPeriod> {
    (1..=rle.len() / 2)
        .into_par_iter()
        .map_init(
            || Scratch::new(rle.sigma()),
            |scratch, d| check_period(rle, d, scratch, &mut NoProbe).map(|t| RegularPeriod { p: d, t }),
        )
        .flatten()
        .collect()
}

/// Counted variant of [`find_regular_periods_par`]; per-worker counters are
/// summed in `d` order.
pub fn find_regular_periods_counted_par(rle: &RleString) -> (Vec<RegularPeriod>, WorkCounters) {
    let per_d: Vec<(Option<RegularPeriod>, WorkCounters)> = (1..=rle.len() / 2)
        .into_par_iter()
        .map_init(
            || Scratch::new(rle.sigma()),
            |scratch, d| {
                let mut counters = WorkCounters::default();
                let found = check_period(rle, d, scratch, &mut counters).map(|t| RegularPeriod { p: d, t });
                (found, counters)
            },
        )
        .collect();
    let mut total = WorkCounters::default();
    let mut periods = Vec::new();
    for (found, counters) in per_d {
        total += counters;
        periods.extend(found);
    }
    (periods, total)
}

/// Decides whether `(d, n mod d)` is a regular Abelian period, returning the
/// tail length when it is.
pub fn is_regular_period(rle: &RleString, d: usize) -> Result<Option<usize>> {
    is_regular_period_with(rle, d, &mut NoProbe)
}

pub fn is_regular_period_with<P: Probe>(rle: &RleString, d: usize, probe: &mut P) -> Result<Option<usize>> {
    let max = rle.len() / 2;
    if d == 0 || d > max {
        return Err(Error::LengthOutOfRange { d, max });
    }
    Ok(check_period(rle, d, &mut Scratch::new(rle.sigma()), probe))
}

fn check_period<P: Probe>(rle: &RleString, d: usize, scratch: &mut Scratch, probe: &mut P) -> Option<usize> {
    let n = rle.len();
    let tail = n % d;
    if rle.is_unary() {
        return Some(tail);
    }

    let blocks = BlockDecomposition::new(n, d);
    for b in 1..=blocks.complete_blocks {
        probe.block_inspection();
        let (start, end) = blocks.block(b);
        if rle.succ_at(start) == rle.succ_at(end) {
            // A unary block forces every block, and the tail, to be unary.
            return None;
        }
    }

    let Scratch { prev, cur } = scratch;
    let (s, e) = blocks.block(1);
    prev.fill(rle, s, e, probe);
    let mut verdict = Some(tail);
    for b in 2..=blocks.complete_blocks {
        let (s, e) = blocks.block(b);
        cur.fill(rle, s, e, probe);
        // Equal lengths, so agreement on cur's support means equality.
        probe.parikh_ops(cur.touched.len());
        if cur.touched.iter().any(|&c| cur.counts[c] != prev.counts[c]) {
            verdict = None;
            break;
        }
        prev.clear(probe);
        std::mem::swap(prev, cur);
    }

    if verdict.is_some() && tail > 0 {
        cur.clear(probe);
        cur.fill(rle, blocks.tail_start, n, probe);
        probe.parikh_ops(cur.touched.len());
        if cur.touched.iter().any(|&c| cur.counts[c] > prev.counts[c]) {
            verdict = None;
        }
    }
    prev.clear(probe);
    cur.clear(probe);
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::AlphabetMap;

    fn rle(s: &str) -> RleString {
        RleString::encode(&s.chars().collect::<Vec<_>>()).0
    }

    fn fig1() -> RleString {
        let map = AlphabetMap::from_chars(['a', 'b']);
        let runs = crate::rle::parse_rle_tokens("a:2 b:2 a:3 b:1 a:1 b:1 a:4 b:2 a:1").unwrap();
        RleString::from_char_runs(&runs, &map).unwrap()
    }

    #[test]
    fn figure_string_has_period_3_2() {
        let r = fig1();
        assert_eq!(r.len(), 17);
        assert!(find_regular_periods(&r).contains(&RegularPeriod { p: 3, t: 2 }));
        assert_eq!(is_regular_period(&r, 3), Ok(Some(2)));
    }

    #[test]
    fn unary_strings_take_every_d() {
        let r = rle("aaaa");
        assert_eq!(
            find_regular_periods(&r),
            vec![RegularPeriod { p: 1, t: 0 }, RegularPeriod { p: 2, t: 0 }]
        );
        let r = rle("aaaaaaa");
        for d in 1..=3 {
            assert_eq!(is_regular_period(&r, d), Ok(Some(7 % d)));
        }
    }

    #[test]
    fn small_cases() {
        // Pinned by the definitional oracle: "a" vs "b" differ.
        assert!(find_regular_periods(&rle("ab")).is_empty());
        assert_eq!(is_regular_period(&rle("aabb"), 2), Ok(None));
        assert_eq!(find_regular_periods(&rle("abab")), vec![RegularPeriod { p: 2, t: 0 }]);
        assert!(find_regular_periods(&rle("a")).is_empty());
        assert!(find_regular_periods(&rle("")).is_empty());
    }

    #[test]
    fn out_of_range_lengths() {
        let r = rle("abcab");
        assert_eq!(is_regular_period(&r, 0), Err(Error::LengthOutOfRange { d: 0, max: 2 }));
        assert_eq!(is_regular_period(&r, 3), Err(Error::LengthOutOfRange { d: 3, max: 2 }));
    }

    #[test]
    fn unary_block_exits_early() {
        // Block 1 = "aaa" lies in one run; nothing after it is inspected.
        let r = rle("aaabababab");
        let mut counters = WorkCounters::default();
        assert_eq!(is_regular_period_with(&r, 3, &mut counters), Ok(None));
        assert_eq!(counters.block_inspections, 1);
        assert_eq!(counters.parikh_entry_ops, 0);
    }

    #[test]
    fn tail_must_be_sub_permutation() {
        // blocks "ab","ba" agree; tail "b" fits, tail "c" does not.
        assert_eq!(is_regular_period(&rle("abbab"), 2), Ok(Some(1)));
        assert_eq!(is_regular_period(&rle("abbac"), 2), Ok(None));
    }

    #[test]
    fn parallel_matches_sequential() {
        let r = fig1();
        assert_eq!(find_regular_periods_par(&r), find_regular_periods(&r));
        let mut seq = WorkCounters::default();
        let a = find_regular_periods_with(&r, &mut seq);
        let (b, par) = find_regular_periods_counted_par(&r);
        assert_eq!(a, b);
        assert_eq!(seq, par);
    }
}
