//! Brute-force reference implementations over plain text.
//!
//! Nothing here touches the run-length encoding: characters get their own
//! dense ids and every count is maintained one position at a time.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::bench::{NoProbe, Probe, WorkCounters};
use crate::error::{Error, Result};
use crate::periods::RegularPeriod;
use crate::squares::SquareRun;

fn dense_ids(texts: &[&[char]]) -> (Vec<Vec<usize>>, usize) {
    let mut ids = BTreeMap::new();
    for t in texts {
        for &c in t.iter() {
            ids.entry(c).or_insert(0);
        }
    }
    for (k, v) in ids.values_mut().enumerate() {
        *v = k;
    }
    let mapped = texts.iter().map(|t| t.iter().map(|c| ids[c]).collect()).collect();
    (mapped, ids.len())
}

/// Groups sorted start positions into maximal runs of consecutive values.
fn group_runs(starts: &[usize], d: usize, out: &mut Vec<SquareRun>) {
    let mut iter = starts.iter().copied();
    let Some(first) = iter.next() else { return };
    let (mut lo, mut hi) = (first, first);
    for s in iter {
        if s == hi + 1 {
            hi = s;
        } else {
            out.push(SquareRun {
                first_start: lo,
                last_start: hi,
                half_len: d,
            });
            lo = s;
            hi = s;
        }
    }
    out.push(SquareRun {
        first_start: lo,
        last_start: hi,
        half_len: d,
    });
}

/// All Abelian squares, sliding two adjacent windows one position at a time.
pub fn naive_squares(text: &[char]) -> Vec<SquareRun> {
    naive_squares_with(text, &mut NoProbe)
}

pub fn naive_squares_with<P: Probe>(text: &[char], probe: &mut P) -> Vec<SquareRun> {
    let (ids, sigma) = dense_ids(&[text]);
    let mut out = Vec::new();
    for d in 1..=text.len() / 2 {
        scan_squares(&ids[0], sigma, d, probe, &mut out);
    }
    out
}

/// Parallel over `d` with one counter set per length, summed in `d` order.
pub fn naive_squares_counted_par(text: &[char]) -> (Vec<SquareRun>, WorkCounters) {
    let (ids, sigma) = dense_ids(&[text]);
    let per_d: Vec<(Vec<SquareRun>, WorkCounters)> = (1..=text.len() / 2)
        .into_par_iter()
        .map(|d| {
            let mut counters = WorkCounters::default();
            let mut runs = Vec::new();
            scan_squares(&ids[0], sigma, d, &mut counters, &mut runs);
            (runs, counters)
        })
        .collect();
    let mut all = Vec::new();
    let mut total = WorkCounters::default();
    for (runs, counters) in per_d {
        all.extend(runs);
        total += counters;
    }
    (all, total)
}

/// Squares with half length `d`; `d` must lie in `1..=n/2`.
pub fn naive_squares_of_length(text: &[char], d: usize) -> Result<Vec<SquareRun>> {
    naive_squares_of_length_with(text, d, &mut NoProbe)
}

pub fn naive_squares_of_length_with<P: Probe>(text: &[char], d: usize, probe: &mut P) -> Result<Vec<SquareRun>> {
    let max = text.len() / 2;
    if d == 0 || d > max {
        return Err(Error::LengthOutOfRange { d, max });
    }
    let (ids, sigma) = dense_ids(&[text]);
    let mut out = Vec::new();
    scan_squares(&ids[0], sigma, d, probe, &mut out);
    Ok(out)
}

fn scan_squares<P: Probe>(w: &[usize], sigma: usize, d: usize, probe: &mut P, out: &mut Vec<SquareRun>) {
    let n = w.len();
    // delta[c] = count in left window minus count in right window.
    let mut delta = vec![0i64; sigma];
    for &c in &w[..d] {
        delta[c] += 1;
    }
    for &c in &w[d..2 * d] {
        delta[c] -= 1;
    }
    probe.parikh_ops(2 * d + sigma);
    let mut diff = delta.iter().filter(|&&v| v != 0).count();

    let bump = |delta: &mut [i64], diff: &mut usize, c: usize, by: i64| {
        let before = delta[c];
        delta[c] += by;
        match (before == 0, delta[c] == 0) {
            (true, false) => *diff += 1,
            (false, true) => *diff -= 1,
            _ => {}
        }
    };

    let mut starts = Vec::new();
    let mut i = 0;
    loop {
        if diff == 0 {
            starts.push(i + 1);
        }
        if i + 2 * d == n {
            break;
        }
        let (c1, c2, c3) = (w[i], w[i + d], w[i + 2 * d]);
        bump(&mut delta, &mut diff, c1, -1);
        bump(&mut delta, &mut diff, c2, 2);
        bump(&mut delta, &mut diff, c3, -1);
        probe.parikh_ops(4);
        i += 1;
    }
    group_runs(&starts, d, out);
}

/// Regular Abelian periods by recounting every block from scratch.
pub fn naive_periods(text: &[char]) -> Vec<RegularPeriod> {
    let (ids, sigma) = dense_ids(&[text]);
    let w = &ids[0];
    let n = w.len();
    let count = |s: &[usize]| {
        let mut v = vec![0usize; sigma];
        for &c in s {
            v[c] += 1;
        }
        v
    };
    let mut out = Vec::new();
    for p in 1..=n / 2 {
        let first = count(&w[..p]);
        let blocks_agree = w[..n - n % p].chunks(p).all(|b| count(b) == first);
        let tail = count(&w[n - n % p..]);
        let tail_fits = tail.iter().zip(&first).all(|(t, f)| t <= f);
        if blocks_agree && tail_fits {
            out.push(RegularPeriod { p, t: n % p });
        }
    }
    out
}

/// Longest common Abelian factor length with every pair of 1-based start
/// positions, sorted. Length 0 with no pairs when the strings share no
/// character.
pub fn naive_lcaf(t1: &[char], t2: &[char]) -> Result<(usize, Vec<(usize, usize)>)> {
    if t1.is_empty() || t2.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (ids, sigma) = dense_ids(&[t1, t2]);
    for d in (1..=t1.len().min(t2.len())).rev() {
        let mut by_vector: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (pos, v) in windows(&ids[0], sigma, d) {
            by_vector.entry(v).or_default().push(pos);
        }
        let mut pairs = Vec::new();
        for (pos2, v) in windows(&ids[1], sigma, d) {
            if let Some(list) = by_vector.get(&v) {
                pairs.extend(list.iter().map(|&p1| (p1, pos2)));
            }
        }
        if !pairs.is_empty() {
            pairs.sort_unstable();
            return Ok((d, pairs));
        }
    }
    Ok((0, Vec::new()))
}

/// Parikh vectors of all length-`d` windows, keyed by 1-based start.
fn windows(w: &[usize], sigma: usize, d: usize) -> Vec<(usize, Vec<usize>)> {
    let mut cur = vec![0usize; sigma];
    for &c in &w[..d] {
        cur[c] += 1;
    }
    let mut out = vec![(1, cur.clone())];
    for i in d..w.len() {
        cur[w[i - d]] -= 1;
        cur[w[i]] += 1;
        out.push((i - d + 2, cur.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    fn decode(runs: &[(char, usize)]) -> Vec<char> {
        runs.iter().flat_map(|&(c, k)| std::iter::repeat_n(c, k)).collect()
    }

    fn run(first_start: usize, last_start: usize, half_len: usize) -> SquareRun {
        SquareRun {
            first_start,
            last_start,
            half_len,
        }
    }

    fn recount_starts(w: &[char], d: usize) -> Vec<usize> {
        let count = |s: &[char]| {
            let mut v: Vec<char> = s.to_vec();
            v.sort_unstable();
            v
        };
        (0..=w.len() - 2 * d)
            .filter(|&i| count(&w[i..i + d]) == count(&w[i + d..i + 2 * d]))
            .map(|i| i + 1)
            .collect()
    }

    #[test]
    fn tiny_squares() {
        assert_eq!(naive_squares(&chars("aa")), vec![run(1, 1, 1)]);
        assert!(naive_squares(&chars("ab")).is_empty());
        assert!(naive_squares(&chars("")).is_empty());
    }

    #[test]
    fn walkthrough_squares() {
        let w = decode(&[('a', 12), ('b', 4), ('a', 3), ('c', 2), ('d', 2), ('c', 2), ('a', 2)]);
        assert_eq!(w.len(), 27);
        assert_eq!(
            naive_squares_of_length(&w, 4).unwrap(),
            vec![run(1, 5, 4), run(11, 11, 4), run(19, 19, 4)]
        );
    }

    #[test]
    fn squares_match_full_recount() {
        for s in ["abba", "aabbabab", "abcabcacbbca", "aaaaaa", "babba", "abacabadabacaba"] {
            let w = chars(s);
            for d in 1..=w.len() / 2 {
                let fast: Vec<usize> = naive_squares_of_length(&w, d)
                    .unwrap()
                    .iter()
                    .flat_map(|r| r.starts())
                    .collect();
                assert_eq!(fast, recount_starts(&w, d), "{s} d={d}");
            }
        }
    }

    #[test]
    fn periods_examples() {
        let fig = chars("aabbaaababaaaabba");
        assert!(naive_periods(&fig).contains(&RegularPeriod { p: 3, t: 2 }));
        assert_eq!(
            naive_periods(&chars("aaaa")),
            vec![RegularPeriod { p: 1, t: 0 }, RegularPeriod { p: 2, t: 0 }]
        );
        assert_eq!(naive_periods(&chars("abab")), vec![RegularPeriod { p: 2, t: 0 }]);
        assert!(naive_periods(&chars("ab")).is_empty());
    }

    #[test]
    fn lcaf_examples() {
        assert_eq!(naive_lcaf(&chars("a"), &chars("a")), Ok((1, vec![(1, 1)])));
        assert_eq!(naive_lcaf(&chars("ab"), &chars("ba")), Ok((2, vec![(1, 1)])));
        assert_eq!(naive_lcaf(&chars("ab"), &chars("cd")), Ok((0, vec![])));
        assert_eq!(naive_lcaf(&chars(""), &chars("a")), Err(Error::EmptyInput));
    }

    #[test]
    fn lcaf_walkthrough_pair() {
        // "aacbbbcc" and "caaccbbb" are the only pair of length 8.
        let got = naive_lcaf(&chars("aaaaacbbbcc"), &chars("cccaaccbbbb")).unwrap();
        assert_eq!(got, (8, vec![(4, 3)]));
    }
}
