//! Longest common Abelian factors of two strings.
//!
//! For a window length `d`, a window `U_i` on the first string and a window
//! `V_k` on the second jump between break points. Each pair of segments
//! (`U` sliding over `i..=bp1(i)`, `V` over `k..=bp2(k)`) is settled in O(1)
//! by [`dispatch::resolve`] and reported as a compact [`LcafMatch`].

pub mod constraint;
pub mod dispatch;

use rayon::prelude::*;
use serde::Serialize;

use crate::bench::{NoProbe, Probe, SegmentPair};
use crate::error::{Error, Result};
use crate::rle::{AlphabetMap, DiffTracker, RleString};

pub use constraint::{expand_matches, Constraint, LcafMatch};
use dispatch::Boundary;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcafResult {
    /// Length of the longest common Abelian factors; 0 when none exist.
    pub length: usize,
    pub matches: Vec<LcafMatch>,
}

impl LcafResult {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        expand_matches(&self.matches)
    }
}

/// Encodes both texts over their union alphabet.
pub fn encode_pair(t1: &[char], t2: &[char]) -> (RleString, RleString, AlphabetMap) {
    let map = AlphabetMap::from_texts([t1, t2]);
    let r1 = RleString::encode_with(t1, &map).expect("union alphabet");
    let r2 = RleString::encode_with(t2, &map).expect("union alphabet");
    (r1, r2, map)
}

/// Scans window lengths downward from `min(n1, n2)` and stops at the first
/// length with a common factor.
pub fn find_lcaf(rle1: &RleString, rle2: &RleString) -> Result<LcafResult> {
    find_lcaf_with(rle1, rle2, &mut NoProbe)
}

pub fn find_lcaf_with<P: Probe>(rle1: &RleString, rle2: &RleString, probe: &mut P) -> Result<LcafResult> {
    check_pair(rle1, rle2)?;
    for d in (1..=rle1.len().min(rle2.len())).rev() {
        let matches = scan(rle1, rle2, d, probe);
        if !matches.is_empty() {
            return Ok(LcafResult { length: d, matches });
        }
    }
    Ok(LcafResult {
        length: 0,
        matches: Vec::new(),
    })
}

/// Evaluates every window length and keeps the longest with a match.
pub fn find_lcaf_exhaustive(rle1: &RleString, rle2: &RleString) -> Result<LcafResult> {
    check_pair(rle1, rle2)?;
    let per_d: Vec<(usize, Vec<LcafMatch>)> = (1..=rle1.len().min(rle2.len()))
        .into_par_iter()
        .map(|d| (d, scan(rle1, rle2, d, &mut NoProbe)))
        .collect();
    Ok(per_d
        .into_iter()
        .filter(|(_, m)| !m.is_empty())
        .max_by_key(|(d, _)| *d)
        .map(|(length, matches)| LcafResult { length, matches })
        .unwrap_or(LcafResult {
            length: 0,
            matches: Vec::new(),
        }))
}

fn check_pair(rle1: &RleString, rle2: &RleString) -> Result<()> {
    if rle1.is_empty() || rle2.is_empty() {
        return Err(Error::EmptyInput);
    }
    assert_eq!(rle1.sigma(), rle2.sigma(), "both strings must share one alphabet");
    Ok(())
}

pub fn common_factors_of_length(rle1: &RleString, rle2: &RleString, d: usize) -> Result<Vec<LcafMatch>> {
    common_factors_of_length_with(rle1, rle2, d, &mut NoProbe)
}

pub fn common_factors_of_length_with<P: Probe>(
    rle1: &RleString,
    rle2: &RleString,
    d: usize,
    probe: &mut P,
) -> Result<Vec<LcafMatch>> {
    check_pair(rle1, rle2)?;
    let max = rle1.len().min(rle2.len());
    if d == 0 || d > max {
        return Err(Error::LengthOutOfRange { d, max });
    }
    Ok(scan(rle1, rle2, d, probe))
}

/// One segment of a sliding window: it can move `len` positions, trading `out` for `inc` at each step.
#[derive(Debug, Clone, Copy)]
struct Segment {
    len: usize,
    out: usize,
    inc: usize,
}

fn segment_at(rle: &RleString, start: usize, d: usize) -> Segment {
    let last = rle.len() - d + 1;
    let out = rle.id_at(start);
    if start == last {
        // Flush with the end of the string: nothing can enter.
        return Segment { len: 0, out, inc: out };
    }
    let enter = start + d;
    let len = (rle.next_run_start(start) - start)
        .min(rle.next_run_start(enter) - enter)
        .min(last - start);
    Segment {
        len,
        out,
        inc: rle.id_at(enter),
    }
}

fn scan<P: Probe>(rle1: &RleString, rle2: &RleString, d: usize, probe: &mut P) -> Vec<LcafMatch> {
    let pu = rle1.parikh_of_range(1, d).expect("d <= n1");
    let pv_first = rle2.parikh_of_range(1, d).expect("d <= n2");
    probe.parikh_ops(2 * rle1.sigma());
    let saved = pv_first.clone();
    let mut tracker = DiffTracker::new(pu, pv_first);
    let mut touched: Vec<usize> = Vec::new();
    let mut matches = Vec::new();

    let mut i = 1;
    loop {
        let u = segment_at(rle1, i, d);
        if u.len == 0 && i > 1 {
            break;
        }

        let mut k = 1;
        loop {
            let v = segment_at(rle2, k, d);
            if v.len == 0 && k > 1 {
                // The previous segment already ended here.
                break;
            }
            probe.segment_pair();
            probe.lcaf_segment(
                &SegmentPair {
                    d,
                    i,
                    k,
                    x_max: u.len,
                    y_max: v.len,
                },
                &tracker,
            );
            let boundary = Boundary {
                pl: u.out,
                pr: u.inc,
                ql: v.out,
                qr: v.inc,
            };
            if let Some(constraint) = dispatch::resolve(&tracker, boundary) {
                if constraint.is_satisfiable(u.len, v.len) {
                    matches.push(LcafMatch {
                        i,
                        k,
                        d,
                        x_max: u.len,
                        y_max: v.len,
                        constraint,
                    });
                }
            }
            if v.len == 0 {
                break;
            }
            tracker.shift_right(v.out, v.inc, v.len);
            touched.push(v.out);
            touched.push(v.inc);
            probe.parikh_ops(2);
            probe.window_jump();
            k += v.len;
        }

        // Rewind V to position 1.
        probe.parikh_ops(touched.len());
        for c in touched.drain(..) {
            tracker.set_right(c, saved.get(c));
        }
        if u.len == 0 {
            break;
        }
        tracker.shift_left(u.out, u.inc, u.len);
        probe.parikh_ops(2);
        probe.window_jump();
        i += u.len;
    }
    matches
}
