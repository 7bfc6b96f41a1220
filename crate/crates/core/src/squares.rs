//! All Abelian squares via two adjacent windows that jump between break
//! points of the run-length encoding.
//!
//! For half length `d` the left window is `L_i = w[i..i+d-1]` and the right
//! window `R_i = w[i+d..i+2d-1]`. Between `i` and the break point
//! `bp(i) = i + min{D1, D2, D3}` every unit slide removes `c1 = w[i]` from the
//! left window, moves `c2 = w[i+d]` from the right window to the left one and
//! adds `c3 = w[i+2d]` to the right window. The left-minus-right difference
//! therefore moves along the fixed direction `-e(c1) + 2e(c2) - e(c3)`, and
//! the square starts inside `(i, bp(i)]` follow from a handful of integer
//! tests on the mismatched coordinates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bench::{NoProbe, Probe, SquareSegment, WorkCounters};
use crate::error::{Error, Result};
use crate::rle::{DiffTracker, RleString};

/// Maximal run `<first_start, last_start, half_len>` of consecutive Abelian
/// square start positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareRun {
    pub first_start: usize,
    pub last_start: usize,
    pub half_len: usize,
}

impl SquareRun {
    pub fn starts(&self) -> std::ops::RangeInclusive<usize> {
        self.first_start..=self.last_start
    }
}

/// Square starts strictly after the segment start `i`, as offsets from `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SegmentSquares {
    None,
    /// Every offset in `1..=span`.
    All,
    One(usize),
}

/// Case analysis for one segment. `span = bp(i) - i` after clamping.
pub(crate) fn segment_squares(tracker: &DiffTracker, [c1, c2, c3]: [usize; 3], span: usize) -> SegmentSquares {
    let k = tracker.mismatch_count();
    if k >= 4 {
        return SegmentSquares::None;
    }
    let mismatched = tracker.mismatch_set().expect("at most three mismatches");
    // Only c1, c2 and c3 change counts inside the segment.
    if mismatched.iter().any(|&c| c != c1 && c != c2 && c != c3) {
        return SegmentSquares::None;
    }

    let within = |z: i64| z > 0 && z as usize <= span;
    match k {
        0 if c1 == c2 && c2 == c3 => SegmentSquares::All,
        0 => SegmentSquares::None,
        2 => {
            let (mut p, mut q) = (mismatched[0], mismatched[1]);
            if tracker.delta(p) < 0 {
                std::mem::swap(&mut p, &mut q);
            }
            let x = tracker.delta(p);
            if c1 == p && c2 == q && c3 == q && within(x) {
                // Left loses p and gains q; the right window is unchanged.
                SegmentSquares::One(x as usize)
            } else if c1 == p && c3 == p && c2 == q && x % 2 == 0 && within(x / 2) {
                // Both windows move p -> q and q -> p at once.
                SegmentSquares::One((x / 2) as usize)
            } else if c1 == q && c2 == q && c3 == p && within(x) {
                // Left is unchanged; right loses q and gains p.
                SegmentSquares::One(x as usize)
            } else {
                SegmentSquares::None
            }
        }
        3 => {
            // The guard forces {c1, c2, c3} to be the three mismatched ids.
            let x = tracker.delta(c1);
            if x > 0 && tracker.delta(c3) == x && -tracker.delta(c2) == 2 * x && within(x) {
                SegmentSquares::One(x as usize)
            } else {
                SegmentSquares::None
            }
        }
        _ => {
            debug_assert_ne!(
                k, 1,
                "Parikh vectors of equal-length windows differ in >= 2 coordinates"
            );
            SegmentSquares::None
        }
    }
}

/// Streams square start positions (non-decreasing) into maximal runs.
struct RunMerger {
    d: usize,
    open: Option<(usize, usize)>,
    out: Vec<SquareRun>,
}

impl RunMerger {
    fn new(d: usize) -> Self {
        RunMerger {
            d,
            open: None,
            out: Vec::new(),
        }
    }

    fn push_range(&mut self, from: usize, to: usize) {
        match &mut self.open {
            Some((_, last)) if from <= *last + 1 => *last = (*last).max(to),
            _ => {
                self.flush();
                self.open = Some((from, to));
            }
        }
    }

    fn flush(&mut self) {
        if let Some((first, last)) = self.open.take() {
            self.out.push(SquareRun {
                first_start: first,
                last_start: last,
                half_len: self.d,
            });
        }
    }

    fn finish(mut self) -> Vec<SquareRun> {
        self.flush();
        self.out
    }
}

/// Every Abelian square, grouped into maximal runs sorted by
/// `(half_len, first_start)`.
pub fn find_all_squares(rle: &RleString) -> Vec<SquareRun> {
    find_all_squares_with(rle, &mut NoProbe)
}

pub fn find_all_squares_with<P: Probe>(rle: &RleString, probe: &mut P) -> Vec<SquareRun> {
    (1..=rle.len() / 2).flat_map(|d| scan(rle, d, probe)).collect()
}

/// Squares whose half length lies in `range`; the range is clamped to
/// `1..=n/2`.
pub fn find_squares_in_range(rle: &RleString, range: std::ops::RangeInclusive<usize>) -> Vec<SquareRun> {
    let lo = (*range.start()).max(1);
    let hi = (*range.end()).min(rle.len() / 2);
    (lo..=hi).flat_map(|d| scan(rle, d, &mut NoProbe)).collect()
}

/// Parallel over half lengths; identical output to [`find_all_squares`].
pub fn find_all_squares_par(rle: &RleString) -> Vec<SquareRun> {
    find_squares_in_range_par(rle, 1..=rle.len() / 2)
}

pub fn find_squares_in_range_par(rle: &RleString, range: std::ops::RangeInclusive<usize>) -> Vec<SquareRun> {
    let lo = (*range.start()).max(1);
    let hi = (*range.end()).min(rle.len() / 2);
    (lo..=hi)
        .into_par_iter()
        .map(|d| scan(rle, d, &mut NoProbe))
        .collect::<Vec<_>>()
        .concat()
}

/// Parallel counted run; per-`d` counters are reduced in `d` order.
pub fn find_all_squares_counted_par(rle: &RleString) -> (Vec<SquareRun>, WorkCounters) {
    let per_d: Vec<(Vec<SquareRun>, WorkCounters)> = (1..=rle.len() / 2)
        .into_par_iter()
        .map(|d| {
            let mut counters = WorkCounters::default();
            (scan(rle, d, &mut counters), counters)
        })
        .collect();
    let mut total = WorkCounters::default();
    let mut runs = Vec::new();
    for (r, c) in per_d {
        runs.extend(r);
        total += c;
    }
    (runs, total)
}

pub fn find_squares_of_length(rle: &RleString, d: usize) -> Result<Vec<SquareRun>> {
    find_squares_of_length_with(rle, d, &mut NoProbe)
}

pub fn find_squares_of_length_with<P: Probe>(rle: &RleString, d: usize, probe: &mut P) -> Result<Vec<SquareRun>> {
    let max = rle.len() / 2;
    if d == 0 || d > max {
        return Err(Error::LengthOutOfRange { d, max });
    }
    Ok(scan(rle, d, probe))
}

fn scan<P: Probe>(rle: &RleString, d: usize, probe: &mut P) -> Vec<SquareRun> {
    let n = rle.len();
    let last = n - 2 * d + 1;

    let left = rle.parikh_of_range(1, d).expect("d <= n/2");
    let right = rle.parikh_of_range(d + 1, 2 * d).expect("d <= n/2");
    probe.parikh_ops(rle.sigma() + rle.for_each_overlap(1, 2 * d, |_, _| {}));
    let mut tracker = DiffTracker::new(left, right);
    let mut runs = RunMerger::new(d);

    let mut i = 1;
    loop {
        if tracker.mismatch_count() == 0 {
            runs.push_range(i, i);
        }
        if i == last {
            break;
        }

        let (bl, br, er) = (i, i + d, i + 2 * d);
        let span = (rle.succ_at(bl) - bl)
            .min(rle.succ_at(br) - br)
            .min(rle.succ_at(er) - er)
            .min(last - i);
        let chars = [rle.id_at(bl), rle.id_at(br), rle.id_at(er)];
        probe.square_segment(&SquareSegment { d, i, span, chars }, &tracker);

        match segment_squares(&tracker, chars, span) {
            SegmentSquares::None => {}
            SegmentSquares::All => runs.push_range(i + 1, i + span),
            SegmentSquares::One(z) => runs.push_range(i + z, i + z),
        }

        let [c1, c2, c3] = chars;
        tracker.shift_left(c1, c2, span);
        tracker.shift_right(c2, c3, span);
        probe.parikh_ops(4);
        probe.window_jump();
        i += span;
    }
    runs.finish()
}
