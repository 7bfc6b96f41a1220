use std::ops::AddAssign;

use serde::Serialize;

use crate::rle::DiffTracker;

/// Snapshot of one square-scan segment, handed to [`Probe::square_segment`]
/// before the windows jump from `i` to `i + span`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareSegment {
    pub d: usize,
    pub i: usize,
    pub span: usize,
    /// `w[beg(L_i)]`, `w[beg(R_i)]`, `w[end(R_i) + 1]` as dense ids.
    pub chars: [usize; 3],
}

/// One (U-segment, V-segment) evaluation of the common-factor scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentPair {
    pub d: usize,
    pub i: usize,
    pub k: usize,
    pub x_max: usize,
    pub y_max: usize,
}

/// Observation hooks threaded through every scan.
///
/// All methods default to no-ops, so [`NoProbe`] compiles away entirely.
pub trait Probe {
    #[inline]
    fn window_jump(&mut self) {}

    #[inline]
    fn segment_pair(&mut self) {}

    #[inline]
    fn block_inspection(&mut self) {}

    #[inline]
    fn parikh_ops(&mut self, _count: usize) {}

    #[inline]
    fn square_segment(&mut self, _segment: &SquareSegment, _tracker: &DiffTracker) {}

    #[inline]
    fn lcaf_segment(&mut self, _pair: &SegmentPair, _tracker: &DiffTracker) {}
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NoProbe;

impl Probe for NoProbe {}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WorkCounters {
    pub window_jumps: u64,
    pub segment_pairs: u64,
    pub block_inspections: u64,
    pub parikh_entry_ops: u64,
}

impl WorkCounters {
    pub fn reset(&mut self) {
        *self = Self::default();
    }
}

impl AddAssign for WorkCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.window_jumps += rhs.window_jumps;
        self.segment_pairs += rhs.segment_pairs;
        self.block_inspections += rhs.block_inspections;
        self.parikh_entry_ops += rhs.parikh_entry_ops;
    }
}

impl Probe for WorkCounters {
    #[inline]
    fn window_jump(&mut self) {
        self.window_jumps += 1;
    }

    #[inline]
    fn segment_pair(&mut self) {
        self.segment_pairs += 1;
    }

    #[inline]
    fn block_inspection(&mut self) {
        self.block_inspections += 1;
    }

    #[inline]
    fn parikh_ops(&mut self, count: usize) {
        self.parikh_entry_ops += count as u64;
    }
}

impl<P: Probe + ?Sized> Probe for &mut P {
    fn window_jump(&mut self) {
        (**self).window_jump()
    }

    fn segment_pair(&mut self) {
        (**self).segment_pair()
    }

    fn block_inspection(&mut self) {
        (**self).block_inspection()
    }

    fn parikh_ops(&mut self, count: usize) {
        (**self).parikh_ops(count)
    }

    fn square_segment(&mut self, segment: &SquareSegment, tracker: &DiffTracker) {
        (**self).square_segment(segment, tracker)
    }

    fn lcaf_segment(&mut self, pair: &SegmentPair, tracker: &DiffTracker) {
        (**self).lcaf_segment(pair, tracker)
    }
}
