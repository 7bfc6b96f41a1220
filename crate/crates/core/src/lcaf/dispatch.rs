//! Decides, for one pair of window segments, which slide offsets `(x, y)`
//! make the two windows Abelian equivalent.
//!
//! While the window on the first string slides by `x`, `x` copies of
//! `c_pl = w1[i]` leave it and `x` copies of `c_pr = w1[i+d]` enter; likewise
//! `y` copies of `c_ql` and `c_qr` on the second string. Writing `A` and `B`
//! for the Parikh vectors at the segment starts, equivalence at `(x, y)` is a
//! small integer system over the four boundary characters. [`by_case`]
//! resolves it with closed forms keyed on the equality pattern of those
//! characters; [`solve_linear`] solves the same system by elimination and
//! covers the three-way ties that have no closed form.

use crate::rle::DiffTracker;

use super::constraint::Constraint;

/// Dense ids of the four boundary characters. A window that cannot slide
/// (segment length zero) reports its right character equal to its left one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boundary {
    pub pl: usize,
    pub pr: usize,
    pub ql: usize,
    pub qr: usize,
}

/// Equality pattern of `(c_pl, c_pr, c_ql, c_qr)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// `pl = pr` and `ql = qr`: neither window changes.
    Stationary,
    /// `pl = ql != pr = qr`.
    Parallel,
    /// `pr != pl = ql != qr`, `pr != qr`.
    LeftShared,
    /// `pl != pr = qr != ql`, `pl != ql`.
    RightShared,
    /// `pl = qr != pr = ql`.
    Crossed,
    /// All four distinct.
    Distinct,
    /// `ql != pl = pr != qr`, `ql != qr`.
    FirstStationary,
    /// `pl != ql = qr != pr`, `pl != pr`.
    SecondStationary,
    /// `pr != pl = qr != ql`, `pr != ql`.
    Backslash,
    /// `pl != ql = pr != qr`, `pl != qr`.
    Slash,
    /// Three of the four coincide and the fourth differs.
    ThreeWayTie,
}

pub fn classify(b: Boundary) -> Pattern {
    let Boundary { pl, pr, ql, qr } = b;
    match (pl == pr, ql == qr, pl == ql, pr == qr, pl == qr, pr == ql) {
        (true, true, ..) => Pattern::Stationary,
        (true, false, false, _, false, _) => Pattern::FirstStationary,
        (false, true, false, _, _, false) => Pattern::SecondStationary,
        (true, false, ..) | (false, true, ..) => Pattern::ThreeWayTie,
        (false, false, true, true, ..) => Pattern::Parallel,
        (false, false, true, false, ..) => Pattern::LeftShared,
        (false, false, false, true, ..) => Pattern::RightShared,
        (false, false, false, false, true, true) => Pattern::Crossed,
        (false, false, false, false, true, false) => Pattern::Backslash,
        (false, false, false, false, false, true) => Pattern::Slash,
        (false, false, false, false, false, false) => Pattern::Distinct,
    }
}

/// Counts outside the boundary characters never change during the slides,
/// so they must already agree.
pub fn passes_guard(t: &DiffTracker, b: Boundary) -> bool {
    match t.mismatch_set() {
        None => false,
        Some(set) => set.iter().all(|&c| c == b.pl || c == b.pr || c == b.ql || c == b.qr),
    }
}

/// Guarded resolution: closed forms where one exists, elimination otherwise.
pub fn resolve(t: &DiffTracker, b: Boundary) -> Option<Constraint> {
    if !passes_guard(t, b) {
        return None;
    }
    match classify(b) {
        Pattern::ThreeWayTie => solve_linear(t, b),
        pattern => by_case(t, b, pattern),
    }
}

/// Closed-form constraint for `pattern`, assuming the guard holds. Returns
/// `None` when the pattern's consistency condition fails. Range clipping is
/// left to the caller.
pub fn by_case(t: &DiffTracker, b: Boundary, pattern: Pattern) -> Option<Constraint> {
    let a = |c: usize| t.left(c) as i64;
    let bb = |c: usize| t.right(c) as i64;
    let Boundary { pl, pr, ql, qr } = b;
    let point = |x: i64, y: i64| Some(Constraint::Point { x, y });

    match pattern {
        Pattern::Stationary => (t.mismatch_count() == 0).then_some(Constraint::All),
        Pattern::Parallel => {
            // max(p_l) - max(q_l) = min(q_r) - min(p_r)
            let c = a(pl) - bb(ql);
            (c == bb(qr) - a(pr)).then_some(Constraint::DiffLine { c })
        }
        Pattern::LeftShared => {
            let x = bb(pr) - a(pr);
            let y = a(qr) - bb(qr);
            if a(pl) - x == bb(ql) - y {
                point(x, y)
            } else {
                None
            }
        }
        Pattern::RightShared => {
            let x = a(pl) - bb(pl);
            let y = bb(ql) - a(ql);
            if a(pr) + x == bb(qr) + y {
                point(x, y)
            } else {
                None
            }
        }
        Pattern::Crossed => {
            // max(q_l) - min(p_r) = max(p_l) - min(q_r)
            let c = bb(ql) - a(pr);
            (c == a(pl) - bb(qr)).then_some(Constraint::SumLine { c })
        }
        Pattern::Distinct => {
            let x = a(pl) - bb(pl);
            let y = bb(ql) - a(ql);
            if x == bb(pr) - a(pr) && y == a(qr) - bb(qr) {
                point(x, y)
            } else {
                None
            }
        }
        Pattern::FirstStationary => {
            let y = bb(ql) - a(ql);
            (y == a(qr) - bb(qr) && a(pl) == bb(pl)).then_some(Constraint::FixedYFreeX { y })
        }
        Pattern::SecondStationary => {
            let x = a(pl) - bb(pl);
            (x == bb(pr) - a(pr) && a(ql) == bb(ql)).then_some(Constraint::FixedXFreeY { x })
        }
        Pattern::Backslash => {
            let x = bb(pr) - a(pr);
            let y = bb(ql) - a(ql);
            if x + y == a(pl) - bb(qr) {
                point(x, y)
            } else {
                None
            }
        }
        Pattern::Slash => {
            let x = a(pl) - bb(pl);
            let y = a(qr) - bb(qr);
            if x + y == bb(ql) - a(pr) {
                point(x, y)
            } else {
                None
            }
        }
        Pattern::ThreeWayTie => solve_linear(t, b),
    }
}

/// Solution set of a system `alpha*x + beta*y = gamma` built one equation at
/// a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Solutions {
    Everything,
    Line { alpha: i64, beta: i64, gamma: i64 },
    Point(i64, i64),
    Nothing,
}

impl Solutions {
    fn intersect(self, alpha: i64, beta: i64, gamma: i64) -> Solutions {
        if alpha == 0 && beta == 0 {
            return if gamma == 0 { self } else { Solutions::Nothing };
        }
        match self {
            Solutions::Nothing => Solutions::Nothing,
            Solutions::Everything => Solutions::Line { alpha, beta, gamma },
            Solutions::Point(x, y) => {
                if alpha * x + beta * y == gamma {
                    self
                } else {
                    Solutions::Nothing
                }
            }
            Solutions::Line {
                alpha: a1,
                beta: b1,
                gamma: g1,
            } => {
                let det = a1 * beta - alpha * b1;
                if det == 0 {
                    if a1 * gamma == alpha * g1 && b1 * gamma == beta * g1 {
                        self
                    } else {
                        Solutions::Nothing
                    }
                } else {
                    let xn = g1 * beta - gamma * b1;
                    let yn = a1 * gamma - alpha * g1;
                    if xn % det == 0 && yn % det == 0 {
                        Solutions::Point(xn / det, yn / det)
                    } else {
                        Solutions::Nothing
                    }
                }
            }
        }
    }
}

/// Solves `A[c] + x*a[c] = B[c] + y*b[c]` over the boundary characters by
/// elimination, with `a = e(pr) - e(pl)` and `b = e(qr) - e(ql)`. Assumes the
/// guard holds.
pub fn solve_linear(t: &DiffTracker, b: Boundary) -> Option<Constraint> {
    let Boundary { pl, pr, ql, qr } = b;
    let unit = |c: usize, plus: usize, minus: usize| (c == plus) as i64 - (c == minus) as i64;

    let mut coords = [pl, pr, ql, qr];
    coords.sort_unstable();
    let mut sol = Solutions::Everything;
    let mut prev = None;
    for c in coords {
        if prev == Some(c) {
            continue;
        }
        prev = Some(c);
        let alpha = unit(c, pr, pl);
        let beta = -unit(c, qr, ql);
        sol = sol.intersect(alpha, beta, -t.delta(c));
    }

    match sol {
        Solutions::Nothing => None,
        Solutions::Everything => Some(Constraint::All),
        Solutions::Point(x, y) => Some(Constraint::Point { x, y }),
        Solutions::Line { alpha, beta, gamma } => {
            let s = if alpha < 0 || (alpha == 0 && beta < 0) { -1 } else { 1 };
            match (alpha * s, beta * s, gamma * s) {
                (1, -1, c) => Some(Constraint::DiffLine { c }),
                (1, 1, c) => Some(Constraint::SumLine { c }),
                (1, 0, x) => Some(Constraint::FixedXFreeY { x }),
                (0, 1, y) => Some(Constraint::FixedYFreeX { y }),
                other => unreachable!("unit coefficients only, got {other:?}"),
            }
        }
    }
}
