use std::fmt;

use serde::{Deserialize, Serialize};

/// Relation between the slide offsets `x` (on the first string) and `y` (on
/// the second) that yields a common Abelian factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Constraint {
    /// Every `(x, y)` in the box.
    All,
    /// `x - y = c`.
    DiffLine {
        c: i64,
    },
    /// `x + y = c`.
    SumLine {
        c: i64,
    },
    Point {
        x: i64,
        y: i64,
    },
    /// `y = y0`, any `x`.
    FixedYFreeX {
        y: i64,
    },
    /// `x = x0`, any `y`.
    FixedXFreeY {
        x: i64,
    },
}

impl Constraint {
    pub fn kind(&self) -> &'static str {
        match self {
            Constraint::All => "all",
            Constraint::DiffLine { .. } => "diff_line",
            Constraint::SumLine { .. } => "sum_line",
            Constraint::Point { .. } => "point",
            Constraint::FixedYFreeX { .. } => "fixed_y",
            Constraint::FixedXFreeY { .. } => "fixed_x",
        }
    }

    pub fn admits(&self, x: i64, y: i64) -> bool {
        match *self {
            Constraint::All => true,
            Constraint::DiffLine { c } => x - y == c,
            Constraint::SumLine { c } => x + y == c,
            Constraint::Point { x: px, y: py } => x == px && y == py,
            Constraint::FixedYFreeX { y: fy } => y == fy,
            Constraint::FixedXFreeY { x: fx } => x == fx,
        }
    }

    /// Range of `x` in `0..=x_max` with at least one admissible `y` in
    /// `0..=y_max`; empty when `lo > hi`.
    fn x_range(&self, x_max: i64, y_max: i64) -> (i64, i64) {
        match *self {
            Constraint::All => (0, x_max),
            Constraint::DiffLine { c } => (c.max(0), x_max.min(y_max + c)),
            Constraint::SumLine { c } => ((c - y_max).max(0), x_max.min(c)),
            Constraint::Point { x, y } if (0..=y_max).contains(&y) => (x.max(0), x.min(x_max)),
            Constraint::Point { .. } => (1, 0),
            Constraint::FixedYFreeX { y } if (0..=y_max).contains(&y) => (0, x_max),
            Constraint::FixedYFreeX { .. } => (1, 0),
            Constraint::FixedXFreeY { x } => (x.max(0), x.min(x_max)),
        }
    }

    pub fn is_satisfiable(&self, x_max: usize, y_max: usize) -> bool {
        let (lo, hi) = self.x_range(x_max as i64, y_max as i64);
        lo <= hi
    }

    /// All admissible `(x, y)` inside the box, ordered by `x` then `y`.
    pub fn solutions(&self, x_max: usize, y_max: usize) -> Vec<(usize, usize)> {
        let (xm, ym) = (x_max as i64, y_max as i64);
        let (lo, hi) = self.x_range(xm, ym);
        let mut out = Vec::new();
        for x in lo..=hi {
            let ys = match *self {
                Constraint::All | Constraint::FixedXFreeY { .. } => (0, ym),
                Constraint::DiffLine { c } => (x - c, x - c),
                Constraint::SumLine { c } => (c - x, c - x),
                Constraint::Point { y, .. } | Constraint::FixedYFreeX { y } => (y, y),
            };
            for y in ys.0..=ys.1 {
                out.push((x as usize, y as usize));
            }
        }
        out
    }

    /// Parameters as `key=value` pairs for the tab-separated output.
    pub fn params(&self) -> String {
        match *self {
            Constraint::All => String::new(),
            Constraint::DiffLine { c } | Constraint::SumLine { c } => format!("c={c}"),
            Constraint::Point { x, y } => format!("x={x},y={y}"),
            Constraint::FixedYFreeX { y } => format!("y={y}"),
            Constraint::FixedXFreeY { x } => format!("x={x}"),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constraint::All => f.write_str("all"),
            Constraint::DiffLine { c } => write!(f, "x-y={c}"),
            Constraint::SumLine { c } => write!(f, "x+y={c}"),
            Constraint::Point { x, y } => write!(f, "(x,y)=({x},{y})"),
            Constraint::FixedYFreeX { y } => write!(f, "y={y}"),
            Constraint::FixedXFreeY { x } => write!(f, "x={x}"),
        }
    }
}

/// Compact description of every common Abelian factor found while the
/// window on the first string slides over `i..=i+x_max` and the window on the
/// second over `k..=k+y_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LcafMatch {
    pub i: usize,
    pub k: usize,
    pub d: usize,
    pub x_max: usize,
    pub y_max: usize,
    pub constraint: Constraint,
}

impl LcafMatch {
    /// Position pairs `(i + x, k + y)` described by this match.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.constraint
            .solutions(self.x_max, self.y_max)
            .into_iter()
            .map(|(x, y)| (self.i + x, self.k + y))
    }
}

/// All described position pairs, sorted and deduplicated.
pub fn expand_matches(matches: &[LcafMatch]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = matches.iter().flat_map(|m| m.pairs().collect::<Vec<_>>()).collect();
    out.sort_unstable();
    out.dedup();
    out
}
