//! Synthetic inputs and instrumented runs for work-bound checks.

mod counters;

pub use counters::*;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lcaf::{self, LcafResult};
use crate::oracles;
use crate::periods::{self, RegularPeriod};
use crate::rle::RleString;
use crate::squares::{self, SquareRun};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenKind {
    Unary,
    Random {
        sigma: usize,
    },
    /// Geometric run lengths with the given mean; consecutive runs use
    /// different characters whenever `sigma > 1`.
    Runs {
        mean_run_len: f64,
        sigma: usize,
    },
}

/// Deterministic text of length `n` over `'a'..`.
pub fn gen(kind: GenKind, n: usize, seed: u64) -> Result<Vec<char>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letter = |k: usize| char::from_u32('a' as u32 + k as u32).expect("small alphabet");
    match kind {
        GenKind::Unary => Ok(vec!['a'; n]),
        GenKind::Random { sigma } => {
            check_sigma(sigma)?;
            Ok((0..n).map(|_| letter(rng.random_range(0..sigma))).collect())
        }
        GenKind::Runs { mean_run_len, sigma } => {
            check_sigma(sigma)?;
            if !(mean_run_len >= 1.0 && mean_run_len.is_finite()) {
                return Err(Error::InvalidGenerator(format!(
                    "mean run length must be >= 1, got {mean_run_len}"
                )));
            }
            let extra = Geometric::new(1.0 / mean_run_len).map_err(|e| Error::InvalidGenerator(e.to_string()))?;
            let mut out = Vec::with_capacity(n);
            let mut prev: Option<usize> = None;
            while out.len() < n {
                let c = match prev {
                    None => rng.random_range(0..sigma),
                    Some(_) if sigma == 1 => 0,
                    Some(p) => (p + 1 + rng.random_range(0..sigma - 1)) % sigma,
                };
                let len = (extra.sample(&mut rng) as usize).saturating_add(1).min(n - out.len());
                out.extend(std::iter::repeat_n(letter(c), len));
                prev = Some(c);
            }
            Ok(out)
        }
    }
}

fn check_sigma(sigma: usize) -> Result<()> {
    if (1..=26).contains(&sigma) {
        Ok(())
    } else {
        Err(Error::InvalidGenerator(format!("sigma must be in 1..=26, got {sigma}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Fast,
    Naive,
}

#[derive(Debug, Clone, Copy)]
pub enum Workload<'a> {
    Squares(&'a [char]),
    Periods(&'a [char]),
    Lcaf(&'a [char], &'a [char]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Output {
    Squares(Vec<SquareRun>),
    Periods(Vec<RegularPeriod>),
    Lcaf(LcafResult),
    LcafPairs { length: usize, pairs: Vec<(usize, usize)> },
}

/// Runs one workload with counters attached. Work is split per window
/// length across the rayon pool and the counters are summed in order.
pub fn run_instrumented(workload: Workload<'_>, engine: Engine) -> Result<(Output, WorkCounters)> {
    let mut counters = WorkCounters::default();
    let output = match (workload, engine) {
        (Workload::Squares(t), Engine::Fast) => {
            let (runs, c) = squares::find_all_squares_counted_par(&RleString::encode(t).0);
            counters = c;
            Output::Squares(runs)
        }
        (Workload::Squares(t), Engine::Naive) => {
            let (runs, c) = oracles::naive_squares_counted_par(t);
            counters = c;
            Output::Squares(runs)
        }
        (Workload::Periods(t), Engine::Fast) => {
            let (found, c) = periods::find_regular_periods_counted_par(&RleString::encode(t).0);
            counters = c;
            Output::Periods(found)
        }
        (Workload::Periods(t), Engine::Naive) => Output::Periods(oracles::naive_periods(t)),
        (Workload::Lcaf(a, b), Engine::Fast) => {
            let (r1, r2, _) = lcaf::encode_pair(a, b);
            Output::Lcaf(lcaf::find_lcaf_with(&r1, &r2, &mut counters)?)
        }
        (Workload::Lcaf(a, b), Engine::Naive) => {
            let (length, pairs) = oracles::naive_lcaf(a, b)?;
            Output::LcafPairs { length, pairs }
        }
    };
    Ok((output, counters))
}
