//! Run-length factorization, dense alphabets and Parikh-vector bookkeeping.
//!
//! Positions are 1-based throughout the public API. A string `w` of length
//! `n` is stored as its maximal runs `a_1^{p_1} ... a_m^{p_m}` together with
//! two length-`n` lookup tables: the run containing each position and the
//! successor boundary `succ(i)`.

use std::fmt;

use crate::error::{Error, Result};

/// Sorted set of the distinct characters of one or more texts.
///
/// Character ids are dense in `0..sigma()` and follow the character order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlphabetMap {
    chars: Vec<char>,
}

impl AlphabetMap {
    pub fn from_text(text: &[char]) -> Self {
        Self::from_texts([text])
    }

    /// Union alphabet of several texts, used when two strings must share
    /// Parikh coordinates.
    pub fn from_texts<'a, I>(texts: I) -> Self
    where
        I: IntoIterator<Item = &'a [char]>,
    {
        let mut chars: Vec<char> = texts.into_iter().flatten().copied().collect();
        chars.sort_unstable();
        chars.dedup();
        Self { chars }
    }

    pub fn from_chars<I: IntoIterator<Item = char>>(chars: I) -> Self {
        let mut chars: Vec<char> = chars.into_iter().collect();
        chars.sort_unstable();
        chars.dedup();
        Self { chars }
    }

    pub fn sigma(&self) -> usize {
        self.chars.len()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn id_of(&self, c: char) -> Option<usize> {
        self.chars.binary_search(&c).ok()
    }

    pub fn char_of(&self, id: usize) -> char {
        self.chars[id]
    }
}

/// One maximal run: `exponent` copies of the character with dense id `id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub id: usize,
    pub exponent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RleString {
    factors: Vec<Factor>,
    /// 1-based start of each factor.
    starts: Vec<usize>,
    n: usize,
    sigma: usize,
    /// `succ_table[i - 1] = succ(i)`.
    succ_table: Vec<usize>,
    /// `run_of[i - 1]` = index of the factor covering position `i`.
    run_of: Vec<usize>,
}

impl RleString {
    /// Run-length encodes `text` over its own sorted alphabet.
    pub fn encode(text: &[char]) -> (RleString, AlphabetMap) {
        let map = AlphabetMap::from_text(text);
        let rle = Self::encode_with(text, &map).expect("alphabet built from the text itself");
        (rle, map)
    }

    /// Run-length encodes `text` against a caller-supplied alphabet.
    pub fn encode_with(text: &[char], map: &AlphabetMap) -> Result<RleString> {
        let mut runs: Vec<Factor> = Vec::new();
        for &c in text {
            let id = map.id_of(c).ok_or(Error::UnknownChar(c))?;
            match runs.last_mut() {
                Some(last) if last.id == id => last.exponent += 1,
                _ => runs.push(Factor { id, exponent: 1 }),
            }
        }
        Ok(Self::from_maximal_runs(runs, map.sigma()))
    }

    /// Builds from `(char, exponent)` runs, merging adjacent runs of the same
    /// character. Zero exponents are rejected.
    pub fn from_char_runs(runs: &[(char, usize)], map: &AlphabetMap) -> Result<RleString> {
        let mut factors: Vec<Factor> = Vec::with_capacity(runs.len());
        for &(c, exponent) in runs {
            if exponent == 0 {
                return Err(Error::MalformedToken {
                    token: format!("{c}:0"),
                    reason: "exponent must be positive",
                });
            }
            let id = map.id_of(c).ok_or(Error::UnknownChar(c))?;
            match factors.last_mut() {
                Some(last) if last.id == id => last.exponent += exponent,
                _ => factors.push(Factor { id, exponent }),
            }
        }
        Ok(Self::from_maximal_runs(factors, map.sigma()))
    }

    fn from_maximal_runs(factors: Vec<Factor>, sigma: usize) -> RleString {
        let n: usize = factors.iter().map(|f| f.exponent).sum();
        let mut starts = Vec::with_capacity(factors.len());
        let mut run_of = Vec::with_capacity(n);
        let mut pos = 1;
        for (idx, f) in factors.iter().enumerate() {
            starts.push(pos);
            run_of.extend(std::iter::repeat_n(idx, f.exponent));
            pos += f.exponent;
        }

        // Boundaries are the factor starts plus position n; succ(i) is the
        // first boundary strictly greater than i, or n + 1 past the end.
        let mut succ_table = vec![0; n];
        let mut next = n + 1;
        for i in (1..=n).rev() {
            succ_table[i - 1] = next;
            if i == n || starts.binary_search(&i).is_ok() {
                next = i;
            }
        }

        RleString {
            factors,
            starts,
            n,
            sigma,
            succ_table,
            run_of,
        }
    }

    /// Length of the decoded string.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of maximal runs.
    pub fn runs(&self) -> usize {
        self.factors.len()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_unary(&self) -> bool {
        self.factors.len() == 1
    }

    /// Sorted boundary set: every factor start plus the last position.
    pub fn boundaries(&self) -> Vec<usize> {
        let mut b = self.starts.clone();
        if self.n > 0 && b.last() != Some(&self.n) {
            b.push(self.n);
        }
        b
    }

    /// Smallest boundary strictly greater than `i`; `n + 1` when `i = n`.
    pub fn succ(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange { pos: i, n: self.n });
        }
        Ok(self.succ_table[i - 1])
    }

    #[inline]
    pub(crate) fn succ_at(&self, i: usize) -> usize {
        self.succ_table[i - 1]
    }

    /// First position after `i` that starts a new run; `n + 1` inside the
    /// last run.
    #[inline]
    pub(crate) fn next_run_start(&self, i: usize) -> usize {
        self.starts.get(self.run_of[i - 1] + 1).copied().unwrap_or(self.n + 1)
    }

    /// Dense character id at 1-based position `i`.
    #[inline]
    pub fn id_at(&self, i: usize) -> usize {
        self.factors[self.run_of[i - 1]].id
    }

    pub fn decode_ids(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        for f in &self.factors {
            out.extend(std::iter::repeat_n(f.id, f.exponent));
        }
        out
    }

    pub fn decode(&self, map: &AlphabetMap) -> Vec<char> {
        self.decode_ids().into_iter().map(|id| map.char_of(id)).collect()
    }

    /// Parikh vector of `w[i..j]`; `i = j + 1` gives the empty vector.
    pub fn parikh_of_range(&self, i: usize, j: usize) -> Result<ParikhVector> {
        self.check_range(i, j)?;
        let mut counts = vec![0; self.sigma];
        self.for_each_overlap(i, j, |id, len| counts[id] += len);
        Ok(ParikhVector { counts })
    }

    pub(crate) fn check_range(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j > self.n || i > j + 1 {
            return Err(Error::RangeOutOfBounds { i, j, n: self.n });
        }
        Ok(())
    }

    /// Calls `f(id, overlap)` once per factor overlapping `w[i..j]`, in order.
    /// Returns the number of factors visited.
    #[inline]
    pub(crate) fn for_each_overlap<F: FnMut(usize, usize)>(&self, i: usize, j: usize, mut f: F) -> usize {
        if i > j {
            return 0;
        }
        let first = self.run_of[i - 1];
        let last = self.run_of[j - 1];
        for idx in first..=last {
            let start = self.starts[idx];
            let end = start + self.factors[idx].exponent - 1;
            let lo = start.max(i);
            let hi = end.min(j);
            f(self.factors[idx].id, hi - lo + 1);
        }
        last - first + 1
    }
}

impl fmt::Display for RleString {
    /// Renders factors as `id^exponent` separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, factor) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", factor.id, factor.exponent)?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated `char:exponent` tokens, e.g. `a:12 b:4`.
///
/// The character is everything before the last `:` and must be exactly one
/// scalar value, so `::3` denotes three colons.
pub fn parse_rle_tokens(input: &str) -> Result<Vec<(char, usize)>> {
    input
        .split_whitespace()
        .map(|token| {
            let bad = |reason| Error::MalformedToken {
                token: token.to_owned(),
                reason,
            };
            let (ch, exp) = token.rsplit_once(':').ok_or_else(|| bad("expected char:exponent"))?;
            let mut it = ch.chars();
            let c = match (it.next(), it.next()) {
                (Some(c), None) => c,
                _ => return Err(bad("expected exactly one character before ':'")),
            };
            if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("exponent must be a decimal integer"));
            }
            let exponent: usize = exp.parse().map_err(|_| bad("exponent does not fit"))?;
            if exponent == 0 {
                return Err(bad("exponent must be positive"));
            }
            Ok((c, exponent))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn zeros(sigma: usize) -> Self {
        Self { counts: vec![0; sigma] }
    }

    pub fn from_counts(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn of_ids(ids: &[usize], sigma: usize) -> Self {
        let mut counts = vec![0; sigma];
        for &id in ids {
            counts[id] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, c: usize) -> usize {
        self.counts[c]
    }

    /// Length of the represented substring.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Coordinatewise `self <= other`: `self` describes a sub-permutation.
    pub fn is_sub_of(&self, other: &ParikhVector) -> bool {
        self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    pub fn diff(&self, other: &ParikhVector) -> usize {
        self.counts.iter().zip(&other.counts).filter(|(a, b)| a != b).count()
    }
}

const ABSENT: usize = usize::MAX;

/// Two Parikh vectors with an incrementally maintained set of mismatched
/// coordinates.
///
/// The mismatched coordinates live in a sparse set, so every unit or bulk
/// update of one coordinate costs O(1).
#[derive(Debug, Clone)]
pub struct DiffTracker {
    left: Vec<usize>,
    right: Vec<usize>,
    mismatched: Vec<usize>,
    slot: Vec<usize>,
}

impl DiffTracker {
    pub fn new(left: ParikhVector, right: ParikhVector) -> Self {
        assert_eq!(left.counts.len(), right.counts.len(), "alphabet sizes differ");
        let sigma = left.counts.len();
        let mut t = DiffTracker {
            left: left.counts,
            right: right.counts,
            mismatched: Vec::new(),
            slot: vec![ABSENT; sigma],
        };
        for c in 0..sigma {
            t.refresh(c);
        }
        t
    }

    #[inline]
    fn refresh(&mut self, c: usize) {
        let differs = self.left[c] != self.right[c];
        let present = self.slot[c] != ABSENT;
        if differs && !present {
            self.slot[c] = self.mismatched.len();
            self.mismatched.push(c);
        } else if !differs && present {
            let at = self.slot[c];
            let moved = *self.mismatched.last().unwrap();
            self.mismatched.swap_remove(at);
            if moved != c {
                self.slot[moved] = at;
            }
            self.slot[c] = ABSENT;
        }
    }

    pub fn sigma(&self) -> usize {
        self.left.len()
    }

    /// `diff(left, right)`.
    #[inline]
    pub fn mismatch_count(&self) -> usize {
        self.mismatched.len()
    }

    /// The mismatched coordinates, available while there are at most four.
    pub fn mismatch_set(&self) -> Option<&[usize]> {
        (self.mismatched.len() <= 4).then_some(&self.mismatched[..])
    }

    #[inline]
    pub fn left(&self, c: usize) -> usize {
        self.left[c]
    }

    #[inline]
    pub fn right(&self, c: usize) -> usize {
        self.right[c]
    }

    /// `left[c] - right[c]`.
    #[inline]
    pub fn delta(&self, c: usize) -> i64 {
        self.left[c] as i64 - self.right[c] as i64
    }

    pub fn left_vector(&self) -> ParikhVector {
        ParikhVector::from_counts(self.left.clone())
    }

    pub fn right_vector(&self) -> ParikhVector {
        ParikhVector::from_counts(self.right.clone())
    }

    pub fn inc_left(&mut self, c: usize) {
        self.left[c] += 1;
        self.refresh(c);
    }

    pub fn dec_left(&mut self, c: usize) {
        self.left[c] -= 1;
        self.refresh(c);
    }

    pub fn inc_right(&mut self, c: usize) {
        self.right[c] += 1;
        self.refresh(c);
    }

    pub fn dec_right(&mut self, c: usize) {
        self.right[c] -= 1;
        self.refresh(c);
    }

    /// Slides the left vector by `k` positions: `k` copies of `out` leave and
    /// `k` copies of `inc` enter.
    #[inline]
    pub fn shift_left(&mut self, out: usize, inc: usize, k: usize) {
        if out == inc {
            return;
        }
        self.left[out] -= k;
        self.refresh(out);
        self.left[inc] += k;
        self.refresh(inc);
    }

    #[inline]
    pub fn shift_right(&mut self, out: usize, inc: usize, k: usize) {
        if out == inc {
            return;
        }
        self.right[out] -= k;
        self.refresh(out);
        self.right[inc] += k;
        self.refresh(inc);
    }

    #[inline]
    pub fn set_right(&mut self, c: usize, value: usize) {
        self.right[c] = value;
        self.refresh(c);
    }
}
