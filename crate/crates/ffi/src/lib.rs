//! C ABI over `abelian-rle`.
//!
//! Results live behind opaque handles that the caller frees with the
//! matching `*_free` function. Every fallible call returns an [`AbrStatus`];
//! on failure `abr_last_error_message` describes the last error raised on
//! the calling thread. Positions are 1-based, as in the Rust API.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abelian_rle::lcaf::{self, LcafResult};
use abelian_rle::rle::{parse_rle_tokens, AlphabetMap, RleString};
use abelian_rle::{periods, squares, Error, RegularPeriod, SquareRun};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedInput = 3,
    OutOfRange = 4,
    EmptyInput = 5,
    Panic = 6,
}

/// Run-length encoded text.
pub struct AbrText {
    rle: RleString,
}

pub struct AbrSquares {
    runs: Vec<SquareRun>,
}

pub struct AbrPeriods {
    periods: Vec<RegularPeriod>,
}

pub struct AbrLcaf {
    result: LcafResult,
    pairs: Vec<(usize, usize)>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AbrSquareRun {
    pub first_start: usize,
    pub last_start: usize,
    pub half_len: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AbrPeriod {
    pub p: usize,
    pub t: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AbrPair {
    pub i: usize,
    pub k: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: AbrStatus, msg: impl Into<String>) -> AbrStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> AbrStatus {
    match e {
        Error::PositionOutOfRange { .. } | Error::RangeOutOfBounds { .. } | Error::LengthOutOfRange { .. } => {
            AbrStatus::OutOfRange
        }
        Error::EmptyInput => AbrStatus::EmptyInput,
        _ => AbrStatus::MalformedInput,
    }
}

fn from_error(e: Error) -> AbrStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning a panic into [`AbrStatus::Panic`].
fn guarded(f: impl FnOnce() -> AbrStatus) -> AbrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(AbrStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, AbrStatus> {
    if s.is_null() {
        return Err(fail(AbrStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(AbrStatus::InvalidUtf8, e.to_string()))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> AbrStatus {
    *out = Box::into_raw(Box::new(value));
    AbrStatus::Ok
}

unsafe fn drop_handle<T>(h: *mut T) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn abr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn abr_status_str(status: AbrStatus) -> *const c_char {
    let s: &'static CStr = match status {
        AbrStatus::Ok => c"ok",
        AbrStatus::NullPointer => c"null pointer",
        AbrStatus::InvalidUtf8 => c"invalid UTF-8",
        AbrStatus::MalformedInput => c"malformed input",
        AbrStatus::OutOfRange => c"out of range",
        AbrStatus::EmptyInput => c"empty input",
        AbrStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Encodes a NUL-terminated UTF-8 string.
///
/// # Safety
/// `text` must be null or a valid NUL-terminated string; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn abr_text_from_utf8(text: *const c_char, out: *mut *mut AbrText) -> AbrStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AbrStatus::NullPointer, "null output pointer");
        }
        let s = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let chars: Vec<char> = s.chars().collect();
        emit(
            out,
            AbrText {
                rle: RleString::encode(&chars).0,
            },
        )
    })
}

/// Builds a text from whitespace-separated `char:count` tokens.
///
/// # Safety
/// As for [`abr_text_from_utf8`].
#[no_mangle]
pub unsafe extern "C" fn abr_text_from_rle_tokens(tokens: *const c_char, out: *mut *mut AbrText) -> AbrStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AbrStatus::NullPointer, "null output pointer");
        }
        let s = match read_str(tokens) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let runs = match parse_rle_tokens(s) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        let map = AlphabetMap::from_chars(runs.iter().map(|&(c, _)| c));
        match RleString::from_char_runs(&runs, &map) {
            Ok(rle) => emit(out, AbrText { rle }),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `text` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abr_text_free(text: *mut AbrText) {
    drop_handle(text);
}

/// Length in characters; 0 for a null handle.
///
/// # Safety
/// `text` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_text_len(text: *const AbrText) -> usize {
    text.as_ref().map_or(0, |t| t.rle.len())
}

/// Number of maximal runs; 0 for a null handle.
///
/// # Safety
/// `text` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_text_runs(text: *const AbrText) -> usize {
    text.as_ref().map_or(0, |t| t.rle.runs())
}

/// Abelian squares with half length `d`, or every half length when `d` is 0.
///
/// # Safety
/// `text` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abr_squares(text: *const AbrText, d: usize, out: *mut *mut AbrSquares) -> AbrStatus {
    guarded(|| {
        let Some(t) = text.as_ref() else {
            return fail(AbrStatus::NullPointer, "null text handle");
        };
        if out.is_null() {
            return fail(AbrStatus::NullPointer, "null output pointer");
        }
        let runs = if d == 0 {
            squares::find_all_squares_par(&t.rle)
        } else {
            match squares::find_squares_of_length(&t.rle, d) {
                Ok(r) => r,
                Err(e) => return from_error(e),
            }
        };
        emit(out, AbrSquares { runs })
    })
}

/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_squares_len(s: *const AbrSquares) -> usize {
    s.as_ref().map_or(0, |s| s.runs.len())
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abr_squares_get(s: *const AbrSquares, index: usize, out: *mut AbrSquareRun) -> AbrStatus {
    let (Some(s), false) = (s.as_ref(), out.is_null()) else {
        return fail(AbrStatus::NullPointer, "null pointer");
    };
    match s.runs.get(index) {
        Some(r) => {
            *out = AbrSquareRun {
                first_start: r.first_start,
                last_start: r.last_start,
                half_len: r.half_len,
            };
            AbrStatus::Ok
        }
        None => fail(AbrStatus::OutOfRange, format!("index {index} out of {}", s.runs.len())),
    }
}

/// # Safety
/// `s` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abr_squares_free(s: *mut AbrSquares) {
    drop_handle(s);
}

/// All regular Abelian periods, ascending by `p`.
///
/// # Safety
/// `text` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abr_periods(text: *const AbrText, out: *mut *mut AbrPeriods) -> AbrStatus {
    guarded(|| {
        let Some(t) = text.as_ref() else {
            return fail(AbrStatus::NullPointer, "null text handle");
        };
        if out.is_null() {
            return fail(AbrStatus::NullPointer, "null output pointer");
        }
        emit(
            out,
            AbrPeriods {
                periods: periods::find_regular_periods_par(&t.rle),
            },
        )
    })
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_periods_len(p: *const AbrPeriods) -> usize {
    p.as_ref().map_or(0, |p| p.periods.len())
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abr_periods_get(p: *const AbrPeriods, index: usize, out: *mut AbrPeriod) -> AbrStatus {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else {
        return fail(AbrStatus::NullPointer, "null pointer");
    };
    match p.periods.get(index) {
        Some(r) => {
            *out = AbrPeriod { p: r.p, t: r.t };
            AbrStatus::Ok
        }
        None => fail(
            AbrStatus::OutOfRange,
            format!("index {index} out of {}", p.periods.len()),
        ),
    }
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abr_periods_free(p: *mut AbrPeriods) {
    drop_handle(p);
}

/// Longest common Abelian factors of two NUL-terminated UTF-8 strings.
///
/// # Safety
/// `a` and `b` must be valid NUL-terminated strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abr_lcaf(a: *const c_char, b: *const c_char, out: *mut *mut AbrLcaf) -> AbrStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AbrStatus::NullPointer, "null output pointer");
        }
        let (a, b) = match (read_str(a), read_str(b)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(st), _) | (_, Err(st)) => return st,
        };
        let t1: Vec<char> = a.chars().collect();
        let t2: Vec<char> = b.chars().collect();
        let (r1, r2, _) = lcaf::encode_pair(&t1, &t2);
        match lcaf::find_lcaf(&r1, &r2) {
            Ok(result) => {
                let pairs = result.pairs();
                emit(out, AbrLcaf { result, pairs })
            }
            Err(e) => from_error(e),
        }
    })
}

/// Length of the longest common factors; 0 when none exist.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_lcaf_length(l: *const AbrLcaf) -> usize {
    l.as_ref().map_or(0, |l| l.result.length)
}

/// Number of compact match records.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_lcaf_match_count(l: *const AbrLcaf) -> usize {
    l.as_ref().map_or(0, |l| l.result.matches.len())
}

/// Number of distinct start-position pairs.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abr_lcaf_pair_count(l: *const AbrLcaf) -> usize {
    l.as_ref().map_or(0, |l| l.pairs.len())
}

/// Pairs are sorted by first position, then second.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abr_lcaf_pair_get(l: *const AbrLcaf, index: usize, out: *mut AbrPair) -> AbrStatus {
    let (Some(l), false) = (l.as_ref(), out.is_null()) else {
        return fail(AbrStatus::NullPointer, "null pointer");
    };
    match l.pairs.get(index) {
        Some(&(i, k)) => {
            *out = AbrPair { i, k };
            AbrStatus::Ok
        }
        None => fail(AbrStatus::OutOfRange, format!("index {index} out of {}", l.pairs.len())),
    }
}

/// # Safety
/// `l` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abr_lcaf_free(l: *mut AbrLcaf) {
    drop_handle(l);
}
