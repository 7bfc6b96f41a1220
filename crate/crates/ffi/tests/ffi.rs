use std::ffi::{CStr, CString};
use std::ptr;

use abelian_rle_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = abr_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn squares_round_trip() {
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(abr_text_from_utf8(cstr("abbaabab").as_ptr(), &mut text), AbrStatus::Ok);
        assert_eq!(abr_text_len(text), 8);
        assert_eq!(abr_text_runs(text), 6);

        let mut all = ptr::null_mut();
        assert_eq!(abr_squares(text, 0, &mut all), AbrStatus::Ok);
        let mut got = Vec::new();
        for idx in 0..abr_squares_len(all) {
            let mut r = AbrSquareRun::default();
            assert_eq!(abr_squares_get(all, idx, &mut r), AbrStatus::Ok);
            got.push((r.first_start, r.last_start, r.half_len));
        }
        let chars: Vec<char> = "abbaabab".chars().collect();
        let want: Vec<_> = abelian_rle::oracles::naive_squares(&chars)
            .iter()
            .map(|r| (r.first_start, r.last_start, r.half_len))
            .collect();
        assert_eq!(got, want);

        let mut r = AbrSquareRun::default();
        assert_eq!(abr_squares_get(all, 99, &mut r), AbrStatus::OutOfRange);
        abr_squares_free(all);
        abr_text_free(text);
    }
}

#[test]
fn periods_from_tokens() {
    unsafe {
        let mut text = ptr::null_mut();
        let tokens = cstr("a:2 b:2 a:3 b:1 a:1 b:1 a:4 b:2 a:1");
        assert_eq!(abr_text_from_rle_tokens(tokens.as_ptr(), &mut text), AbrStatus::Ok);
        assert_eq!(abr_text_len(text), 17);
        let mut per = ptr::null_mut();
        assert_eq!(abr_periods(text, &mut per), AbrStatus::Ok);
        let found: Vec<(usize, usize)> = (0..abr_periods_len(per))
            .map(|i| {
                let mut p = AbrPeriod::default();
                assert_eq!(abr_periods_get(per, i, &mut p), AbrStatus::Ok);
                (p.p, p.t)
            })
            .collect();
        assert!(found.contains(&(3, 2)));
        abr_periods_free(per);
        abr_text_free(text);
    }
}

#[test]
fn lcaf_pairs() {
    unsafe {
        let mut l = ptr::null_mut();
        let (a, b) = (cstr("aaaaacbbbcc"), cstr("cccaaccbbbb"));
        assert_eq!(abr_lcaf(a.as_ptr(), b.as_ptr(), &mut l), AbrStatus::Ok);
        assert_eq!(abr_lcaf_length(l), 8);
        assert!(abr_lcaf_match_count(l) >= 1);
        assert_eq!(abr_lcaf_pair_count(l), 1);
        let mut p = AbrPair::default();
        assert_eq!(abr_lcaf_pair_get(l, 0, &mut p), AbrStatus::Ok);
        assert_eq!(p, AbrPair { i: 4, k: 3 });
        abr_lcaf_free(l);

        let empty = cstr("");
        assert_eq!(abr_lcaf(empty.as_ptr(), b.as_ptr(), &mut l), AbrStatus::EmptyInput);
    }
}

#[test]
fn error_reporting() {
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(
            abr_text_from_rle_tokens(cstr("a:0").as_ptr(), &mut text),
            AbrStatus::MalformedInput
        );
        assert!(text.is_null());
        assert!(last_error().contains("a:0"));

        assert_eq!(abr_text_from_utf8(ptr::null(), &mut text), AbrStatus::NullPointer);
        assert_eq!(
            abr_text_from_utf8(cstr("ab").as_ptr(), ptr::null_mut()),
            AbrStatus::NullPointer
        );

        let bad = [0xffu8, 0xfe, 0];
        assert_eq!(
            abr_text_from_utf8(bad.as_ptr().cast(), &mut text),
            AbrStatus::InvalidUtf8
        );

        assert_eq!(abr_text_from_utf8(cstr("aaaa").as_ptr(), &mut text), AbrStatus::Ok);
        let mut sq = ptr::null_mut();
        assert_eq!(abr_squares(text, 3, &mut sq), AbrStatus::OutOfRange);
        assert!(last_error().contains('3'));
        abr_text_free(text);

        // Null handles are tolerated by the query and free functions.
        assert_eq!(abr_text_len(ptr::null()), 0);
        abr_text_free(ptr::null_mut());
        abr_squares_free(ptr::null_mut());

        let s = CStr::from_ptr(abr_status_str(AbrStatus::OutOfRange));
        assert_eq!(s.to_str().unwrap(), "out of range");
    }
}
