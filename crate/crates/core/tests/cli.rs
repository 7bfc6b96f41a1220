use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const FIG1: &str = "a:2 b:2 a:3 b:1 a:1 b:1 a:4 b:2 a:1";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_abelian-rle"));
    c.env_remove("ABELIAN_RLE_THREADS");
    c
}

fn run_with(mut cmd: Command, args: &[&str], stdin: &str) -> Output {
    let mut child = cmd
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str], stdin: &str) -> Output {
    run_with(bin(), args, stdin)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let o = run(args, stdin);
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn file(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn tsv_rows(s: &str) -> Vec<Vec<String>> {
    s.lines().map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

#[test]
fn squares_tsv_and_length_check() {
    assert_eq!(ok(&["squares", "-", "--d", "2", "--tsv"], "aaaa"), "1\t1\t2\n");
    assert_eq!(ok(&["squares", "-", "--tsv"], "aaaa"), "1\t3\t1\n1\t1\t2\n");
    let o = run(&["squares", "-", "--d", "4", "--tsv"], "aaaa");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside 1..=2"));
}

#[test]
fn squares_length_window() {
    let text = "aabbabbaab";
    let all = ok(&["squares"], text);
    let window = ok(&["squares", "--min-d", "2", "--max-d", "3"], text);
    let want: String = all
        .lines()
        .filter(|l| matches!(l.rsplit('\t').next(), Some("2" | "3")))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(window, want);
    // Bounds beyond the string are clamped.
    assert_eq!(ok(&["squares", "--min-d", "0", "--max-d", "99"], text), all);
}

#[test]
fn trailing_newline_is_ignored() {
    assert_eq!(ok(&["squares"], "aa\n"), "1\t1\t1\n");
    assert_eq!(ok(&["squares"], "aa\r\n"), "1\t1\t1\n");
}

#[test]
fn periods_from_rle_tokens() {
    let out = ok(&["periods", "-", "--rle"], FIG1);
    assert!(out.lines().any(|l| l == "3\t2"), "{out}");
}

#[test]
fn lcaf_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = file(dir.path(), "w1", "aaaaacbbbcc\n");
    let f2 = file(dir.path(), "w2", "cccaaccbbbb\n");
    assert_eq!(ok(&["lcaf", &f1, &f2, "--expand"], ""), "4\t3\t8\n");
    assert_eq!(ok(&["oracle", "lcaf", &f1, &f2], ""), "4\t3\t8\n");

    let compact = ok(&["lcaf", &f1, &f2], "");
    let rows = tsv_rows(&compact);
    assert!(!rows.is_empty());
    for r in &rows {
        assert_eq!(r.len(), 7, "{r:?}");
        assert_eq!(r[2], "8");
    }
    assert_eq!(ok(&["lcaf", &f1, &f2, "--all-lengths"], ""), compact);

    // One side from standard input.
    assert_eq!(ok(&["lcaf", "-", &f2, "--expand"], "aaaaacbbbcc"), "4\t3\t8\n");
}

#[test]
fn oracle_matches_fast_output() {
    let texts = ["abbaabab", "aaabbbcccabc", "abcabcabcab", "a", ""];
    for t in texts {
        for sub in ["squares", "periods"] {
            for fmt in ["--tsv", "--json"] {
                assert_eq!(
                    ok(&[sub, "-", fmt], t),
                    ok(&["oracle", sub, "-", fmt], t),
                    "{sub} {fmt} on {t:?}"
                );
            }
        }
    }
}

#[test]
fn json_and_tsv_agree() {
    let text = "abbaababbbaaab";
    let json: Value = serde_json::from_str(&ok(&["squares", "--json"], text)).unwrap();
    let rows = tsv_rows(&ok(&["squares"], text));
    let arr = json.as_array().unwrap();
    assert_eq!(arr.len(), rows.len());
    for (j, r) in arr.iter().zip(&rows) {
        assert_eq!(j["first_start"].to_string(), r[0]);
        assert_eq!(j["last_start"].to_string(), r[1]);
        assert_eq!(j["half_len"].to_string(), r[2]);
    }

    let json: Value = serde_json::from_str(&ok(&["periods", "--json", "--rle"], FIG1)).unwrap();
    let rows = tsv_rows(&ok(&["periods", "--rle"], FIG1));
    let arr = json.as_array().unwrap();
    assert_eq!(arr.len(), rows.len());
    for (j, r) in arr.iter().zip(&rows) {
        assert_eq!(j["p"].to_string(), r[0]);
        assert_eq!(j["t"].to_string(), r[1]);
    }

    let dir = tempfile::tempdir().unwrap();
    let f1 = file(dir.path(), "a", "aabbaacbcab");
    let f2 = file(dir.path(), "b", "bbaabcabcca");
    let json: Value = serde_json::from_str(&ok(&["lcaf", &f1, &f2, "--json"], "")).unwrap();
    let rows = tsv_rows(&ok(&["lcaf", &f1, &f2], ""));
    let matches = json["matches"].as_array().unwrap();
    assert_eq!(matches.len(), rows.len());
    for (j, r) in matches.iter().zip(&rows) {
        for (field, col) in [("i", 0), ("k", 1), ("d", 2), ("x_max", 3), ("y_max", 4)] {
            assert_eq!(j[field].to_string(), r[col]);
        }
        assert_eq!(j["d"], json["length"]);
        assert_eq!(j["constraint"]["kind"].as_str().unwrap(), r[5]);
        let mut params: Vec<String> = j["constraint"]
            .as_object()
            .unwrap()
            .iter()
            .filter(|(k, _)| *k != "kind")
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut tsv_params: Vec<String> = r[6].split(',').filter(|s| !s.is_empty()).map(str::to_string).collect();
        params.sort();
        tsv_params.sort();
        assert_eq!(params, tsv_params);
    }

    let json: Value = serde_json::from_str(&ok(&["lcaf", &f1, &f2, "--json", "--expand"], "")).unwrap();
    let rows = tsv_rows(&ok(&["lcaf", &f1, &f2, "--expand"], ""));
    let pairs = json["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), rows.len());
    for (j, r) in pairs.iter().zip(&rows) {
        assert_eq!(
            [j["i"].to_string(), j["k"].to_string(), j["d"].to_string()].to_vec(),
            *r
        );
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let text: String = "abaabbbaabababbbaaabbab".repeat(6);
    let base = ok(&["squares"], &text);
    assert_eq!(ok(&["squares"], &text), base);
    for threads in ["1", "3"] {
        let mut cmd = bin();
        cmd.env("ABELIAN_RLE_THREADS", threads);
        let o = run_with(cmd, &["squares"], &text);
        assert_eq!(stdout(&o), base);
    }
    let mut cmd = bin();
    cmd.env("ABELIAN_RLE_THREADS", "many");
    assert_eq!(run_with(cmd, &["squares"], &text).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["squares", "--bogus"], "").status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(run(&[], "").status.code(), Some(1));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
    assert_eq!(run(&["--version"], "").status.code(), Some(0));
    // Malformed tokens and unreadable files are input errors.
    for bad in ["a:0", "a:x", "ab:2", "a2", "a:-1"] {
        let o = run(&["periods", "-", "--rle"], bad);
        assert_eq!(o.status.code(), Some(2), "{bad}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(run(&["squares", "/nonexistent/input"], "").status.code(), Some(2));
    let o = run(&["lcaf", "-", "-"], "ab");
    assert_eq!(o.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let empty = file(dir.path(), "e", "");
    let some = file(dir.path(), "s", "ab");
    assert_eq!(run(&["lcaf", &empty, &some], "").status.code(), Some(2));
}

#[test]
fn adjacent_equal_tokens_merge() {
    assert_eq!(ok(&["squares", "--rle"], "a:1 a:3"), ok(&["squares"], "aaaa"));
}

#[test]
fn bench_csv() {
    let args = [
        "bench", "--algo", "squares", "--gen", "runs", "--n", "2000", "--sigma", "2", "--seed", "7", "--csv",
    ];
    let out = ok(&args, "");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "algo,n,m,sigma,seed,wall_ns,window_jumps,segment_pairs,parikh_entry_ops"
    );
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cols.len(), 9);
    assert_eq!(&cols[..2], ["squares", "2000"]);
    assert_eq!(&cols[3..5], ["2", "7"]);
    // Everything but the wall clock is reproducible.
    let again = ok(&args, "");
    let cols2: Vec<&str> = again.lines().nth(1).unwrap().split(',').collect();
    assert_eq!([&cols[..5], &cols[6..]].concat(), [&cols2[..5], &cols2[6..]].concat());

    let json: Value =
        serde_json::from_str(&ok(&["bench", "--algo", "lcaf", "--gen", "random", "--n", "40"], "")).unwrap();
    assert!(json["segment_pairs"].as_u64().unwrap() > 0);
    assert_eq!(
        run(
            &["bench", "--algo", "periods", "--gen", "random", "--n", "5", "--sigma", "0"],
            ""
        )
        .status
        .code(),
        Some(1)
    );
}
