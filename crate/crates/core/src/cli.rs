//! Command-line front end shared by the `abelian-rle` binary and its tests.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{self, Engine, GenKind, WorkCounters, Workload};
use crate::error::Error;
use crate::lcaf::{self, LcafMatch};
use crate::oracles;
use crate::periods::{self, RegularPeriod};
use crate::rle::{parse_rle_tokens, AlphabetMap, RleString};
use crate::squares::{self, SquareRun};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable that sets the worker count; 0 or unset means one
/// worker per core.
pub const THREADS_ENV: &str = "ABELIAN_RLE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "abelian-rle",
    version,
    about = "Abelian squares, periods and common factors on run-length encoded strings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximal runs of Abelian square start positions, per half length.
    Squares(SquaresArgs),
    /// Regular Abelian periods (p, n mod p).
    Periods(PeriodsArgs),
    /// Longest common Abelian factors of two strings.
    Lcaf(LcafArgs),
    /// Brute-force reference implementations with the same output formats.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Generate a synthetic input and report work counters.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    Squares(SquaresArgs),
    Periods(PeriodsArgs),
    /// Always prints expanded position pairs.
    Lcaf(LcafArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Read whitespace-separated `char:count` tokens instead of plain text.
    #[arg(long)]
    rle: bool,
}

#[derive(Debug, Args)]
struct FormatArgs {
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Tab-separated records (the default).
    #[arg(long)]
    tsv: bool,
}

#[derive(Debug, Args)]
struct SquaresArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Only this half length.
    #[arg(long, conflicts_with_all = ["min_d", "max_d"])]
    d: Option<usize>,
    #[arg(long)]
    min_d: Option<usize>,
    #[arg(long)]
    max_d: Option<usize>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct PeriodsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct LcafArgs {
    file1: String,
    file2: String,
    #[arg(long)]
    rle: bool,
    /// Evaluate every length instead of stopping at the longest.
    #[arg(long)]
    all_lengths: bool,
    /// Print every position pair instead of compact match records.
    #[arg(long)]
    expand: bool,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Algo {
    Squares,
    Periods,
    Lcaf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenName {
    Unary,
    Random,
    Runs,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long = "gen", value_enum)]
    generator: GenName,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    sigma: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Mean run length for `--gen runs`.
    #[arg(long, default_value_t = 8.0)]
    mean_run: f64,
    /// Measure the brute-force oracle instead.
    #[arg(long)]
    naive: bool,
    #[arg(long)]
    csv: bool,
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let pool = match thread_pool() {
        Ok(pool) => pool,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut input = Vec::new();
    if uses_stdin(&cli.command) {
        if let Err(e) = stdin.read_to_end(&mut input) {
            let _ = writeln!(stderr, "error: cannot read standard input: {e}");
            return EXIT_INPUT;
        }
    }
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &input, &mut buf));
    match result {
        Ok(()) => {
            if let Err(e) = stdout.write_all(&buf).and_then(|_| stdout.flush()) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            EXIT_OK
        }
        Err(failure) => {
            let _ = writeln!(stderr, "error: {:#}", failure.error);
            failure.code
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("{THREADS_ENV} must be a non-negative integer, got {v:?}"))?,
        _ => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
}

struct Failure {
    code: i32,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: EXIT_USAGE,
            error: error.into(),
        }
    }

    fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: EXIT_INPUT,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LengthOutOfRange { .. } | Error::InvalidGenerator(_) => Failure::usage(e),
            _ => Failure::input(e),
        }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn uses_stdin(command: &Command) -> bool {
    let lcaf = |a: &LcafArgs| a.file1 == "-" || a.file2 == "-";
    match command {
        Command::Squares(a)
        | Command::Oracle {
            which: OracleCommand::Squares(a),
        } => a.input.input == "-",
        Command::Periods(a)
        | Command::Oracle {
            which: OracleCommand::Periods(a),
        } => a.input.input == "-",
        Command::Lcaf(a)
        | Command::Oracle {
            which: OracleCommand::Lcaf(a),
        } => lcaf(a),
        Command::Bench(_) => false,
    }
}

fn dispatch(command: Command, stdin: &[u8], out: &mut Vec<u8>) -> CliResult {
    match command {
        Command::Squares(a) => squares_cmd(&a, false, stdin, out),
        Command::Periods(a) => periods_cmd(&a, false, stdin, out),
        Command::Lcaf(a) => lcaf_cmd(&a, false, stdin, out),
        Command::Oracle { which } => match which {
            OracleCommand::Squares(a) => squares_cmd(&a, true, stdin, out),
            OracleCommand::Periods(a) => periods_cmd(&a, true, stdin, out),
            OracleCommand::Lcaf(a) => lcaf_cmd(&a, true, stdin, out),
        },
        Command::Bench(a) => bench_cmd(&a, out),
    }
}

fn read_source(path: &str, stdin: &[u8]) -> CliResult<String> {
    if path == "-" {
        String::from_utf8(stdin.to_vec())
            .context("standard input is not valid UTF-8")
            .map_err(Failure::input)
    } else {
        std::fs::read_to_string(PathBuf::from(path))
            .with_context(|| format!("cannot read {path}"))
            .map_err(Failure::input)
    }
}

/// Plain text minus one trailing line break.
fn plain_chars(raw: &str) -> Vec<char> {
    let trimmed = raw
        .strip_suffix("\r\n")
        .or_else(|| raw.strip_suffix('\n'))
        .unwrap_or(raw);
    trimmed.chars().collect()
}

/// Reads each source as plain text or RLE tokens, all over one alphabet.
fn load(paths: &[&str], rle: bool, stdin: &[u8]) -> CliResult<(Vec<RleString>, AlphabetMap)> {
    let mut raws = Vec::new();
    for p in paths {
        raws.push(read_source(p, stdin)?);
    }
    if rle {
        let runs: Vec<Vec<(char, usize)>> = raws.iter().map(|r| parse_rle_tokens(r)).collect::<Result<_, _>>()?;
        let map = AlphabetMap::from_chars(runs.iter().flatten().map(|&(c, _)| c));
        let encoded = runs
            .iter()
            .map(|r| RleString::from_char_runs(r, &map))
            .collect::<Result<_, _>>()?;
        Ok((encoded, map))
    } else {
        let texts: Vec<Vec<char>> = raws.iter().map(|r| plain_chars(r)).collect();
        let map = AlphabetMap::from_texts(texts.iter().map(Vec::as_slice));
        let encoded = texts
            .iter()
            .map(|t| RleString::encode_with(t, &map))
            .collect::<Result<_, _>>()?;
        Ok((encoded, map))
    }
}

fn squares_cmd(a: &SquaresArgs, naive: bool, stdin: &[u8], out: &mut Vec<u8>) -> CliResult {
    let (mut rles, map) = load(&[&a.input.input], a.input.rle, stdin)?;
    let rle = rles.remove(0);
    let max = rle.len() / 2;
    let range = match (a.d, a.min_d, a.max_d) {
        (Some(d), _, _) => {
            if d == 0 || d > max {
                return Err(Error::LengthOutOfRange { d, max }.into());
            }
            d..=d
        }
        (None, lo, hi) => lo.unwrap_or(1).max(1)..=hi.unwrap_or(max).min(max),
    };
    let runs = if naive {
        let text = rle.decode(&map);
        let per_d: Vec<Vec<SquareRun>> = {
            use rayon::prelude::*;
            range
                .clone()
                .into_par_iter()
                .map(|d| oracles::naive_squares_of_length(&text, d).expect("d in range"))
                .collect()
        };
        per_d.into_iter().flatten().collect()
    } else {
        squares::find_squares_in_range_par(&rle, range)
    };
    write_records(out, a.format.json, &runs, |r| {
        format!("{}\t{}\t{}", r.first_start, r.last_start, r.half_len)
    })
}

fn periods_cmd(a: &PeriodsArgs, naive: bool, stdin: &[u8], out: &mut Vec<u8>) -> CliResult {
    let (mut rles, map) = load(&[&a.input.input], a.input.rle, stdin)?;
    let rle = rles.remove(0);
    let found: Vec<RegularPeriod> = if naive {
        oracles::naive_periods(&rle.decode(&map))
    } else {
        periods::find_regular_periods_par(&rle)
    };
    write_records(out, a.format.json, &found, |p| format!("{}\t{}", p.p, p.t))
}

#[derive(Serialize)]
struct PairRecord {
    i: usize,
    k: usize,
    d: usize,
}

#[derive(Serialize)]
struct LcafPairsJson<'a> {
    length: usize,
    pairs: &'a [PairRecord],
}

#[derive(Serialize)]
struct LcafMatchesJson<'a> {
    length: usize,
    matches: &'a [LcafMatch],
}

fn lcaf_cmd(a: &LcafArgs, naive: bool, stdin: &[u8], out: &mut Vec<u8>) -> CliResult {
    if a.file1 == "-" && a.file2 == "-" {
        return Err(Failure::usage(anyhow::anyhow!("only one input may be standard input")));
    }
    let (rles, map) = load(&[&a.file1, &a.file2], a.rle, stdin)?;
    let (r1, r2) = (&rles[0], &rles[1]);

    let (length, pairs) = if naive {
        oracles::naive_lcaf(&r1.decode(&map), &r2.decode(&map))?
    } else {
        let res = if a.all_lengths {
            lcaf::find_lcaf_exhaustive(r1, r2)?
        } else {
            lcaf::find_lcaf(r1, r2)?
        };
        if !a.expand {
            if a.format.json {
                let body = LcafMatchesJson {
                    length: res.length,
                    matches: &res.matches,
                };
                return write_json(out, &body);
            }
            for m in &res.matches {
                push_line(
                    out,
                    &format!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        m.i,
                        m.k,
                        m.d,
                        m.x_max,
                        m.y_max,
                        m.constraint.kind(),
                        m.constraint.params()
                    ),
                );
            }
            return Ok(());
        }
        (res.length, res.pairs())
    };

    let records: Vec<PairRecord> = pairs.into_iter().map(|(i, k)| PairRecord { i, k, d: length }).collect();
    if a.format.json {
        return write_json(
            out,
            &LcafPairsJson {
                length,
                pairs: &records,
            },
        );
    }
    for r in &records {
        push_line(out, &format!("{}\t{}\t{}", r.i, r.k, r.d));
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    algo: Algo,
    n: usize,
    m: usize,
    sigma: usize,
    seed: u64,
    wall_ns: u128,
    #[serde(flatten)]
    counters: WorkCounters,
}

fn bench_cmd(a: &BenchArgs, out: &mut Vec<u8>) -> CliResult {
    let kind = match a.generator {
        GenName::Unary => GenKind::Unary,
        GenName::Random => GenKind::Random { sigma: a.sigma },
        GenName::Runs => GenKind::Runs {
            mean_run_len: a.mean_run,
            sigma: a.sigma,
        },
    };
    let t1 = bench::gen(kind, a.n, a.seed)?;
    let t2 = bench::gen(kind, a.n, a.seed.wrapping_add(1))?;
    let workload = match a.algo {
        Algo::Squares => Workload::Squares(&t1),
        Algo::Periods => Workload::Periods(&t1),
        Algo::Lcaf => {
            if a.n == 0 {
                return Err(Error::InvalidGenerator("lcaf needs n >= 1".into()).into());
            }
            Workload::Lcaf(&t1, &t2)
        }
    };
    let engine = if a.naive { Engine::Naive } else { Engine::Fast };
    let start = Instant::now();
    let (output, counters) = bench::run_instrumented(workload, engine)?;
    let wall_ns = start.elapsed().as_nanos();
    std::hint::black_box(&output);

    let row = BenchRow {
        algo: a.algo,
        n: a.n,
        m: RleString::encode(&t1).0.runs(),
        sigma: a.sigma,
        seed: a.seed,
        wall_ns,
        counters,
    };
    if a.csv {
        push_line(
            out,
            "algo,n,m,sigma,seed,wall_ns,window_jumps,segment_pairs,parikh_entry_ops",
        );
        push_line(
            out,
            &format!(
                "{},{},{},{},{},{},{},{},{}",
                format!("{:?}", row.algo).to_lowercase(),
                row.n,
                row.m,
                row.sigma,
                row.seed,
                row.wall_ns,
                counters.window_jumps,
                counters.segment_pairs,
                counters.parikh_entry_ops
            ),
        );
        Ok(())
    } else {
        write_json(out, &row)
    }
}

fn push_line(out: &mut Vec<u8>, line: &str) {
    out.extend_from_slice(line.as_bytes());
    out.push(b'\n');
}

fn write_json<T: Serialize + ?Sized>(out: &mut Vec<u8>, value: &T) -> CliResult {
    serde_json::to_writer(&mut *out, value).map_err(Failure::input)?;
    out.push(b'\n');
    Ok(())
}

fn write_records<T: Serialize>(out: &mut Vec<u8>, json: bool, records: &[T], tsv: impl Fn(&T) -> String) -> CliResult {
    if json {
        return write_json(out, records);
    }
    for r in records {
        push_line(out, &tsv(r));
    }
    Ok(())
}
