//! Golden transcripts for the `pdig` binary.
//!
//! Each transcript file holds a sequence of invocations run from the `tests`
//! directory, with their stdout, stderr (minus timing lines) and exit code.
//! `UPDATE_GOLDEN=1` rewrites the files instead of comparing.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn corpus() -> Vec<String> {
    let mut files: Vec<String> = fs::read_dir(tests_dir().join("corpus"))
        .expect("corpus directory")
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|name| name.ends_with(".dg"))
        .map(|name| format!("corpus/{name}"))
        .collect();
    files.sort();
    files
}

const BAD: [&str; 5] = [
    "bad/duplicate.dg",
    "bad/loop.dg",
    "bad/out_of_range.dg",
    "bad/missing_header.dg",
    "bad/garbage.dg",
];

fn args(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn per_file(cmd: &str, extra: &[&str]) -> Vec<Vec<String>> {
    corpus()
        .iter()
        .map(String::as_str)
        .chain(extra.iter().copied())
        .map(|f| args(&format!("{cmd} {f}")))
        .collect()
}

/// Invocations for every transcript, keyed by transcript name.
pub fn cases() -> Vec<(&'static str, Vec<Vec<String>>)> {
    let mut analyze = per_file("analyze", &BAD);
    for f in [
        "dicycle4",
        "sym_c5",
        "antihole7",
        "c4_complement",
        "random8",
        "tournament5",
    ] {
        analyze.push(args(&format!("analyze corpus/{f}.dg --brute")));
    }
    analyze.push(args("analyze corpus/missing.dg"));
    analyze.push(args("analyze bad/big17.dg"));

    let compare = [
        "compare corpus/c3.dg corpus/c3.dg",
        "compare corpus/random8.dg corpus/random8.dg",
        "compare corpus/c3.dg corpus/p3.dg",
        "compare corpus/p3.dg corpus/c3.dg",
        "compare corpus/p3_plus.dg corpus/p3_minus.dg",
        "compare corpus/dicycle4.dg corpus/c4_complement.dg",
        "compare corpus/sym_p4.dg corpus/k4.dg",
        "compare corpus/dicycle4.dg corpus/bipartite_join.dg",
        "compare corpus/arcless5.dg corpus/star_out.dg",
        "compare corpus/dicycle4.dg bad/n3.dg",
        "compare corpus/dicycle4.dg bad/loop.dg",
    ]
    .map(args)
    .to_vec();

    let verify = [
        "verify --suite theorem1 --nmax 4",
        "verify --suite theorem1 --nmax 6 --trials 50 --seed 3",
        "verify --suite theorem1 --nmax 6 --trials 50 --seed 3 --sequential",
        "verify --suite semistrong --nmax 6 --trials 100 --seed 5",
        "verify --suite prop2 --nmax 6 --trials 100 --seed 5",
        "verify --suite structure3 --nmax 6 --trials 30 --seed 2",
        "verify --suite solvers --nmax 6 --trials 20 --seed 9",
        "verify --suite solvers --nmax 9",
        "verify --suite theorem1 --nmax 0",
        "verify --suite bogus --nmax 4",
        "verify --nmax 4",
    ]
    .map(args)
    .to_vec();

    let generate = [
        "generate --named sym_p4 --seed 0",
        "generate --named c3 --seed 0",
        "generate --named p3 --seed 0",
        "generate --named p3_plus --seed 0",
        "generate --named p3_minus --seed 0",
        "generate --named dicycle --k 5 --seed 0",
        "generate --named sym_cycle --k 5 --seed 0",
        "generate --named sym_complete --k 4 --seed 0",
        "generate --named sym_path --k 4 --seed 0",
        "generate --named c4_complement --seed 0",
        "generate --named arcless --k 3 --seed 0",
        "generate --model er --n 6 --psym 0.2 --pasym 0.2 --seed 1",
        "generate --model er --n 6 --psym 0.2 --pasym 0.2 --seed 2",
        "generate --model er --n 7 --psym 0.5 --pasym 0.25 --seed 1",
        "generate --model er --n 5 --psym 0 --pasym 1 --seed 4",
        "generate --model er --n 5 --psym 0.8 --pasym 0.5 --seed 1",
        "generate --model ws --n 5 --psym 0.1 --pasym 0.1 --seed 1",
        "generate --model er --n 5 --seed 1",
        "generate --named dicycle --seed 0",
        "generate --named dicycle --k 2 --seed 0",
        "generate --named c3 --k 4 --seed 0",
        "generate --named petersen --seed 0",
        "generate --seed 0",
    ]
    .map(args)
    .to_vec();

    vec![
        ("analyze", analyze),
        ("compare", compare),
        ("verify", verify),
        ("generate", generate),
        ("cotree", per_file("cotree", &["bad/garbage.dg"])),
        ("pathcover", per_file("pathcover", &["bad/duplicate.dg"])),
        (
            "export-dot",
            per_file("export-dot", &["bad/out_of_range.dg"]),
        ),
    ]
}

pub fn run_pdig(args: &[String]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pdig"))
        .args(args)
        .current_dir(tests_dir())
        .output()
        .expect("spawn pdig");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().unwrap_or(-1),
    )
}

pub fn transcript(invocations: &[Vec<String>]) -> String {
    let mut t = String::new();
    for a in invocations {
        let (stdout, stderr, code) = run_pdig(a);
        t.push_str(&format!("$ pdig {}\n", a.join(" ")));
        t.push_str(&stdout);
        for line in stderr.lines().filter(|l| !l.starts_with("elapsed_ms:")) {
            t.push_str(&format!("! {line}\n"));
        }
        t.push_str(&format!("exit: {code}\n\n"));
    }
    t
}

/// Compares (or rewrites) every transcript. Returns one entry per transcript
/// with the first mismatching line on failure.
pub fn check_all() -> Vec<(&'static str, Result<usize, String>)> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1");
    cases()
        .into_iter()
        .map(|(name, invocations)| {
            let path = tests_dir().join("golden").join(format!("{name}.txt"));
            let actual = transcript(&invocations);
            if update {
                fs::write(&path, &actual).expect("write golden");
                return (name, Ok(invocations.len()));
            }
            let expected = match fs::read_to_string(&path) {
                Ok(s) => s,
                Err(e) => return (name, Err(format!("{}: {e}", path.display()))),
            };
            if expected == actual {
                return (name, Ok(invocations.len()));
            }
            let diff = expected
                .lines()
                .zip(actual.lines())
                .enumerate()
                .find(|(_, (e, a))| e != a)
                .map(|(i, (e, a))| format!("line {}: expected `{e}`, got `{a}`", i + 1))
                .unwrap_or_else(|| "transcripts differ in length".to_string());
            (name, Err(diff))
        })
        .collect()
}
