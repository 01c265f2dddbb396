//! Golden-file comparison of CLI output.
//!
//! Each case runs the CLI in-process and compares stdout and the exit code
//! with `tests/golden/v1/<name>.out`. Timing figures are masked first.
//! Regenerate the corpus with
//!
//!     cargo test -p oddschur-cli --test golden -- --bless

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

const CORPUS: &str = "v1";

const CASES: &[(&str, &[&str])] = &[
    ("lr_cancellation_all", &["lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--method", "all"]),
    ("lr_cancellation_json", &["--format", "json", "lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]"]),
    (
        "lr_yamanouchi_single",
        &["lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[2,2,2]", "--method", "yamanouchi"],
    ),
    ("lr_s21_squared", &["lr", "--mu", "[2,1]", "--nu", "[2,1]"]),
    ("lr_s21_squared_even_json", &["--format", "json", "lr", "--mu", "[2,1]", "--nu", "[2,1]", "--method", "even"]),
    ("lr_s11_s2", &["lr", "--mu", "[1,1]", "--nu", "[2]"]),
    ("schur_21_n3", &["schur", "--lambda", "[2,1]", "--n", "3", "--method", "all"]),
    ("schur_22_json", &["--format", "json", "schur", "--lambda", "[2,2]", "--method", "kostka"]),
    ("schur_empty", &["schur", "--lambda", "[]", "--n", "2"]),
    ("kostka_4", &["kostka", "--k", "4"]),
    ("kostka_3_json", &["--format", "json", "kostka", "--k", "3"]),
    ("hive_points", &["hive", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--emit", "points"]),
    (
        "hive_points_json",
        &["--format", "json", "hive", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--emit", "points"],
    ),
    (
        "triangle_points",
        &["hive", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--emit", "points", "--model", "triangle"],
    ),
    ("hive_count", &["hive", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]", "--emit", "count"]),
    ("hive_signed", &["hive", "--mu", "[2,1]", "--nu", "[1,1]", "--lambda", "[2,2,1]", "--emit", "signed"]),
    ("pieri_vertical", &["pieri", "--lambda", "[2,1]", "--k", "2", "--kind", "vertical", "--check"]),
    ("pieri_horizontal_json", &["--format", "json", "pieri", "--lambda", "[3,1]", "--k", "2", "--kind", "horizontal"]),
    ("plactic_example", &["plactic", "--word", "53422331112"]),
    ("plactic_right_to_left_json", &["--format", "json", "plactic", "--word", "3121", "--strategy", "right-to-left"]),
    ("verify_ring_3", &["verify", "--suite", "ring", "--max-degree", "3"]),
    ("verify_polytopes_3_json", &["--format", "json", "verify", "--suite", "polytopes", "--max-degree", "3"]),
];

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(CORPUS)
}

/// Replaces wall-clock figures, which are the only non-deterministic output.
fn mask_timing(s: &str) -> String {
    s.lines()
        .map(|line| {
            if let Some(rest) = line.trim_start().strip_prefix("\"wall_seconds\":") {
                let comma = if rest.trim_end().ends_with(',') { "," } else { "" };
                let indent = &line[..line.len() - line.trim_start().len()];
                format!("{indent}\"wall_seconds\": 0{comma}")
            } else if line.starts_with("suite ") && line.ends_with('s') {
                match line.rfind(", ") {
                    Some(i) => format!("{}, <time>", &line[..i]),
                    None => line.to_string(),
                }
            } else {
                line.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn render(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = oddschur_cli::run(std::iter::once("oddschur").chain(args.iter().copied()), &mut out, &mut err);
    let stdout = String::from_utf8(out).expect("utf-8 output");
    format!("$ oddschur {}\n# exit {code}\n{}\n", args.join(" "), mask_timing(stdout.trim_end()))
}

fn main() -> ExitCode {
    let bless = std::env::args().any(|a| a == "--bless");
    let dir = corpus_dir();
    if bless {
        fs::create_dir_all(&dir).expect("create golden directory");
    }
    let mut failed = 0;
    for (name, args) in CASES {
        let got = render(args);
        let path = dir.join(format!("{name}.out"));
        if bless {
            fs::write(&path, &got).expect("write golden file");
            println!("blessed {name}");
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(want) if want == got => println!("golden {name} ... ok"),
            Ok(want) => {
                failed += 1;
                println!("golden {name} ... FAILED\n--- expected\n{want}--- got\n{got}");
            }
            Err(e) => {
                failed += 1;
                println!("golden {name} ... FAILED (missing {}: {e}; rerun with --bless)", path.display());
            }
        }
    }
    println!("\ngolden result: {} passed; {failed} failed", CASES.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
