//! Golden-file corpus for the command-line tool.
//!
//! Each case is `golden/<name>.args` (one argument per line) with the expected
//! stdout and exit code in `golden/<name>.out`. Set `UPDATE_GOLDEN=1` to
//! rewrite the expectations.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn case_names() -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "args").then(|| path.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
}

pub fn render(name: &str) -> String {
    let dir = golden_dir();
    let args = fs::read_to_string(dir.join(format!("{name}.args"))).expect("args file");
    let output = Command::new(env!("CARGO_BIN_EXE_necklace"))
        .args(args.lines().filter(|l| !l.is_empty()))
        .current_dir(&dir)
        .output()
        .expect("run necklace");
    format!(
        "{}exit: {}\n",
        String::from_utf8_lossy(&output.stdout),
        output.status.code().unwrap_or(-1)
    )
}

/// Returns the names of cases whose output differs from the stored file.
pub fn check_corpus() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for name in case_names() {
        let actual = render(&name);
        let path = golden_dir().join(format!("{name}.out"));
        if update {
            fs::write(&path, &actual).expect("write golden");
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(expected) if expected == actual => {}
            _ => failures.push(name),
        }
    }
    failures
}
