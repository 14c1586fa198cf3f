#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// A golden case: `<name>.args` holds the arguments, `<name>.out` the exact
/// stdout and the optional `<name>.status` a nonzero exit code.
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub stdout: String,
    pub status: i32,
}

pub fn cases() -> Vec<Case> {
    let dir = fixtures().join("cases");
    let mut names: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| {
            let name = e.unwrap().file_name().into_string().unwrap();
            name.strip_suffix(".args").map(str::to_owned)
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let read = |ext: &str| fs::read_to_string(dir.join(format!("{name}.{ext}")));
            let args = read("args")
                .unwrap()
                .split_whitespace()
                .map(str::to_owned)
                .collect();
            let stdout = read("out").unwrap();
            let status = read("status").map_or(0, |s| s.trim().parse().unwrap());
            Case {
                name,
                args,
                stdout,
                status,
            }
        })
        .collect()
}

/// Runs the binary from the fixtures directory with `SRCX_SEED` unset.
pub fn srcx<S: AsRef<str>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srcx"))
        .args(args.iter().map(AsRef::as_ref))
        .current_dir(fixtures())
        .env_remove(srcx_cli::SEED_VAR)
        .output()
        .unwrap()
}

/// Runs every golden case and describes each mismatch.
pub fn golden_mismatches() -> (usize, Vec<String>) {
    let cases = cases();
    let mut bad = Vec::new();
    for case in &cases {
        let out = srcx(&case.args);
        let stdout = String::from_utf8_lossy(&out.stdout);
        let status = out.status.code().unwrap_or(-1);
        if stdout != case.stdout {
            bad.push(format!(
                "{}: stdout\n{stdout}\nexpected\n{}",
                case.name, case.stdout
            ));
        }
        if status != case.status {
            bad.push(format!(
                "{}: exit {status}, expected {}",
                case.name, case.status
            ));
        }
    }
    (cases.len(), bad)
}
