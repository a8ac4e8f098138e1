#![allow(dead_code)]

use std::process::{Command, Output};

/// Runs the binary with a scrubbed environment so ambient configuration
/// cannot leak into test results.
pub fn flagspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagspec"))
        .args(args)
        .env_remove("FLAGSPEC_MAX_DISTINCT")
        .output()
        .expect("binary runs")
}

pub fn flagspec_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagspec"))
        .args(args)
        .env_remove("FLAGSPEC_MAX_DISTINCT")
        .env(key, value)
        .output()
        .expect("binary runs")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf8")
}

pub fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf8")
}

pub fn code(output: &Output) -> i32 {
    output.status.code().expect("process exited normally")
}
