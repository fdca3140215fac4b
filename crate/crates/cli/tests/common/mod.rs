#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use altdef_core::io::{self, to_canonical_string};
use altdef_core::{Cochain, DeformationJet, GaugeJet};
use serde_json::Value;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", self.stdout))
    }

    pub fn report(&self) -> Value {
        assert_eq!(self.code, 0, "stderr: {}", self.stderr);
        self.json()
    }
}

pub fn altdef<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_altdef"))
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn write(dir: &Path, name: &str, value: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, to_canonical_string(value)).unwrap();
    path
}

pub fn write_cochain(dir: &Path, name: &str, c: &Cochain) -> PathBuf {
    write(dir, name, &io::cochain_to_value(c))
}

pub fn write_jet(dir: &Path, name: &str, jet: &DeformationJet) -> PathBuf {
    write(dir, name, &io::jet_to_value(jet))
}

pub fn write_gauge(dir: &Path, name: &str, g: &GaugeJet) -> PathBuf {
    write(dir, name, &io::gauge_to_value(g))
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}
