//! Built-in algebras with exact multiplication tables.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Names accepted by [`catalog`]; `zero-<n>` stands for every `n ≥ 0`.
pub const CATALOG_NAMES: &[&str] = &[
    "octonions",
    "alt4-a",
    "alt4-b",
    "m2",
    "zero-<n>",
    "k-trivial",
];

/// Octonion products in the basis `u, e1, …, e7`. Entry `[i][j]` encodes
/// `±(k + 1)` for `b_i · b_j = ±b_k`.
const OCTONION_TABLE: [[i8; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, -1, 5, 8, -3, 7, -6, -4],
    [3, -5, -1, 6, 2, -4, 8, -7],
    [4, -8, -6, -1, 7, 3, -5, 2],
    [5, 3, -2, -7, -1, 8, 4, -6],
    [6, -7, 4, -3, -8, -1, 2, 5],
    [7, 6, -8, 5, -4, -2, -1, 3],
    [8, 4, 7, -2, 6, -5, -3, -1],
];

fn names(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

fn signed_table(entries: &[(usize, usize, usize, i64)]) -> Vec<(usize, usize, usize, Rational)> {
    entries
        .iter()
        .map(|&(i, j, k, c)| (i, j, k, Rational::from(c)))
        .collect()
}

fn octonions() -> Algebra {
    let mut table = Vec::new();
    for (i, row) in OCTONION_TABLE.iter().enumerate() {
        for (j, &code) in row.iter().enumerate() {
            let k = code.unsigned_abs() as usize - 1;
            table.push((i, j, k, Rational::from(code.signum() as i64)));
        }
    }
    let basis = names(&["u", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]);
    Algebra::from_table("octonions", basis, &table).expect("static table")
}

fn alt4_a() -> Algebra {
    // e0² = e0, e0e1 = e1, e2e0 = e2, e2e3 = e1, e3e0 = e3, e3e2 = −e1
    let table = signed_table(&[
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (2, 0, 2, 1),
        (2, 3, 1, 1),
        (3, 0, 3, 1),
        (3, 2, 1, -1),
    ]);
    Algebra::from_table("alt4-a", names(&["e0", "e1", "e2", "e3"]), &table).expect("static table")
}

fn alt4_b() -> Algebra {
    // e0² = e0, e0e2 = e2, e0e3 = e3, e1e0 = e1, e2e3 = e1, e3e2 = −e1
    let table = signed_table(&[
        (0, 0, 0, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (2, 3, 1, 1),
        (3, 2, 1, -1),
    ]);
    Algebra::from_table("alt4-b", names(&["e0", "e1", "e2", "e3"]), &table).expect("static table")
}

/// 2×2 matrices with e1 = E11, e2 = E12, e3 = E21, e4 = E22.
fn m2() -> Algebra {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut table = Vec::new();
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate() {
            if b == c {
                let k = units.iter().position(|&u| u == (a, d)).unwrap();
                table.push((i, j, k, Rational::from(1)));
            }
        }
    }
    Algebra::from_table("m2", Algebra::default_basis(4), &table).expect("static table")
}

const MAX_ZERO_DIM: usize = 64;

pub fn catalog(name: &str) -> Result<Algebra> {
    match name {
        "octonions" => Ok(octonions()),
        "alt4-a" => Ok(alt4_a()),
        "alt4-b" => Ok(alt4_b()),
        "m2" => Ok(m2()),
        // the ground field as a one-dimensional algebra
        "k-trivial" => Algebra::from_table(
            "k-trivial",
            Algebra::default_basis(1),
            &signed_table(&[(0, 0, 0, 1)]),
        ),
        _ => {
            let n = name
                .strip_prefix("zero-")
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&n| n <= MAX_ZERO_DIM)
                .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
            Algebra::from_table(name, Algebra::default_basis(n), &[])
        }
    }
}

/// Catalog entries that are alternative, used by tests and the complex check.
pub const ALTERNATIVE_CATALOG: &[&str] = &["octonions", "alt4-a", "alt4-b", "m2", "k-trivial"];
