//! Exact rational linear algebra.
//!
//! Everything here works over ℚ with dense row-major storage. Elimination
//! skips zero entries, which keeps the structure-constant matrices produced by
//! the cochain differentials cheap to reduce even at a few thousand rows.

use malachite_base::num::basic::traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use malachite_q::Rational;

/// Parses a canonical rational string such as `"3"`, `"-1/2"` or `"4/6"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Format("empty rational".into()));
    }
    let parsed: Option<Rational> = match t.split_once('/') {
        None => t.parse().ok(),
        Some((n, d)) => {
            let n: Option<Rational> = n.trim().parse().ok();
            let d: Option<Rational> = d.trim().parse().ok();
            match (n, d) {
                (Some(n), Some(d)) if d != Rational::ZERO => {
                    if !is_integer(&n) || !is_integer(&d) {
                        None
                    } else {
                        Some(n / d)
                    }
                }
                _ => None,
            }
        }
    };
    parsed.ok_or_else(|| Error::Format(format!("malformed rational `{s}`")))
}

/// Formats as `p` or `p/q` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn is_integer(r: &Rational) -> bool {
    *r.denominator_ref() == 1u32
}

#[inline]
pub(crate) fn is_zero(r: &Rational) -> bool {
    *r == Rational::ZERO
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(is_zero)
}

pub fn zero_vector(len: usize) -> Vec<Rational> {
    vec![Rational::ZERO; len]
}

/// `acc += scale * v`
pub(crate) fn axpy(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    if is_zero(scale) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !is_zero(x) {
            *a += scale * x;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: zero_vector(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::ONE;
        }
        m
    }

    /// Builds a matrix from integer rows; handy in tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| Rational::from(x))
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    /// Assembles a matrix whose `j`th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                if !is_zero(x) {
                    m.entries[i * cols + j] = x.clone();
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut acc = Rational::ZERO;
                for (a, x) in self.row(i).iter().zip(v) {
                    if !is_zero(a) && !is_zero(x) {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let cols = other.cols;
        let rows: Vec<Vec<Rational>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut acc = zero_vector(cols);
                for (k, a) in self.row(i).iter().enumerate() {
                    axpy(&mut acc, a, other.row(k));
                }
                acc
            })
            .collect();
        Matrix::from_rows(rows, cols)
    }

    fn to_row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// In-place Gauss-Jordan elimination on `rows` restricted to the first
/// `limit` columns. Returns the pivot columns; rows are left in reduced
/// row echelon form with the pivot rows first.
fn reduce_in_place(rows: &mut [Vec<Rational>], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::ONE / &rows[r][c];
        let width = rows[r].len();
        let mut pivot_row: Vec<(usize, Rational)> = Vec::new();
        for j in c..width {
            let x = &mut rows[r][j];
            if !is_zero(x) {
                *x *= &inv;
                pivot_row.push((j, x.clone()));
            }
        }
        rows.par_iter_mut().enumerate().for_each(|(i, row)| {
            if i == r || is_zero(&row[c]) {
                return;
            }
            let factor = row[c].clone();
            for (j, x) in &pivot_row {
                row[*j] -= &factor * x;
            }
        });
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form together with its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.to_row_vecs();
    let pivots = reduce_in_place(&mut rows, m.cols);
    let reduced = Matrix::from_rows(rows, m.cols).expect("row widths are preserved");
    (reduced, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Nullspace basis in the standard free-variable parametrization: one vector
/// per free column, carrying a 1 in that column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    kernel_from_rref(&r, &pivots)
}

pub(crate) fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = zero_vector(cols);
            v[free] = Rational::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                let x = r.get(row, free);
                if !is_zero(x) {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// The pivot columns of `m`, which span its column space.
pub fn column_space_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let (_, pivots) = rref(m);
    pivots.into_iter().map(|j| m.column(j)).collect()
}

/// A particular solution of `m·x = b` with every free variable set to zero,
/// or `None` when `b` is outside the column space.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let cols = m.cols();
    let mut rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = reduce_in_place(&mut rows, cols);
    if rows[pivots.len()..].iter().any(|row| !is_zero(&row[cols])) {
        return Ok(None);
    }
    let mut x = zero_vector(cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = rows[row][cols].clone();
    }
    Ok(Some(x))
}

/// Incrementally maintained echelon form of a span, used for rank tests and
/// membership queries.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    len: usize,
    // each stored vector has a leading 1 at `pivot` and zeros at every other
    // stored pivot
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (p, row) in &self.rows {
            if !is_zero(&out[*p]) {
                let f = -out[*p].clone();
                axpy(&mut out, &f, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len, "vector length differs from ambient");
        let mut rem = self.reduce(v);
        let Some(p) = rem.iter().position(|x| !is_zero(x)) else {
            return false;
        };
        let inv = Rational::ONE / &rem[p];
        for x in rem.iter_mut() {
            if !is_zero(x) {
                *x *= &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !is_zero(&row[p]) {
                let f = -row[p].clone();
                axpy(row, &f, &rem);
            }
        }
        self.rows.push((p, rem));
        true
    }

    /// Stored basis vectors ordered by pivot; this is the nonzero part of the
    /// RREF of the inserted vectors.
    pub fn reduced_basis(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<_> = self.rows.iter().collect();
        rows.sort_by_key(|(p, _)| *p);
        rows.into_iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Picks vectors of `space` whose cosets form a basis of
/// `span(space) / span(subspace)`. Candidates are admitted greedily in input
/// order against a basis seeded with the subspace.
pub fn quotient_representatives(
    space: &[Vec<Rational>],
    subspace: &[Vec<Rational>],
) -> Result<Vec<Vec<Rational>>> {
    let len = space.first().or(subspace.first()).map_or(0, |v| v.len());
    for v in space.iter().chain(subspace) {
        if v.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
    }
    let mut ambient = EchelonBasis::new(len);
    for v in space {
        ambient.insert(v);
    }
    if let Some(index) = subspace.iter().position(|w| !ambient.contains(w)) {
        return Err(Error::NotInSpan { index });
    }
    let mut span = EchelonBasis::new(len);
    for w in subspace {
        span.insert(w);
    }
    Ok(space.iter().filter(|v| span.insert(v)).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn qv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Matrix::identity(2));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = rref(&Matrix::zeros(3, 3));
        assert!(r.is_zero());
        assert!(p.is_empty());

        let (r, p) = rref(&Matrix::from_i64_rows(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Matrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&Matrix::zeros(2, 3));
        assert_eq!(k, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0]), qv(&[0, 0, 1])]);
        assert!(kernel_basis(&Matrix::identity(2)).is_empty());
        let k = kernel_basis(&Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(k, vec![qv(&[-1, 1, 0])]);
    }

    #[test]
    fn column_space_examples() {
        assert_eq!(
            column_space_basis(&Matrix::identity(2)),
            vec![qv(&[1, 0]), qv(&[0, 1])]
        );
        assert!(column_space_basis(&Matrix::zeros(2, 2)).is_empty());
        assert_eq!(
            column_space_basis(&Matrix::from_i64_rows(&[&[1, 2], &[2, 4]])),
            vec![qv(&[1, 2])]
        );
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve(&Matrix::identity(2), &qv(&[3, 5])).unwrap(),
            Some(qv(&[3, 5]))
        );
        assert_eq!(solve(&Matrix::zeros(2, 2), &qv(&[1, 0])).unwrap(), None);
        assert_eq!(
            solve(&Matrix::from_i64_rows(&[&[1, 1], &[2, 2]]), &qv(&[1, 2])).unwrap(),
            Some(qv(&[1, 0]))
        );
        assert!(solve(&Matrix::identity(2), &qv(&[1])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let std2 = vec![qv(&[1, 0]), qv(&[0, 1])];
        assert_eq!(quotient_representatives(&std2, &[]).unwrap().len(), 2);
        assert!(quotient_representatives(&std2, &std2).unwrap().is_empty());

        let std3 = vec![qv(&[1, 0, 0]), qv(&[0, 1, 0]), qv(&[0, 0, 1])];
        let reps = quotient_representatives(&std3, &[qv(&[1, 1, 0])]).unwrap();
        assert_eq!(reps, vec![qv(&[1, 0, 0]), qv(&[0, 0, 1])]);

        let err = quotient_representatives(&[qv(&[1, 0])], &[qv(&[0, 1])]).unwrap_err();
        assert_eq!(err, Error::NotInSpan { index: 0 });
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("4/6").unwrap(), Rational::from_signeds(2, 3));
        assert_eq!(
            parse_rational("-1/2").unwrap(),
            Rational::from_signeds(-1, 2)
        );
        assert_eq!(parse_rational(" 7 ").unwrap(), q(7));
        assert_eq!(format_rational(&Rational::from_signeds(-6, 4)), "-3/2");
        assert_eq!(format_rational(&q(0)), "0");
        for bad in ["", "1/0", "a", "1/2/3", "1.5", "1/2.5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix_strategy() -> impl Strategy<Value = Matrix> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
                    Matrix::new(r, c, xs.into_iter().map(Rational::from).collect()).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in matrix_strategy()) {
                prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
            }

            #[test]
            fn rref_idempotent(m in matrix_strategy()) {
                let (r, _) = rref(&m);
                let (rr, _) = rref(&r);
                prop_assert_eq!(rr, r);
            }

            #[test]
            fn kernel_vectors_annihilate(m in matrix_strategy()) {
                for v in kernel_basis(&m) {
                    prop_assert!(is_zero_vector(&m.mul_vec(&v).unwrap()));
                }
            }

            #[test]
            fn solve_is_exact(m in matrix_strategy(), seed in proptest::collection::vec(-4i64..=4, 6)) {
                let x0: Vec<Rational> = seed.iter().take(m.cols()).map(|&x| Rational::from(x)).collect();
                let x0 = if x0.len() < m.cols() { let mut v = x0; v.resize(m.cols(), Rational::ZERO); v } else { x0 };
                let b = m.mul_vec(&x0).unwrap();
                let x = solve(&m, &b).unwrap().expect("b is in the column space");
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }

            #[test]
            fn rationals_lowest_terms(n in -50i64..50, d in 1i64..50) {
                let r = Rational::from_signeds(n, d);
                let s = format_rational(&r);
                prop_assert_eq!(parse_rational(&s).unwrap(), r.clone());
                if let Some((num, den)) = s.split_once('/') {
                    let (num, den): (i64, i64) = (num.parse().unwrap(), den.parse().unwrap());
                    prop_assert!(den > 1);
                    prop_assert_eq!(gcd(num.unsigned_abs(), den as u64), 1);
                }
            }
        }

        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
    }
}
