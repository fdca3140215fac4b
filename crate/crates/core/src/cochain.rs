//! Cochains in coordinates and the differentials between them.
//!
//! A p-cochain on an n-dimensional algebra is stored as `n^(p+1)`
//! coordinates in lexicographic order of `(i₁, …, i_p, k)`: the entry at that
//! position is the coefficient of `e_k` in `φ(e_{i₁} ⊗ … ⊗ e_{i_p})`.

use std::fmt;
use std::str::FromStr;

use malachite_base::num::basic::traits::One;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero, is_zero_vector, zero_vector, Matrix, Rational};

/// Largest dense differential matrix we are willing to assemble.
pub const MAX_DENSE_ENTRIES: usize = 1 << 24;

/// Highest cochain degree that can be represented (codomain of δ³).
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    dim: usize,
    coeffs: Vec<Rational>,
}

/// An argument to a cochain: a basis index or an arbitrary coordinate vector.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Arg<'a> {
    Basis(usize),
    Vector(&'a [Rational]),
}

pub(crate) fn coord_len(degree: usize, dim: usize) -> usize {
    dim.pow(degree as u32 + 1)
}

impl Cochain {
    pub fn new(degree: usize, dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        let expected = coord_len(degree, dim);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self {
            degree,
            dim,
            coeffs,
        })
    }

    pub fn zero(degree: usize, dim: usize) -> Self {
        Self {
            degree,
            dim,
            coeffs: zero_vector(coord_len(degree, dim)),
        }
    }

    /// The coordinate basis cochain with a single 1 at `index`.
    pub fn basis(degree: usize, dim: usize, index: usize) -> Self {
        let mut c = Self::zero(degree, dim);
        c.coeffs[index] = Rational::ONE;
        c
    }

    /// Builds a cochain from sparse 0-based entries `([i₁, …, i_p, k], value)`.
    pub fn from_entries(
        degree: usize,
        dim: usize,
        entries: &[(Vec<usize>, Rational)],
    ) -> Result<Self> {
        let mut c = Self::zero(degree, dim);
        for (idx, value) in entries {
            let flat = c.flat_index(idx)?;
            c.coeffs[flat] += value;
        }
        Ok(c)
    }

    /// The multiplication of `a` viewed as a 2-cochain.
    pub fn from_algebra(a: &Algebra) -> Self {
        Self {
            degree: 2,
            dim: a.dim(),
            coeffs: a.constants().to_vec(),
        }
    }

    /// The identity map as a 1-cochain.
    pub fn identity(dim: usize) -> Self {
        let mut c = Self::zero(1, dim);
        for i in 0..dim {
            c.coeffs[i * dim + i] = Rational::ONE;
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    /// Flat coordinate index of `[i₁, …, i_p, k]`.
    pub fn flat_index(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: self.degree + 1,
                found: idx.len(),
            });
        }
        let mut flat = 0;
        for &i in idx {
            if i >= self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: i,
                });
            }
            flat = flat * self.dim + i;
        }
        Ok(flat)
    }

    /// Inverse of [`Cochain::flat_index`].
    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.degree + 1];
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
        idx
    }

    /// `φ(e_{i₁} ⊗ … ⊗ e_{i_p})` as a coordinate slice.
    pub fn value(&self, args: &[usize]) -> &[Rational] {
        debug_assert_eq!(args.len(), self.degree);
        let start = args.iter().fold(0, |acc, &i| acc * self.dim + i) * self.dim;
        &self.coeffs[start..start + self.dim]
    }

    /// Nonzero entries in coordinate order, as `([i₁, …, i_p, k], value)`.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, x)| !is_zero(x))
            .map(|(flat, x)| (self.multi_index(flat), x))
            .collect()
    }

    fn check_same_shape(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs, ..*self })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs, ..*self })
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        let coeffs = self.coeffs.iter().map(|a| a * s).collect();
        Self { coeffs, ..*self }
    }

    /// Multilinear evaluation on arbitrary elements.
    pub fn evaluate(&self, args: &[&Element]) -> Result<Element> {
        if args.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: args.len(),
            });
        }
        for x in args {
            if x.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: x.dim(),
                });
            }
        }
        let args: Vec<Arg> = args.iter().map(|x| Arg::Vector(x.coords())).collect();
        let mut out = zero_vector(self.dim);
        self.apply_into(&mut out, &Rational::ONE, &args);
        Ok(Element::new(out))
    }

    /// `acc += scale · φ(args)`, expanding vector arguments over their
    /// nonzero coordinates.
    pub(crate) fn apply_into(&self, acc: &mut [Rational], scale: &Rational, args: &[Arg]) {
        fn rec(
            c: &Cochain,
            acc: &mut [Rational],
            scale: &Rational,
            args: &[Arg],
            idx: &mut Vec<usize>,
        ) {
            let pos = idx.len();
            if pos == args.len() {
                axpy(acc, scale, c.value(idx));
                return;
            }
            match args[pos] {
                Arg::Basis(i) => {
                    idx.push(i);
                    rec(c, acc, scale, args, idx);
                    idx.pop();
                }
                Arg::Vector(v) => {
                    for (m, x) in v.iter().enumerate() {
                        if is_zero(x) {
                            continue;
                        }
                        idx.push(m);
                        rec(c, acc, &(scale * x), args, idx);
                        idx.pop();
                    }
                }
            }
        }
        if is_zero(scale) {
            return;
        }
        let mut idx = Vec::with_capacity(args.len());
        rec(self, acc, scale, args, &mut idx);
    }

    fn permute_args(&self, perm: [usize; 3]) -> Result<Cochain> {
        if self.degree != 3 {
            return Err(Error::DegreeMismatch {
                expected: 3,
                found: self.degree,
            });
        }
        let n = self.dim;
        let out = tabulate(3, n, |idx, acc| {
            let src = [idx[perm[0]], idx[perm[1]], idx[perm[2]]];
            acc.clone_from_slice(self.value(&src));
        });
        Ok(out)
    }

    /// Precomposition with `x₁⊗x₂⊗x₃ ↦ x₂⊗x₁⊗x₃`.
    pub fn sigma1(&self) -> Result<Cochain> {
        self.permute_args([1, 0, 2])
    }

    /// Precomposition with `x₁⊗x₂⊗x₃ ↦ x₁⊗x₃⊗x₂`.
    pub fn sigma2(&self) -> Result<Cochain> {
        self.permute_args([0, 2, 1])
    }
}

/// Builds a cochain by filling each output slot `φ(e_{i₁} ⊗ … ⊗ e_{i_p})`.
pub(crate) fn tabulate<F>(degree: usize, dim: usize, fill: F) -> Cochain
where
    F: Fn(&[usize], &mut [Rational]) + Sync,
{
    let mut c = Cochain::zero(degree, dim);
    if dim == 0 {
        return c;
    }
    c.coeffs
        .par_chunks_mut(dim)
        .enumerate()
        .for_each(|(slot, acc)| {
            let mut idx = vec![0; degree];
            let mut rest = slot;
            for p in idx.iter_mut().rev() {
                *p = rest % dim;
                rest /= dim;
            }
            fill(&idx, acc);
        });
    c
}

/// Which cohomology theory a differential belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    LeftAlternative,
    Hochschild,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::LeftAlternative => "left-alternative",
            Theory::Hochschild => "hochschild",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left-alternative" => Ok(Theory::LeftAlternative),
            "hochschild" => Ok(Theory::Hochschild),
            _ => Err(Error::Format(format!("unknown theory `{s}`"))),
        }
    }
}

fn check_input(a: &Algebra, c: &Cochain, degree: usize) -> Result<()> {
    if c.degree != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: c.degree,
        });
    }
    if c.dim != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: c.dim,
        });
    }
    Ok(())
}

// Building blocks evaluated at basis tuples; each adds `s · term` into acc.

/// `s · μ(e_i, φ(args))`
fn mu_left_basis(
    acc: &mut [Rational],
    s: &Rational,
    a: &Algebra,
    i: usize,
    phi: &Cochain,
    args: &[usize],
) {
    a.mul_basis_vec_into(acc, s, i, phi.value(args));
}

/// `s · μ(φ(args), e_j)`
fn mu_right_basis(
    acc: &mut [Rational],
    s: &Rational,
    a: &Algebra,
    phi: &Cochain,
    args: &[usize],
    j: usize,
) {
    a.mul_vec_basis_into(acc, s, phi.value(args), j);
}

/// `s · φ(before…, μ(e_p, e_q), after…)`
fn phi_with_product(
    acc: &mut [Rational],
    s: &Rational,
    a: &Algebra,
    phi: &Cochain,
    before: &[usize],
    (p, q): (usize, usize),
    after: &[usize],
) {
    let mut idx: Vec<usize> = Vec::with_capacity(before.len() + 1 + after.len());
    idx.extend_from_slice(before);
    idx.push(0);
    idx.extend_from_slice(after);
    let slot = before.len();
    for (m, c) in a.product_terms(p, q) {
        idx[slot] = *m;
        axpy(acc, &(s * c), phi.value(&idx));
    }
}

/// `(δ⁰v)(x) = xv − vx` for `v ∈ A`, viewed as a 0-cochain.
pub fn delta0(a: &Algebra, v: &Cochain) -> Result<Cochain> {
    check_input(a, v, 0)?;
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    let coords = v.value(&[]);
    Ok(tabulate(1, a.dim(), |idx, acc| {
        let i = idx[0];
        a.mul_basis_vec_into(acc, &one, i, coords);
        a.mul_vec_basis_into(acc, &minus, coords, i);
    }))
}

/// `(δ¹f)(x⊗y) = f(x)y + x f(y) − f(xy)`, shared by both theories.
pub fn delta1(a: &Algebra, f: &Cochain) -> Result<Cochain> {
    check_input(a, f, 1)?;
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    Ok(tabulate(2, a.dim(), |idx, acc| {
        let (i, j) = (idx[0], idx[1]);
        mu_right_basis(acc, &one, a, f, &[i], j);
        mu_left_basis(acc, &one, a, i, f, &[j]);
        phi_with_product(acc, &minus, a, f, &[], (i, j), &[]);
    }))
}

/// `φ(x,y)z − xφ(y,z) + φ(xy,z) − φ(x,yz)`, the bracket of the 2-differential
/// before symmetrization.
fn hochschild_bracket(
    acc: &mut [Rational],
    a: &Algebra,
    phi: &Cochain,
    x: usize,
    y: usize,
    z: usize,
) {
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    mu_right_basis(acc, &one, a, phi, &[x, y], z);
    mu_left_basis(acc, &minus, a, x, phi, &[y, z]);
    phi_with_product(acc, &one, a, phi, &[], (x, y), &[z]);
    phi_with_product(acc, &minus, a, phi, &[x], (y, z), &[]);
}

/// Left alternative 2-differential:
/// `δ²φ = [μ∘(φ⊗id − id⊗φ) + φ∘(μ⊗id − id⊗μ)]∘(id^⊗3 + σ₁)`.
pub fn delta2(a: &Algebra, phi: &Cochain) -> Result<Cochain> {
    check_input(a, phi, 2)?;
    Ok(tabulate(3, a.dim(), |idx, acc| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        hochschild_bracket(acc, a, phi, x, y, z);
        hochschild_bracket(acc, a, phi, y, x, z);
    }))
}

/// Hochschild 2-differential in the sign convention that makes
/// `δ²φ = δ²_H φ ∘ (id^⊗3 + σ₁)` hold exactly:
/// `(δ²_H φ)(x,y,z) = φ(x,y)z − xφ(y,z) + φ(xy,z) − φ(x,yz)`.
/// This is the negative of the textbook formula, which changes no kernel
/// or image.
pub fn hochschild_delta2(a: &Algebra, phi: &Cochain) -> Result<Cochain> {
    check_input(a, phi, 2)?;
    Ok(tabulate(3, a.dim(), |idx, acc| {
        hochschild_bracket(acc, a, phi, idx[0], idx[1], idx[2]);
    }))
}

/// Left alternative 3-differential, term by term:
///
/// ```text
/// δ³ψ(x₁,x₂,x₃,x₄) = x₁ψ(x₂,x₃,x₄) − x₁ψ(x₃,x₂,x₄)
///                  + ψ(x₁,x₂,x₃)x₄ − ψ(x₂,x₁,x₃)x₄
///                  − ψ(x₁x₂,x₃,x₄) − ψ(x₂x₃,x₁,x₄)
///                  + ψ(x₁,x₂x₃,x₄) + ψ(x₃,x₁x₂,x₄)
///                  − ψ(x₁,x₂,x₃x₄) + ψ(x₂,x₁,x₃x₄)
/// ```
pub fn delta3(a: &Algebra, psi: &Cochain) -> Result<Cochain> {
    check_input(a, psi, 3)?;
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    Ok(tabulate(4, a.dim(), |idx, acc| {
        let (x1, x2, x3, x4) = (idx[0], idx[1], idx[2], idx[3]);
        mu_left_basis(acc, &one, a, x1, psi, &[x2, x3, x4]);
        mu_left_basis(acc, &minus, a, x1, psi, &[x3, x2, x4]);
        mu_right_basis(acc, &one, a, psi, &[x1, x2, x3], x4);
        mu_right_basis(acc, &minus, a, psi, &[x2, x1, x3], x4);
        phi_with_product(acc, &minus, a, psi, &[], (x1, x2), &[x3, x4]);
        phi_with_product(acc, &minus, a, psi, &[], (x2, x3), &[x1, x4]);
        phi_with_product(acc, &one, a, psi, &[x1], (x2, x3), &[x4]);
        phi_with_product(acc, &one, a, psi, &[x3], (x1, x2), &[x4]);
        phi_with_product(acc, &minus, a, psi, &[x1, x2], (x3, x4), &[]);
        phi_with_product(acc, &one, a, psi, &[x2, x1], (x3, x4), &[]);
    }))
}

/// Textbook Hochschild 3-differential
/// `x₁ψ(x₂,x₃,x₄) − ψ(x₁x₂,x₃,x₄) + ψ(x₁,x₂x₃,x₄) − ψ(x₁,x₂,x₃x₄) + ψ(x₁,x₂,x₃)x₄`.
pub fn hochschild_delta3(a: &Algebra, psi: &Cochain) -> Result<Cochain> {
    check_input(a, psi, 3)?;
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    Ok(tabulate(4, a.dim(), |idx, acc| {
        let (x1, x2, x3, x4) = (idx[0], idx[1], idx[2], idx[3]);
        mu_left_basis(acc, &one, a, x1, psi, &[x2, x3, x4]);
        phi_with_product(acc, &minus, a, psi, &[], (x1, x2), &[x3, x4]);
        phi_with_product(acc, &one, a, psi, &[x1], (x2, x3), &[x4]);
        phi_with_product(acc, &minus, a, psi, &[x1, x2], (x3, x4), &[]);
        mu_right_basis(acc, &one, a, psi, &[x1, x2, x3], x4);
    }))
}

/// Applies the differential of `theory` matching the cochain's degree.
pub fn apply_differential(a: &Algebra, c: &Cochain, theory: Theory) -> Result<Cochain> {
    match (c.degree, theory) {
        (0, _) => delta0(a, c),
        (1, _) => delta1(a, c),
        (2, Theory::LeftAlternative) => delta2(a, c),
        (2, Theory::Hochschild) => hochschild_delta2(a, c),
        (3, Theory::LeftAlternative) => delta3(a, c),
        (3, Theory::Hochschild) => hochschild_delta3(a, c),
        (p, _) => Err(Error::UnsupportedDegree(p)),
    }
}

/// `δ^p` as a matrix from `C^p` to `C^(p+1)` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub degree: usize,
    pub theory: Theory,
    pub matrix: Matrix,
}

/// Assembles `δ^p` column by column from its action on coordinate basis
/// cochains. Degrees 0 through 3 are available; degree 0 is the inner
/// derivation map `v ↦ (x ↦ xv − vx)`.
pub fn differential_matrix(
    a: &Algebra,
    degree: usize,
    theory: Theory,
) -> Result<DifferentialMatrix> {
    if degree > 3 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let n = a.dim();
    let cols = coord_len(degree, n);
    let rows = coord_len(degree + 1, n);
    if rows.saturating_mul(cols) > MAX_DENSE_ENTRIES {
        return Err(Error::TooLarge { rows, cols });
    }
    let columns: Vec<Vec<Rational>> = (0..cols)
        .into_par_iter()
        .map(|j| {
            apply_differential(a, &Cochain::basis(degree, n, j), theory).map(Cochain::into_coeffs)
        })
        .collect::<Result<_>>()?;
    Ok(DifferentialMatrix {
        degree,
        theory,
        matrix: Matrix::from_columns(&columns, rows)?,
    })
}

/// Whether `δ^(p+1) ∘ δ^p` vanishes, checked column by column on coordinate
/// basis cochains without assembling either matrix. This is the product
/// `matrix(δ^(p+1)) · matrix(δ^p)` one column at a time.
pub fn composite_is_zero(a: &Algebra, degree: usize, theory: Theory) -> Result<bool> {
    if degree > 2 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let n = a.dim();
    (0..coord_len(degree, n))
        .into_par_iter()
        .map(|j| {
            let first = apply_differential(a, &Cochain::basis(degree, n, j), theory)?;
            if first.is_zero() {
                return Ok(true);
            }
            Ok(apply_differential(a, &first, theory)?.is_zero())
        })
        .try_reduce(|| true, |x, y| Ok(x && y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn m2_generator(entries: &[(usize, usize, usize, i64)]) -> Cochain {
        // 1-based (i, j, k) as printed for the 2×2 matrix example
        let e: Vec<_> = entries
            .iter()
            .map(|&(i, j, k, c)| (vec![i - 1, j - 1, k - 1], q(c)))
            .collect();
        Cochain::from_entries(2, 4, &e).unwrap()
    }

    #[test]
    fn sigma_permutes_coordinates() {
        let c = Cochain::from_entries(3, 4, &[(vec![0, 1, 2, 3], q(1))]).unwrap();
        let s = c.sigma1().unwrap();
        assert_eq!(
            s,
            Cochain::from_entries(3, 4, &[(vec![1, 0, 2, 3], q(1))]).unwrap()
        );
        assert_eq!(s.sigma1().unwrap(), c);
        assert_eq!(c.sigma2().unwrap().sigma2().unwrap(), c);
        let sym = c.add(&s).unwrap();
        assert_eq!(sym.sigma1().unwrap(), sym);
        assert!(Cochain::zero(2, 3).sigma1().is_err());
    }

    #[test]
    fn delta1_examples() {
        let m2 = catalog("m2").unwrap();
        assert!(delta1(&m2, &Cochain::zero(1, 4)).unwrap().is_zero());
        assert_eq!(
            delta1(&m2, &Cochain::identity(4)).unwrap(),
            Cochain::from_algebra(&m2)
        );
        // ad(e2) = [e2, ·] is an inner derivation
        let e2 = m2.basis_element(1);
        let mut ad = Vec::new();
        for i in 0..4 {
            let x = m2.basis_element(i);
            let v = m2
                .multiply(&e2, &x)
                .unwrap()
                .sub(&m2.multiply(&x, &e2).unwrap());
            for (k, c) in v.coords().iter().enumerate() {
                ad.push((vec![i, k], c.clone()));
            }
        }
        let ad = Cochain::from_entries(1, 4, &ad).unwrap();
        assert!(!ad.is_zero());
        assert!(delta1(&m2, &ad).unwrap().is_zero());
    }

    #[test]
    fn delta2_examples() {
        let m2 = catalog("m2").unwrap();
        assert!(delta2(&m2, &Cochain::zero(2, 4)).unwrap().is_zero());
        let f = Cochain::from_entries(1, 4, &[(vec![1, 2], q(3)), (vec![0, 3], q(-1))]).unwrap();
        assert!(delta2(&m2, &delta1(&m2, &f).unwrap()).unwrap().is_zero());
        let f1 = m2_generator(&[(2, 4, 1, 1), (3, 2, 3, -1), (4, 1, 3, 1), (4, 2, 4, 1)]);
        assert!(delta2(&m2, &f1).unwrap().is_zero());
    }

    #[test]
    fn delta3_examples() {
        let o = catalog("octonions").unwrap();
        assert!(delta3(&o, &Cochain::zero(3, 8)).unwrap().is_zero());
        let m2 = catalog("m2").unwrap();
        let phi =
            Cochain::from_entries(2, 4, &[(vec![1, 2, 0], q(1)), (vec![3, 3, 2], q(-2))]).unwrap();
        assert!(delta3(&m2, &delta2(&m2, &phi).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn hochschild_factorization_on_basis_cochains() {
        let m2 = catalog("m2").unwrap();
        for j in 0..64 {
            let phi = Cochain::basis(2, 4, j);
            let h = hochschild_delta2(&m2, &phi).unwrap();
            let lhs = delta2(&m2, &phi).unwrap();
            assert_eq!(lhs, h.add(&h.sigma1().unwrap()).unwrap());
        }
    }

    #[test]
    fn hochschild_delta2_is_negated_textbook_formula() {
        // textbook: xφ(y,z) − φ(xy,z) + φ(x,yz) − φ(x,y)z, evaluated with Elements
        let a = catalog("alt4-a").unwrap();
        let phi = Cochain::from_entries(
            2,
            4,
            &[
                (vec![2, 3, 1], q(2)),
                (vec![0, 1, 3], q(1)),
                (vec![3, 0, 0], q(-1)),
            ],
        )
        .unwrap();
        let h = hochschild_delta2(&a, &phi).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let (x, y, z) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
                    let xy = a.multiply(&x, &y).unwrap();
                    let yz = a.multiply(&y, &z).unwrap();
                    let textbook = a
                        .multiply(&x, &phi.evaluate(&[&y, &z]).unwrap())
                        .unwrap()
                        .sub(&phi.evaluate(&[&xy, &z]).unwrap())
                        .add(&phi.evaluate(&[&x, &yz]).unwrap())
                        .sub(&a.multiply(&phi.evaluate(&[&x, &y]).unwrap(), &z).unwrap());
                    assert_eq!(h.value(&[i, j, k]), textbook.scale(&q(-1)).coords());
                }
            }
        }
    }

    #[test]
    fn differential_matrix_shapes() {
        let m2 = catalog("m2").unwrap();
        let d1 = differential_matrix(&m2, 1, Theory::LeftAlternative).unwrap();
        assert_eq!((d1.matrix.rows(), d1.matrix.cols()), (64, 16));
        let nil = Algebra::from_table("nil", Algebra::default_basis(1), &[]).unwrap();
        assert!(differential_matrix(&nil, 1, Theory::LeftAlternative)
            .unwrap()
            .matrix
            .is_zero());
        assert_eq!(
            differential_matrix(&m2, 4, Theory::LeftAlternative).unwrap_err(),
            Error::UnsupportedDegree(4)
        );
        let o = catalog("octonions").unwrap();
        assert!(matches!(
            differential_matrix(&o, 3, Theory::LeftAlternative),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn matrix_route_matches_direct_application() {
        let a = catalog("alt4-b").unwrap();
        let phi = Cochain::from_entries(
            2,
            4,
            &[
                (vec![1, 2, 0], q(1)),
                (vec![3, 3, 2], q(-2)),
                (vec![0, 0, 0], q(5)),
            ],
        )
        .unwrap();
        for theory in [Theory::LeftAlternative, Theory::Hochschild] {
            let m = differential_matrix(&a, 2, theory).unwrap();
            let via_matrix = m.matrix.mul_vec(phi.coeffs()).unwrap();
            assert_eq!(
                via_matrix,
                apply_differential(&a, &phi, theory).unwrap().into_coeffs()
            );
        }
    }

    #[test]
    fn dimension_errors() {
        let m2 = catalog("m2").unwrap();
        assert!(matches!(
            delta1(&m2, &Cochain::zero(1, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            delta2(&m2, &Cochain::zero(1, 4)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(Cochain::new(2, 2, vec![q(0); 7]).is_err());
        assert!(Cochain::new(5, 1, vec![q(0); 1]).is_err());
    }
}
