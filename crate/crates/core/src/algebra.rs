//! Finite-dimensional algebras given by structure constants.

use std::collections::HashSet;
use std::fmt;

use malachite_base::num::basic::traits::One;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero, is_zero_vector, zero_vector, EchelonBasis, Matrix, Rational};

/// A vector of an algebra, in coordinates over its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(zero_vector(dim))
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = zero_vector(dim);
        v[i] = Rational::ONE;
        Self(v)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element(self.0.iter().map(|a| a * s).collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An algebra `(A, μ)` with `μ(e_i, e_j) = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    constants: Vec<Rational>,
    // nonzero entries of μ(e_i, e_j), indexed by i * n + j
    products: Vec<Vec<(usize, Rational)>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.basis == other.basis && self.constants == other.constants
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// `constants` is the flattened `n×n×n` tensor in `(i, j, k)` order.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        constants: Vec<Rational>,
    ) -> Result<Self> {
        let n = basis.len();
        if constants.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: constants.len(),
            });
        }
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate basis name `{b}`")));
            }
        }
        let products = (0..n * n)
            .map(|ij| {
                constants[ij * n..(ij + 1) * n]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !is_zero(c))
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        Ok(Self {
            name: name.into(),
            basis,
            constants,
            products,
        })
    }

    /// Builds an algebra from a sparse product table with 0-based indices.
    pub fn from_table(
        name: impl Into<String>,
        basis: Vec<String>,
        table: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let n = basis.len();
        let mut constants = zero_vector(n * n * n);
        for (i, j, k, c) in table {
            for &idx in [i, j, k] {
                if idx >= n {
                    return Err(Error::InvalidAlgebra(format!(
                        "basis index {idx} out of range"
                    )));
                }
            }
            constants[(i * n + j) * n + k] += c;
        }
        Self::new(name, basis, constants)
    }

    /// Default basis labels `e1, …, en`.
    pub fn default_basis(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.constants[(i * n + j) * n + k]
    }

    /// Nonzero coordinates of `e_i · e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    /// Same algebra under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn same_multiplication(&self, other: &Algebra) -> bool {
        self.dim() == other.dim() && self.constants == other.constants
    }

    pub(crate) fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if is_zero(yj) {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in self.product_terms(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    /// `x · e_j` added into `acc` with weight `scale`.
    pub(crate) fn mul_vec_basis_into(
        &self,
        acc: &mut [Rational],
        scale: &Rational,
        x: &[Rational],
        j: usize,
    ) {
        for (i, xi) in x.iter().enumerate() {
            if is_zero(xi) {
                continue;
            }
            let s = scale * xi;
            for (k, c) in self.product_terms(i, j) {
                acc[*k] += &s * c;
            }
        }
    }

    /// `e_i · y` added into `acc` with weight `scale`.
    pub(crate) fn mul_basis_vec_into(
        &self,
        acc: &mut [Rational],
        scale: &Rational,
        i: usize,
        y: &[Rational],
    ) {
        for (j, yj) in y.iter().enumerate() {
            if is_zero(yj) {
                continue;
            }
            let s = scale * yj;
            for (k, c) in self.product_terms(i, j) {
                acc[*k] += &s * c;
            }
        }
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(Element(self.mul_coords(&x.0, &y.0)))
    }

    /// `(xy)z − x(yz)`
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        let left = self.mul_coords(&self.mul_coords(&x.0, &y.0), &z.0);
        let right = self.mul_coords(&x.0, &self.mul_coords(&y.0, &z.0));
        Ok(Element(left).sub(&Element(right)))
    }

    /// Smallest multiplicatively closed subspace containing `generators`,
    /// returned as a reduced echelon basis together with its dimension.
    pub fn subalgebra_closure(&self, generators: &[Element]) -> Result<(Vec<Element>, usize)> {
        let n = self.dim();
        let mut span = EchelonBasis::new(n);
        for g in generators {
            self.check(g)?;
            span.insert(g.coords());
        }
        loop {
            let basis = span.reduced_basis();
            let mut grew = false;
            for x in &basis {
                for y in &basis {
                    grew |= span.insert(&self.mul_coords(x, y));
                }
            }
            if !grew {
                break;
            }
        }
        let basis: Vec<Element> = span.reduced_basis().into_iter().map(Element).collect();
        let dim = basis.len();
        Ok((basis, dim))
    }

    /// Checks associativity on every triple drawn from `basis`, which must
    /// span a multiplicatively closed subspace. Witness indices refer to
    /// positions in `basis`.
    pub fn restricted_associativity(
        &self,
        basis: &[Element],
    ) -> Result<crate::identities::IdentityReport> {
        let mut span = EchelonBasis::new(self.dim());
        for b in basis {
            self.check(b)?;
            span.insert(b.coords());
        }
        for (l, x) in basis.iter().enumerate() {
            for (r, y) in basis.iter().enumerate() {
                if !span.contains(&self.mul_coords(x.coords(), y.coords())) {
                    return Err(Error::NotClosed { left: l, right: r });
                }
            }
        }
        let m = basis.len();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let defect = self.associator(&basis[i], &basis[j], &basis[k])?;
                    if !defect.is_zero() {
                        return Ok(crate::identities::IdentityReport::failed(
                            "associative (restricted)",
                            vec![i, j, k],
                            defect,
                        ));
                    }
                }
            }
        }
        Ok(crate::identities::IdentityReport::passed(
            "associative (restricted)",
        ))
    }

    /// The associative algebra spanned by the closure of a set of square
    /// matrices under multiplication, with structure constants taken in the
    /// reduced echelon basis of that span.
    pub fn matrix_subalgebra(name: impl Into<String>, generators: &[Matrix]) -> Result<Self> {
        let size = generators.first().map_or(0, |g| g.rows());
        for g in generators {
            if g.rows() != size || g.cols() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    found: g.rows().max(g.cols()),
                });
            }
        }
        let flat = |m: &Matrix| m.entries().to_vec();
        let mut span = EchelonBasis::new(size * size);
        for g in generators {
            span.insert(&flat(g));
        }
        loop {
            let basis = span.reduced_basis();
            let mut grew = false;
            for x in &basis {
                for y in &basis {
                    let xm = Matrix::new(size, size, x.clone())?;
                    let ym = Matrix::new(size, size, y.clone())?;
                    grew |= span.insert(&flat(&xm.mul(&ym)?));
                }
            }
            if !grew {
                break;
            }
        }
        let basis = span.reduced_basis();
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| {
                b.iter()
                    .position(|x| !is_zero(x))
                    .expect("basis vectors are nonzero")
            })
            .collect();
        let d = basis.len();
        let mut constants = zero_vector(d * d * d);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let xm = Matrix::new(size, size, x.clone())?;
                let ym = Matrix::new(size, size, y.clone())?;
                let prod = flat(&xm.mul(&ym)?);
                // reduced echelon basis: coordinates sit at the pivot positions
                let mut check = zero_vector(size * size);
                for (k, &p) in pivots.iter().enumerate() {
                    constants[(i * d + j) * d + k] = prod[p].clone();
                    axpy(&mut check, &prod[p], &basis[k]);
                }
                debug_assert_eq!(check, prod);
            }
        }
        Self::new(name, Self::default_basis(d), constants)
    }

    pub fn zero_product(&self) -> bool {
        self.constants.iter().all(is_zero)
    }
}
