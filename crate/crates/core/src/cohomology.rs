//! Cocycles, coboundaries and cohomology classes computed from the
//! differential matrices.

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::cochain::{apply_differential, coord_len, differential_matrix, Cochain, Theory};
use crate::error::{Error, Result};
use crate::linalg::{
    column_space_basis, kernel_basis, quotient_representatives, solve, EchelonBasis, Rational,
};

/// Flag attached to degree 3 left-alternative reports: the third
/// differential is not known to continue to a longer complex.
pub const PARTIAL_COMPLEX: &str = "partial-complex";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub generators_are_cocycles: bool,
    pub independent_mod_coboundaries: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub theory: Theory,
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
    pub generators: Vec<Cochain>,
    pub verification: Verification,
    pub flags: Vec<String>,
}

fn to_cochains(degree: usize, dim: usize, vectors: Vec<Vec<Rational>>) -> Vec<Cochain> {
    vectors
        .into_iter()
        .map(|v| Cochain::new(degree, dim, v).expect("coordinate length"))
        .collect()
}

/// Coboundary space `B^p` as a spanning list (not necessarily independent).
///
/// In degree 1 only the inner maps `x ↦ xv − vx` that are themselves
/// derivations are counted, so that `B¹ ⊂ Z¹` holds for every algebra.
fn coboundary_span(a: &Algebra, degree: usize, theory: Theory) -> Result<Vec<Vec<Rational>>> {
    let d_prev = differential_matrix(a, degree - 1, theory)?;
    if degree > 1 {
        return Ok(column_space_basis(&d_prev.matrix));
    }
    let d1 = differential_matrix(a, 1, theory)?;
    let inner_derivations = kernel_basis(&d1.matrix.mul(&d_prev.matrix)?);
    inner_derivations
        .iter()
        .map(|v| d_prev.matrix.mul_vec(v))
        .collect()
}

/// `Z^p = ker δ^p`, `B^p = im δ^(p−1)` and representatives of `H^p = Z^p/B^p`.
///
/// Generators are chosen greedily among the free-variable kernel basis of
/// `δ^p`, so the output is deterministic. Fails with `NotAComplex` when the
/// coboundaries are not cocycles, which happens for algebras outside the
/// class the theory is built for.
pub fn cohomology(a: &Algebra, degree: usize, theory: Theory) -> Result<CohomologyReport> {
    if !(1..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let n = a.dim();
    let d = differential_matrix(a, degree, theory)?;
    let cocycles = kernel_basis(&d.matrix);
    let coboundaries = coboundary_span(a, degree, theory)?;
    let mut b = EchelonBasis::new(coord_len(degree, n));
    for v in &coboundaries {
        b.insert(v);
    }
    let reps = quotient_representatives(&cocycles, &coboundaries).map_err(|e| match e {
        Error::NotInSpan { .. } => Error::NotAComplex {
            theory: theory.name(),
            degree,
        },
        other => other,
    })?;
    let generators = to_cochains(degree, n, reps);

    let generators_are_cocycles = generators
        .par_iter()
        .map(|g| apply_differential(a, g, theory).map(|x| x.is_zero()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|ok| ok);
    let dim_coboundaries = b.dim();
    for g in &generators {
        b.insert(g.coeffs());
    }
    let independent_mod_coboundaries = b.dim() == dim_coboundaries + generators.len();

    let mut flags = Vec::new();
    if degree == 3 && theory == Theory::LeftAlternative {
        flags.push(PARTIAL_COMPLEX.to_string());
    }
    Ok(CohomologyReport {
        theory,
        degree,
        dim_cochains: coord_len(degree, n),
        dim_cocycles: cocycles.len(),
        dim_coboundaries,
        dim_h: generators.len(),
        generators,
        verification: Verification {
            generators_are_cocycles,
            independent_mod_coboundaries,
        },
        flags,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCheck {
    pub cocycle: bool,
    pub coboundary: bool,
    /// A 1-cochain `f` with `δ¹f = φ`, present exactly when `coboundary`.
    pub preimage: Option<Cochain>,
}

/// Decides whether a 2-cochain is a cocycle and whether it is a coboundary.
pub fn verify_class(a: &Algebra, phi: &Cochain, theory: Theory) -> Result<ClassCheck> {
    if phi.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: phi.degree(),
        });
    }
    let cocycle = apply_differential(a, phi, theory)?.is_zero();
    let d1 = differential_matrix(a, 1, theory)?;
    let preimage = solve(&d1.matrix, phi.coeffs())?
        .map(|x| Cochain::new(1, a.dim(), x).expect("coordinate length"));
    Ok(ClassCheck {
        cocycle,
        coboundary: preimage.is_some(),
        preimage,
    })
}

/// Whether the classes of `cochains` are linearly independent modulo `B²`.
pub fn independent_mod_coboundaries(
    a: &Algebra,
    cochains: &[Cochain],
    theory: Theory,
) -> Result<bool> {
    let d1 = differential_matrix(a, 1, theory)?;
    let mut b = EchelonBasis::new(coord_len(2, a.dim()));
    for v in column_space_basis(&d1.matrix) {
        b.insert(&v);
    }
    let base = b.dim();
    for c in cochains {
        if c.degree() != 2 || c.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: coord_len(2, a.dim()),
                found: c.coeffs().len(),
            });
        }
        b.insert(c.coeffs());
    }
    Ok(b.dim() == base + cochains.len())
}

/// Nonzero values of the three reference representatives of `H²(M₂, M₂)`,
/// as 1-based `(i, j, k, c)` meaning `f(e_i ⊗ e_j) = c·e_k`.
pub const M2_REFERENCE_GENERATORS: [&[(usize, usize, usize, i64)]; 3] = [
    &[(2, 4, 1, 1), (3, 2, 3, -1), (4, 1, 3, 1), (4, 2, 4, 1)],
    &[(2, 3, 2, 1), (3, 1, 4, -1), (3, 3, 3, 1), (3, 4, 4, 1)],
    &[(2, 3, 1, 1), (3, 2, 4, 1)],
];

pub fn m2_reference_generators() -> Vec<Cochain> {
    M2_REFERENCE_GENERATORS
        .iter()
        .map(|entries| {
            let e: Vec<_> = entries
                .iter()
                .map(|&(i, j, k, c)| (vec![i - 1, j - 1, k - 1], Rational::from(c)))
                .collect();
            Cochain::from_entries(2, 4, &e).expect("static entries")
        })
        .collect()
}

/// Assignment of `e1..e4` to matrix units `(row, col)`.
pub type BasisConvention = [(usize, usize); 4];

pub const DEFAULT_M2_CONVENTION: BasisConvention = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// 2×2 matrices in the basis given by `convention`.
pub fn m2_with_convention(convention: &BasisConvention) -> Result<Algebra> {
    let mut table = Vec::new();
    for (i, &(a, b)) in convention.iter().enumerate() {
        for (j, &(c, d)) in convention.iter().enumerate() {
            if b == c {
                let k = convention
                    .iter()
                    .position(|&u| u == (a, d))
                    .ok_or_else(|| {
                        Error::InvalidAlgebra(
                            "convention is not a permutation of matrix units".into(),
                        )
                    })?;
                table.push((i, j, k, Rational::from(1)));
            }
        }
    }
    Algebra::from_table("m2", Algebra::default_basis(4), &table)
}

fn all_conventions() -> Vec<BasisConvention> {
    let mut out = Vec::with_capacity(24);
    let units = DEFAULT_M2_CONVENTION;
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push([units[a], units[b], units[c], units[d]]);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionResult {
    pub convention: BasisConvention,
    pub cocycle: [bool; 3],
    pub coboundary: [bool; 3],
    pub independent: bool,
    /// Whether the three classes exhaust `H²`, i.e. `dim H² = 3` and they are
    /// independent.
    pub spans: bool,
    pub dim_h: usize,
}

impl ConventionResult {
    pub fn passes(&self) -> bool {
        self.cocycle.iter().all(|&c| c)
            && self.coboundary.iter().all(|&c| !c)
            && self.independent
            && self.spans
    }

    /// Human readable list of the failed assertions.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, (&z, &b)) in self.cocycle.iter().zip(&self.coboundary).enumerate() {
            if !z {
                out.push(format!("f{} is not a cocycle", i + 1));
            }
            if b {
                out.push(format!("f{} is a coboundary", i + 1));
            }
        }
        if !self.independent {
            out.push("classes are dependent modulo coboundaries".into());
        }
        if !self.spans {
            out.push(format!("classes do not span H² (dim H² = {})", self.dim_h));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCheck {
    /// The default convention first, followed by every other assignment when
    /// the default fails.
    pub results: Vec<ConventionResult>,
}

impl GeneratorCheck {
    pub fn validated(&self) -> Option<&ConventionResult> {
        self.results.iter().find(|r| r.passes())
    }
}

fn check_convention(convention: BasisConvention, gens: &[Cochain]) -> Result<ConventionResult> {
    let a = m2_with_convention(&convention)?;
    let mut cocycle = [false; 3];
    let mut coboundary = [false; 3];
    for (i, g) in gens.iter().enumerate() {
        let c = verify_class(&a, g, Theory::LeftAlternative)?;
        cocycle[i] = c.cocycle;
        coboundary[i] = c.coboundary;
    }
    let independent = independent_mod_coboundaries(&a, gens, Theory::LeftAlternative)?;
    let dim_h = cohomology(&a, 2, Theory::LeftAlternative)?.dim_h;
    Ok(ConventionResult {
        convention,
        cocycle,
        coboundary,
        independent,
        spans: independent && dim_h == gens.len(),
        dim_h,
    })
}

/// Checks the reference `H²(M₂, M₂)` representatives under the default basis
/// convention and, if that fails, under all 24 assignments of `e1..e4` to
/// matrix units.
pub fn m2_generator_check() -> Result<GeneratorCheck> {
    let gens = m2_reference_generators();
    let default = check_convention(DEFAULT_M2_CONVENTION, &gens)?;
    if default.passes() {
        return Ok(GeneratorCheck {
            results: vec![default],
        });
    }
    let mut results = vec![default];
    let rest: Vec<_> = all_conventions()
        .into_par_iter()
        .filter(|c| *c != DEFAULT_M2_CONVENTION)
        .map(|c| check_convention(c, &gens))
        .collect::<Result<_>>()?;
    results.extend(rest);
    Ok(GeneratorCheck { results })
}
