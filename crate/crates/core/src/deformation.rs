//! Truncated formal deformations `μ_t = μ₀ + tμ₁ + … + t^m μ_m`, their
//! obstructions, and gauge equivalence by formal automorphisms
//! `Φ_t = id + tΦ₁ + … + t^m Φ_m`.

use malachite_base::num::basic::traits::One;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::cochain::{delta1, delta2, delta3, differential_matrix, tabulate, Arg, Cochain, Theory};
use crate::cohomology::verify_class;
use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationJet {
    base: Algebra,
    terms: Vec<Cochain>,
}

fn check_term(c: &Cochain, degree: usize, dim: usize) -> Result<()> {
    if c.degree() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: c.degree(),
        });
    }
    if c.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: c.dim(),
        });
    }
    Ok(())
}

impl DeformationJet {
    /// `terms[i]` is `μ_{i+1}`; `μ₀` is the multiplication of `base`.
    pub fn new(base: Algebra, terms: Vec<Cochain>) -> Result<Self> {
        for t in &terms {
            check_term(t, 2, base.dim())?;
        }
        Ok(Self { base, terms })
    }

    pub fn zero(base: Algebra, order: usize) -> Self {
        let n = base.dim();
        Self {
            base,
            terms: vec![Cochain::zero(2, n); order],
        }
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `μ₁, …, μ_m`.
    pub fn terms(&self) -> &[Cochain] {
        &self.terms
    }

    /// `μ_k`, including `μ₀`.
    pub fn term(&self, k: usize) -> Cochain {
        if k == 0 {
            Cochain::from_algebra(&self.base)
        } else {
            self.terms[k - 1].clone()
        }
    }

    /// Whether `μ₁ = … = μ_m = 0`.
    pub fn is_trivial(&self) -> bool {
        self.terms.iter().all(Cochain::is_zero)
    }

    fn all_terms(&self) -> Vec<Cochain> {
        (0..=self.order()).map(|k| self.term(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeJet {
    dim: usize,
    terms: Vec<Cochain>,
}

impl GaugeJet {
    /// `terms[i]` is `Φ_{i+1}`; `Φ₀ = id` is implicit.
    pub fn new(dim: usize, terms: Vec<Cochain>) -> Result<Self> {
        for t in &terms {
            check_term(t, 1, dim)?;
        }
        Ok(Self { dim, terms })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        Self {
            dim,
            terms: vec![Cochain::zero(1, dim); order],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[Cochain] {
        &self.terms
    }

    /// `Φ_k`, with `Φ₀ = id` and zero beyond the stored order.
    pub fn term(&self, k: usize) -> Cochain {
        match k {
            0 => Cochain::identity(self.dim),
            k if k <= self.terms.len() => self.terms[k - 1].clone(),
            _ => Cochain::zero(1, self.dim),
        }
    }

    /// Formal inverse truncated at `order`:
    /// `Ψ₀ = id`, `Ψ_k = −Σ_{i=1}^{k} Φ_i ∘ Ψ_{k−i}`.
    pub fn inverse(&self, order: usize) -> GaugeJet {
        let mut psi = vec![Cochain::identity(self.dim)];
        for k in 1..=order {
            let mut acc = Cochain::zero(1, self.dim);
            for i in 1..=k.min(self.order()) {
                let term = compose1(&self.terms[i - 1], &psi[k - i]);
                acc = acc.sub(&term).expect("same shape");
            }
            psi.push(acc);
        }
        psi.remove(0);
        GaugeJet {
            dim: self.dim,
            terms: psi,
        }
    }

    /// `self ∘ other` truncated at `order`.
    pub fn compose(&self, other: &GaugeJet, order: usize) -> Result<GaugeJet> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let terms = (1..=order)
            .map(|k| {
                let mut acc = Cochain::zero(1, self.dim);
                for i in 0..=k {
                    if i > self.order() || k - i > other.order() {
                        continue;
                    }
                    let t = compose1(&self.term(i), &other.term(k - i));
                    acc = acc.add(&t).expect("same shape");
                }
                acc
            })
            .collect();
        Ok(GaugeJet {
            dim: self.dim,
            terms,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionResult {
    /// Target order `m`: the obstruction decides whether `μ_m` exists.
    pub order: usize,
    pub obstruction: Cochain,
    pub is_cocycle: bool,
    pub solvable: bool,
    /// The pivot-only solution of `δ²μ_m = obstruction`.
    pub extension: Option<Cochain>,
}

/// `f ∘ g` for 1-cochains.
pub(crate) fn compose1(f: &Cochain, g: &Cochain) -> Cochain {
    let one = Rational::ONE;
    tabulate(1, f.dim(), |idx, acc| {
        f.apply_into(acc, &one, &[Arg::Vector(g.value(idx))])
    })
}

/// `f ∘ φ` for a 1-cochain `f` and a 2-cochain `φ`.
pub(crate) fn postcompose(f: &Cochain, phi: &Cochain) -> Cochain {
    let one = Rational::ONE;
    tabulate(2, f.dim(), |idx, acc| {
        f.apply_into(acc, &one, &[Arg::Vector(phi.value(idx))])
    })
}

/// `φ ∘ (f ⊗ g)`.
pub(crate) fn precompose(phi: &Cochain, f: &Cochain, g: &Cochain) -> Cochain {
    let one = Rational::ONE;
    tabulate(2, phi.dim(), |idx, acc| {
        phi.apply_into(
            acc,
            &one,
            &[
                Arg::Vector(f.value(&idx[..1])),
                Arg::Vector(g.value(&idx[1..])),
            ],
        )
    })
}

/// `μ_i□μ_j(x,y,z) = μ_i(μ_j(x,y),z) − μ_i(x,μ_j(y,z)) + μ_i(μ_j(y,x),z) − μ_i(y,μ_j(x,z))`.
pub fn square(mi: &Cochain, mj: &Cochain) -> Result<Cochain> {
    check_term(mi, 2, mj.dim())?;
    check_term(mj, 2, mi.dim())?;
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    Ok(tabulate(3, mi.dim(), |idx, acc| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        mi.apply_into(acc, &one, &[Arg::Vector(mj.value(&[x, y])), Arg::Basis(z)]);
        mi.apply_into(
            acc,
            &minus,
            &[Arg::Basis(x), Arg::Vector(mj.value(&[y, z]))],
        );
        mi.apply_into(acc, &one, &[Arg::Vector(mj.value(&[y, x])), Arg::Basis(z)]);
        mi.apply_into(
            acc,
            &minus,
            &[Arg::Basis(y), Arg::Vector(mj.value(&[x, z]))],
        );
    }))
}

fn residual_from(terms: &[Cochain], k: usize) -> Result<Cochain> {
    let mut acc = Cochain::zero(3, terms[0].dim());
    for i in 0..=k {
        acc = acc.add(&square(&terms[i], &terms[k - i])?)?;
    }
    Ok(acc)
}

/// Coefficient of `t^k` in `μ_t □ μ_t`:
/// `Σ_{i=0}^{k} μ_i□μ_{k−i} = δ²μ_k + Σ_{i=1}^{k−1} μ_i□μ_{k−i}`.
///
/// It vanishes for every `k ≤ m` exactly when the jet is left alternative
/// modulo `t^{m+1}`. Since `μ₀□φ + φ□μ₀ = δ²φ`, the first residual is `δ²μ₁`.
pub fn deformation_residual(jet: &DeformationJet, k: usize) -> Result<Cochain> {
    if k > jet.order() {
        return Err(Error::OrderOutOfRange {
            k,
            order: jet.order(),
        });
    }
    let terms: Vec<_> = (0..=k).map(|i| jet.term(i)).collect();
    residual_from(&terms, k)
}

/// Residuals for `k = 0..=order`.
pub fn deformation_residuals(jet: &DeformationJet) -> Result<Vec<Cochain>> {
    let terms = jet.all_terms();
    (0..=jet.order())
        .into_par_iter()
        .map(|k| residual_from(&terms, k))
        .collect()
}

fn check_valid(jet: &DeformationJet) -> Result<()> {
    let residuals = deformation_residuals(jet)?;
    if let Some(k) = residuals.iter().position(|r| !r.is_zero()) {
        return Err(Error::InvalidJet { order: k });
    }
    Ok(())
}

fn obstruction_with(jet: &DeformationJet, d2: &Matrix) -> Result<ObstructionResult> {
    let m = jet.order() + 1;
    let n = jet.base.dim();
    let mut sum = Cochain::zero(3, n);
    for i in 1..m {
        sum = sum.add(&square(&jet.terms[i - 1], &jet.terms[m - i - 1])?)?;
    }
    let obstruction = sum.scale(&-Rational::ONE);
    let is_cocycle = delta3(&jet.base, &obstruction)?.is_zero();
    let extension =
        solve(d2, obstruction.coeffs())?.map(|x| Cochain::new(2, n, x).expect("coordinate length"));
    Ok(ObstructionResult {
        order: m,
        obstruction,
        is_cocycle,
        solvable: extension.is_some(),
        extension,
    })
}

/// The obstruction to extending a valid jet of order `m − 1` to order `m`:
/// `μ_m` exists iff `δ²μ_m = −Σ_{i=1}^{m−1} μ_i□μ_{m−i}` is solvable, which is
/// the condition that the residual at order `m` vanishes.
pub fn obstruction(jet: &DeformationJet) -> Result<ObstructionResult> {
    check_valid(jet)?;
    let d2 = differential_matrix(&jet.base, 2, Theory::LeftAlternative)?;
    obstruction_with(jet, &d2.matrix)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integration {
    pub jet: DeformationJet,
    pub stopped_at: usize,
    /// The first unsolvable obstruction, when integration stopped early.
    pub failure: Option<ObstructionResult>,
}

/// Extends `(μ₁)` order by order up to `max_order`, using the pivot-only
/// solution at each step.
pub fn integrate(a: &Algebra, mu1: &Cochain, max_order: usize) -> Result<Integration> {
    check_term(mu1, 2, a.dim())?;
    if max_order == 0 {
        return Err(Error::OrderOutOfRange { k: 0, order: 1 });
    }
    check_valid(&DeformationJet::zero(a.clone(), 0))?;
    if !delta2(a, mu1)?.is_zero() {
        return Err(Error::NotACocycle);
    }
    let d2 = differential_matrix(a, 2, Theory::LeftAlternative)?;
    let mut jet = DeformationJet::new(a.clone(), vec![mu1.clone()])?;
    while jet.order() < max_order {
        let r = obstruction_with(&jet, &d2.matrix)?;
        match r.extension {
            Some(ext) => jet.terms.push(ext),
            None => {
                return Ok(Integration {
                    stopped_at: jet.order(),
                    jet,
                    failure: Some(r),
                })
            }
        }
    }
    Ok(Integration {
        stopped_at: jet.order(),
        jet,
        failure: None,
    })
}

/// `μ₁ − δ¹Φ₁`, the first order term of `μ_t` transported along `id + tΦ₁`.
pub fn gauge_transform_order1(a: &Algebra, mu1: &Cochain, phi1: &Cochain) -> Result<Cochain> {
    check_term(mu1, 2, a.dim())?;
    mu1.sub(&delta1(a, phi1)?)
}

fn check_gauge(jet: &DeformationJet, gauge: &GaugeJet) -> Result<()> {
    if gauge.dim != jet.base.dim() {
        return Err(Error::DimensionMismatch {
            expected: jet.base.dim(),
            found: gauge.dim,
        });
    }
    Ok(())
}

/// Coefficients of `t^k`, `k = 0..=min order`, in
/// `Φ_t∘μ_t − μ′_t∘(Φ_t⊗Φ_t)` for `μ_t = jet_a` and `μ′_t = jet_b`.
/// All of them vanish iff the gauge carries one jet onto the other to that
/// order.
pub fn equivalence_check(
    jet_a: &DeformationJet,
    jet_b: &DeformationJet,
    gauge: &GaugeJet,
) -> Result<Vec<Cochain>> {
    if !jet_a.base.same_multiplication(&jet_b.base) {
        return Err(Error::InvalidAlgebra(
            "jets have different base multiplications".into(),
        ));
    }
    check_gauge(jet_a, gauge)?;
    let order = jet_a.order().min(jet_b.order());
    let n = jet_a.base.dim();
    let a_terms = jet_a.all_terms();
    let b_terms = jet_b.all_terms();
    let phi: Vec<_> = (0..=order).map(|k| gauge.term(k)).collect();
    (0..=order)
        .into_par_iter()
        .map(|k| {
            let mut acc = Cochain::zero(2, n);
            for i in 0..=k {
                acc = acc.add(&postcompose(&phi[i], &a_terms[k - i]))?;
            }
            for i in 0..=k {
                for j in 0..=(k - i) {
                    let l = k - i - j;
                    if phi[j].is_zero() || phi[l].is_zero() {
                        continue;
                    }
                    acc = acc.sub(&precompose(&b_terms[i], &phi[j], &phi[l]))?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// The jet `Φ_t∘μ_t∘(Φ_t^{-1}⊗Φ_t^{-1})` truncated at the order of `jet`.
pub fn conjugate(jet: &DeformationJet, gauge: &GaugeJet) -> Result<DeformationJet> {
    check_gauge(jet, gauge)?;
    let order = jet.order();
    let n = jet.base.dim();
    let mu = jet.all_terms();
    let phi: Vec<_> = (0..=order).map(|k| gauge.term(k)).collect();
    let inv = gauge.inverse(order);
    let psi: Vec<_> = (0..=order).map(|k| inv.term(k)).collect();
    // ν_s = Σ_{j+l+r=s} μ_j ∘ (Ψ_l ⊗ Ψ_r)
    let nu: Vec<Cochain> = (0..=order)
        .into_par_iter()
        .map(|s| {
            let mut acc = Cochain::zero(2, n);
            for j in 0..=s {
                for l in 0..=(s - j) {
                    let r = s - j - l;
                    if mu[j].is_zero() || psi[l].is_zero() || psi[r].is_zero() {
                        continue;
                    }
                    acc = acc.add(&precompose(&mu[j], &psi[l], &psi[r]))?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let terms = (1..=order)
        .map(|k| {
            let mut acc = Cochain::zero(2, n);
            for i in 0..=k {
                if !phi[i].is_zero() {
                    acc = acc.add(&postcompose(&phi[i], &nu[k - i]))?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    DeformationJet::new(jet.base.clone(), terms)
}

/// Pushes the first nonzero term of a valid jet as high as possible by
/// removing coboundary leading terms with gauges `id + t^m g`, where
/// `μ_m = δ¹g`. Returns the normalized jet and the accumulated gauge, which
/// satisfies `equivalence_check(jet, normalized, gauge) = 0`. The gauge is
/// empty when nothing was removed.
pub fn kill_leading_coboundary(jet: &DeformationJet) -> Result<(DeformationJet, GaugeJet)> {
    check_valid(jet)?;
    let n = jet.base.dim();
    let order = jet.order();
    let mut current = jet.clone();
    let mut total = GaugeJet::identity(n, 0);
    while let Some(m) = current
        .terms
        .iter()
        .position(|t| !t.is_zero())
        .map(|i| i + 1)
    {
        let class = verify_class(
            &current.base,
            &current.terms[m - 1],
            Theory::LeftAlternative,
        )?;
        let Some(g) = class.preimage else {
            break;
        };
        let mut terms = vec![Cochain::zero(1, n); m];
        terms[m - 1] = g;
        let step = GaugeJet::new(n, terms)?;
        current = conjugate(&current, &step)?;
        total = step.compose(&total, order)?;
    }
    Ok((current, total))
}
