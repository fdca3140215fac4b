//! Polynomial identity checks by exhaustive evaluation on basis tuples.
//!
//! Identities with a repeated variable are checked through their full
//! polarization. Over a field of characteristic 0 a homogeneous identity of
//! degree d in x holds for all x iff its polarization (replace the d copies
//! of x by independent variables and sum over the ways to place them)
//! vanishes, and the polarized form is multilinear, so basis tuples suffice.
//! The expanded forms are written out next to each evaluator.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Associative,
    LeftAlternative,
    RightAlternative,
    Flexible,
    Moufang1,
    Moufang2,
    Moufang3,
    MalcevCommutator,
    JordanPlus,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::Associative,
        Identity::LeftAlternative,
        Identity::RightAlternative,
        Identity::Flexible,
        Identity::Moufang1,
        Identity::Moufang2,
        Identity::Moufang3,
        Identity::MalcevCommutator,
        Identity::JordanPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Associative => "associative",
            Identity::LeftAlternative => "left-alternative",
            Identity::RightAlternative => "right-alternative",
            Identity::Flexible => "flexible",
            Identity::Moufang1 => "moufang-1",
            Identity::Moufang2 => "moufang-2",
            Identity::Moufang3 => "moufang-3",
            Identity::MalcevCommutator => "malcev-commutator",
            Identity::JordanPlus => "jordan-plus",
        }
    }

    /// Number of basis indices in a checked tuple.
    pub fn arity(self) -> usize {
        match self {
            Identity::Associative
            | Identity::LeftAlternative
            | Identity::RightAlternative
            | Identity::Flexible => 3,
            _ => 4,
        }
    }

    /// Evaluates the (polarized) defect at the given elements; zero iff the
    /// identity holds there.
    pub fn defect(self, a: &Algebra, args: &[Element]) -> Result<Element> {
        if args.len() != self.arity() {
            return Err(Error::DimensionMismatch {
                expected: self.arity(),
                found: args.len(),
            });
        }
        let ops = Ops { a };
        match self {
            Identity::Associative => ops.assoc(&args[0], &args[1], &args[2]),
            // x(yz) − (xy)z + y(xz) − (yx)z = −(as(x,y,z) + as(y,x,z))
            Identity::LeftAlternative => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                Ok(ops
                    .assoc(x, y, z)?
                    .add(&ops.assoc(y, x, z)?)
                    .scale(&(-1).into()))
            }
            // x(yz) − (xy)z + x(zy) − (xz)y = −(as(x,y,z) + as(x,z,y))
            Identity::RightAlternative => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                Ok(ops
                    .assoc(x, y, z)?
                    .add(&ops.assoc(x, z, y)?)
                    .scale(&(-1).into()))
            }
            // as(x,y,x) polarized: as(x,y,z) + as(z,y,x)
            Identity::Flexible => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                Ok(ops.assoc(x, y, z)?.add(&ops.assoc(z, y, x)?))
            }
            // as(x,y,z·x) − x·as(y,z,x), polarized in x → (x, w):
            // as(x,y,zw) + as(w,y,zx) − x·as(y,z,w) − w·as(y,z,x)
            Identity::Moufang1 => {
                let (x, y, z, w) = (&args[0], &args[1], &args[2], &args[3]);
                let lhs =
                    ops.assoc(x, y, &ops.mul(z, w)?)?
                        .add(&ops.assoc(w, y, &ops.mul(z, x)?)?);
                let rhs = ops
                    .mul(x, &ops.assoc(y, z, w)?)?
                    .add(&ops.mul(w, &ops.assoc(y, z, x)?)?);
                Ok(lhs.sub(&rhs))
            }
            // as(x·y,z,x) − as(x,y,z)·x, polarized in x → (x, w):
            // as(xy,z,w) + as(wy,z,x) − as(x,y,z)·w − as(w,y,z)·x
            Identity::Moufang2 => {
                let (x, y, z, w) = (&args[0], &args[1], &args[2], &args[3]);
                let lhs =
                    ops.assoc(&ops.mul(x, y)?, z, w)?
                        .add(&ops.assoc(&ops.mul(w, y)?, z, x)?);
                let rhs = ops
                    .mul(&ops.assoc(x, y, z)?, w)?
                    .add(&ops.mul(&ops.assoc(w, y, z)?, x)?);
                Ok(lhs.sub(&rhs))
            }
            // as(y,x²,z) − x·as(y,x,z) − as(y,x,z)·x, polarized in x → (x, w):
            // as(y, xw + wx, z) − x·as(y,w,z) − w·as(y,x,z) − as(y,x,z)·w − as(y,w,z)·x
            Identity::Moufang3 => {
                let (x, y, z, w) = (&args[0], &args[1], &args[2], &args[3]);
                let xw = ops.mul(x, w)?.add(&ops.mul(w, x)?);
                let lhs = ops.assoc(y, &xw, z)?;
                let ayxz = ops.assoc(y, x, z)?;
                let aywz = ops.assoc(y, w, z)?;
                let rhs = ops
                    .mul(x, &aywz)?
                    .add(&ops.mul(w, &ayxz)?)
                    .add(&ops.mul(&ayxz, w)?)
                    .add(&ops.mul(&aywz, x)?);
                Ok(lhs.sub(&rhs))
            }
            // with [a,b] = ab − ba and J(a,b,c) = [a,[b,c]] + [b,[c,a]] + [c,[a,b]]:
            // [J(x,y,z),x] − J(x,y,[x,z]), polarized in x → (x, w):
            // [J(x,y,z),w] + [J(w,y,z),x] − J(x,y,[w,z]) − J(w,y,[x,z])
            Identity::MalcevCommutator => {
                let (x, y, z, w) = (&args[0], &args[1], &args[2], &args[3]);
                let lhs = ops
                    .bracket(&ops.jacobi(x, y, z)?, w)?
                    .add(&ops.bracket(&ops.jacobi(w, y, z)?, x)?);
                let rhs = ops.jacobi(x, y, &ops.bracket(w, z)?)?.add(&ops.jacobi(
                    w,
                    y,
                    &ops.bracket(x, z)?,
                )?);
                Ok(lhs.sub(&rhs))
            }
            // with a∘b = ab + ba: as∘(x∘x, y, x), polarized in x → (x1, x2, x3);
            // the six placements collapse pairwise by commutativity of ∘:
            // as∘(x1∘x2, y, x3) + as∘(x1∘x3, y, x2) + as∘(x2∘x3, y, x1)
            // argument order is (x1, x2, x3, y)
            Identity::JordanPlus => {
                let (x1, x2, x3, y) = (&args[0], &args[1], &args[2], &args[3]);
                let t1 = ops.plus_assoc(&ops.plus(x1, x2)?, y, x3)?;
                let t2 = ops.plus_assoc(&ops.plus(x1, x3)?, y, x2)?;
                let t3 = ops.plus_assoc(&ops.plus(x2, x3)?, y, x1)?;
                Ok(t1.add(&t2).add(&t3))
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

struct Ops<'a> {
    a: &'a Algebra,
}

impl Ops<'_> {
    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.a.multiply(x, y)
    }

    fn assoc(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.a.associator(x, y, z)
    }

    fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }

    fn jacobi(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let a = self.bracket(x, &self.bracket(y, z)?)?;
        let b = self.bracket(y, &self.bracket(z, x)?)?;
        let c = self.bracket(z, &self.bracket(x, y)?)?;
        Ok(a.add(&b).add(&c))
    }

    fn plus(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.mul(x, y)?.add(&self.mul(y, x)?))
    }

    fn plus_assoc(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        Ok(self
            .plus(&self.plus(x, y)?, z)?
            .sub(&self.plus(x, &self.plus(y, z)?)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices (0-based) of the failing tuple.
    pub indices: Vec<usize>,
    pub defect: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub(crate) fn passed(identity: &str) -> Self {
        Self {
            identity: identity.to_string(),
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn failed(identity: &str, indices: Vec<usize>, defect: Element) -> Self {
        Self {
            identity: identity.to_string(),
            holds: false,
            witness: Some(Witness { indices, defect }),
        }
    }
}

/// Evaluates an identity's defect at a tuple of basis indices.
pub fn evaluate_at_basis(a: &Algebra, which: Identity, indices: &[usize]) -> Result<Element> {
    let args: Vec<Element> = indices
        .iter()
        .map(|&i| {
            if i >= a.dim() {
                Err(Error::DimensionMismatch {
                    expected: a.dim(),
                    found: i,
                })
            } else {
                Ok(a.basis_element(i))
            }
        })
        .collect::<Result<_>>()?;
    which.defect(a, &args)
}

/// Checks an identity on every basis tuple in lexicographic order, reporting
/// the first failure.
pub fn check_identity(a: &Algebra, which: Identity) -> Result<IdentityReport> {
    let n = a.dim();
    let arity = which.arity();
    if n == 0 {
        return Ok(IdentityReport::passed(which.name()));
    }
    let mut idx = vec![0usize; arity];
    loop {
        let defect = evaluate_at_basis(a, which, &idx)?;
        if !defect.is_zero() {
            return Ok(IdentityReport::failed(which.name(), idx, defect));
        }
        // odometer increment, last index fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(IdentityReport::passed(which.name()));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Same as [`check_identity`] but looks the identity up by name.
pub fn check_identity_named(a: &Algebra, name: &str) -> Result<IdentityReport> {
    check_identity(a, name.parse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, ALTERNATIVE_CATALOG};

    #[test]
    fn octonions_identity_zoo() {
        let o = catalog("octonions").unwrap();
        for id in Identity::ALL {
            let r = check_identity(&o, id).unwrap();
            assert_eq!(r.holds, id != Identity::Associative, "{id}");
        }
        let r = check_identity(&o, Identity::Associative).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(
            evaluate_at_basis(&o, Identity::Associative, &w.indices).unwrap(),
            w.defect
        );
        assert!(!w.defect.is_zero());
    }

    #[test]
    fn four_dimensional_alternative_algebras() {
        for name in ["alt4-a", "alt4-b"] {
            let a = catalog(name).unwrap();
            assert!(
                check_identity_named(&a, "left-alternative").unwrap().holds,
                "{name}"
            );
            assert!(
                check_identity_named(&a, "right-alternative").unwrap().holds,
                "{name}"
            );
            assert!(
                !check_identity_named(&a, "associative").unwrap().holds,
                "{name}"
            );
        }
    }

    #[test]
    fn catalog_alternatives_pass_both_sides() {
        for name in ALTERNATIVE_CATALOG {
            let a = catalog(name).unwrap();
            assert!(
                check_identity(&a, Identity::LeftAlternative).unwrap().holds,
                "{name}"
            );
            assert!(
                check_identity(&a, Identity::RightAlternative)
                    .unwrap()
                    .holds,
                "{name}"
            );
        }
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let o = catalog("octonions").unwrap();
        let w = check_identity(&o, Identity::Associative)
            .unwrap()
            .witness
            .unwrap();
        // brute-force scan for the smallest failing triple
        let mut first = None;
        'outer: for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let d = o
                        .associator(
                            &o.basis_element(i),
                            &o.basis_element(j),
                            &o.basis_element(k),
                        )
                        .unwrap();
                    if !d.is_zero() {
                        first = Some(vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(Some(w.indices), first);
    }

    #[test]
    fn non_alternative_algebra_fails_left_alternativity() {
        // e1·e1 = e2, e2·e1 = e1: (e1e1)e1 = e1 but e1(e1e1) = 0
        let a = Algebra::from_table(
            "skew",
            Algebra::default_basis(2),
            &[(0, 0, 1, 1.into()), (1, 0, 0, 1.into())],
        )
        .unwrap();
        let r = check_identity(&a, Identity::LeftAlternative).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(
            evaluate_at_basis(&a, Identity::LeftAlternative, &w.indices).unwrap(),
            w.defect
        );
    }

    #[test]
    fn zero_dimensional_algebra_satisfies_everything() {
        let z = catalog("zero-0").unwrap();
        for id in Identity::ALL {
            assert!(check_identity(&z, id).unwrap().holds);
        }
    }

    #[test]
    fn unknown_identity_name() {
        let z = catalog("zero-2").unwrap();
        assert_eq!(
            check_identity_named(&z, "commutative").unwrap_err(),
            Error::UnknownIdentity("commutative".into())
        );
    }

    #[test]
    fn associative_algebras_are_malcev_and_jordan_admissible() {
        let m = catalog("m2").unwrap();
        for id in Identity::ALL {
            assert!(check_identity(&m, id).unwrap().holds, "{id}");
        }
    }
}
