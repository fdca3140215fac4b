//! Exact left-alternative cohomology and formal deformations of finite
//! dimensional algebras over the rationals.

pub mod algebra;
pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod identities;
pub mod io;
pub mod linalg;

pub use algebra::{Algebra, Element};
pub use catalog::catalog;
pub use cochain::{Cochain, DifferentialMatrix, Theory};
pub use cohomology::{cohomology, verify_class, ClassCheck, CohomologyReport};
pub use deformation::{DeformationJet, GaugeJet, Integration, ObstructionResult};
pub use error::{Error, Result};
pub use identities::{check_identity, Identity, IdentityReport, Witness};
pub use linalg::{Matrix, Rational};
