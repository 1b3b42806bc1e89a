//! Lie superalgebras over the rationals and their Schur multipliers.
//!
//! An algebra is a graded basis with structure constants
//! ([`LieSuperalgebra`]). The multiplier `M(L)` is computed as the degree-2
//! homology of the super-exterior complex ([`homology`]), cross-checked by
//! a dual cochain computation, and fed into the invariants `t(L)`, `s(L)`
//! and the dimension bounds ([`invariants`]). [`catalog`] holds the named
//! small algebras with their published multiplier data and [`analysis`]
//! matches algebras against that list and tests capability.
//!
//! ```
//! use superschur_core::catalog::{catalog_get, CatalogParams};
//! use superschur_core::homology::schur_multiplier;
//!
//! let l = catalog_get("L12_3", &CatalogParams::default()).unwrap();
//! let m = schur_multiplier(&l).unwrap();
//! assert_eq!(m.to_string(), "A(1|1)");
//! ```

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod random;
pub mod superalg;

pub use error::{Error, Result};
pub use homology::{schur_multiplier, schur_multiplier_cochain_oracle, MultiplierResult};
pub use linalg::Scalar;
pub use superalg::{GradedSubspace, LieSuperalgebra, Parity};
