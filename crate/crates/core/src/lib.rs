//! Exact Sullivan-model computations for nilmanifolds and for twisted
//! models of nilmanifold bundles over `S^2` and over formal bases with
//! degree-2 generators.
//!
//! The building blocks:
//!
//! - [`algebra`]: free graded-commutative algebras with Koszul signs and
//!   derivations;
//! - [`lie`]: nilpotent Lie algebras from structure constants and their
//!   Chevalley–Eilenberg models;
//! - [`cohomology`]: Betti numbers, representative cocycles and cup products;
//! - [`symplectic`]: symplectic certificates, search and hard Lefschetz;
//! - [`hamiltonian`]: twisted models, the Hamiltonian obstruction and the
//!   forcing of the twist to zero;
//! - [`catalog`]: built-in algebras, with a known symplectic form where one exists.
//!
//! ```
//! use nilsplit_core::{catalog, ce_betti, ce_model};
//!
//! let kt = catalog::get("kodaira-thurston").unwrap();
//! let ce = ce_model(&kt.spec).unwrap();
//! assert_eq!(ce_betti(&ce), vec![1, 3, 4, 3, 1]);
//! ```

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod hamiltonian;
pub mod lie;
pub mod linalg;
pub mod symplectic;

/// Exact coefficients used everywhere.
pub type Rational = num::BigRational;

pub use algebra::{Algebra, AlgebraError, Element, FreeDga, Generator, Monomial};
pub use cohomology::{ce_betti, poincare_check, Cohomology, CohomologyBasis, CohomologyError};
pub use hamiltonian::{
    build_twisted, csplit_compare, forcing_check, hamiltonian_obstruction, pullback_column,
    total_betti, BaseModel, CsplitVerdict, ForcingReport, Obstruction, TwistError, TwistedModel,
};
pub use lie::{ce_model, validate, Bracket, CeModel, LieAlgebraSpec, LieError, ValidationReport};
pub use symplectic::{
    find_symplectic, hard_lefschetz, is_symplectic, SearchOptions, SymplecticCertificate,
    SymplecticError, SymplecticForm, SymplecticSearch, TwoForm,
};
