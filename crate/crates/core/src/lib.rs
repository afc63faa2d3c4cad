//! Exact computations with crystallographic and Bieberbach groups.
//!
//! Groups are given in standard form: lattice `ℤᵏ`, generators `(A, a)` with
//! `A ∈ GL_k(ℤ)` and rational `a`. All arithmetic is exact (big integers and
//! big rationals).
//!
//! ```
//! use bieberbach::{abelianization, catalog, is_connective};
//!
//! let hw = catalog::hantzsche_wendt();
//! assert_eq!(abelianization(&hw).to_string(), "Z/4 + Z/4");
//! assert!(!is_connective(&hw).unwrap().verdict);
//! ```

pub mod calabi;
pub mod catalog;
pub mod crystal;
pub mod dual;
mod error;
pub mod finite;
pub mod format;
pub mod invariants;
pub mod linalg;
pub mod report;

pub use calabi::{
    calabi_kernel, decompose, is_connective, surjection_to_z, CalabiError, CalabiStep,
    ConnectivityReport, Decomposition, PolyZSeries, SurjectionToZ,
};
pub use catalog::{CatalogEntry, CatalogError, ExpectedInvariants};
pub use crystal::{build_group, AffineGen, CrystalGroup, GroupError};
pub use dual::{induced_dimension, orbit_data, stabilizer_classes, Character, StabilizerRecord};
pub use error::Error;
pub use finite::{CoprimeTree, FiniteGroup, FiniteGroupError, Subgroup};
pub use format::{export_group, parse_group, FormatError};
pub use invariants::{
    abelianization, character_count, fixed_lattice, fixed_torus, AbelianInvariants, CharacterCount,
    FixedLattice, FixedTorusSubgroup,
};
pub use linalg::{IntMatrix, IntVector, RatVector};
pub use report::{analyze, AnalysisReport};
