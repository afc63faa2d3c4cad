//! Crystallographic groups in standard form.
//!
//! A group is given by affine generators `(A, a)` with `A ∈ GL_k(ℤ)` and
//! rational `a`; the lattice is always `ℤᵏ`. [`build_group`] enumerates the
//! holonomy by closure, reduces coset translations into `[0,1)ᵏ`, and tabulates
//! the extension cocycle `τ(s,t) = A(s)·a_t + a_s − a_{st}`.

mod affine;
mod group;

pub use affine::AffineGen;
pub use group::{
    build_group, build_group_with, BuildOptions, CrystalGroup, ExtensionCocycle, HolonomyElement,
    TorsionWitness, DEFAULT_CLOSURE_BUDGET,
};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("holonomy closure exceeded {budget} elements; generators do not define a crystallographic group")]
    ClosureBudgetExceeded { budget: usize },
    #[error("cocycle value tau({s},{t}) is not integral")]
    NonIntegralCocycle { s: usize, t: usize },
    #[error(
        "two holonomy elements share the matrix {matrix}; the lattice Z^k is not maximal abelian"
    )]
    HolonomyNotFaithful { matrix: String },
    #[error("matrix has determinant {determinant}, expected +1 or -1")]
    NotUnimodular { determinant: String },
    #[error("element is not in the group: {reason}")]
    NotInGroup { reason: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
