//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers; nothing rounds.

mod hermite;
mod matrix;
mod smith;
mod solve;

pub use hermite::{hermite_normal_form, HermiteForm};
pub use matrix::{frac_part, gcd_all, IntMatrix, IntVector, RatVector};
pub use smith::{smith_normal_form, SmithForm};
pub use solve::{integer_kernel, rational_rank, solve_integer_linear, solve_rational, IntSolution};

pub(crate) use hermite::row_lattice_basis;
pub(crate) use smith::smith_right_only;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}
