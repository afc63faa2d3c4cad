use thiserror::Error;

use crate::calabi::CalabiError;
use crate::catalog::CatalogError;
use crate::crystal::GroupError;
use crate::dual::DualError;
use crate::finite::FiniteGroupError;
use crate::format::FormatError;
use crate::linalg::LinalgError;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Calabi(#[from] CalabiError),
    #[error(transparent)]
    Finite(#[from] FiniteGroupError),
    #[error(transparent)]
    Dual(#[from] DualError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Format(#[from] FormatError),
}
