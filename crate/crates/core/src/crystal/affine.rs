use num_traits::Signed;

use crate::linalg::{IntMatrix, LinalgError, RatVector};

use super::GroupError;

/// Affine map `x ↦ A·x + a` with `A ∈ GL_k(ℤ)` and rational `a`.
///
/// Composition follows `(A, a)(B, b) = (AB, A·b + a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineGen {
    matrix: IntMatrix,
    translation: RatVector,
}

impl AffineGen {
    /// Checks shape and `|det A| = 1`.
    pub fn new(matrix: IntMatrix, translation: RatVector) -> Result<Self, GroupError> {
        if !matrix.is_square() {
            return Err(LinalgError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            }
            .into());
        }
        if matrix.rows() != translation.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: matrix.rows(),
                found: translation.dim(),
            }
            .into());
        }
        let det = matrix.determinant()?;
        if det.abs() != 1.into() {
            return Err(GroupError::NotUnimodular {
                determinant: det.to_string(),
            });
        }
        Ok(Self {
            matrix,
            translation,
        })
    }

    pub(crate) fn new_unchecked(matrix: IntMatrix, translation: RatVector) -> Self {
        debug_assert_eq!(matrix.rows(), translation.dim());
        Self {
            matrix,
            translation,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new_unchecked(IntMatrix::identity(dim), RatVector::zeros(dim))
    }

    pub fn translation_by(v: RatVector) -> Self {
        Self::new_unchecked(IntMatrix::identity(v.dim()), v)
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn translation(&self) -> &RatVector {
        &self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.translation.is_zero()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let matrix = self.matrix.mul(&other.matrix)?;
        let translation = self
            .matrix
            .mul_rat_vec(&other.translation)?
            .add(&self.translation);
        Ok(Self::new_unchecked(matrix, translation))
    }

    /// `(A, a)⁻¹ = (A⁻¹, −A⁻¹·a)`.
    pub fn invert(&self) -> Self {
        let inv = self
            .matrix
            .inverse_unimodular()
            .expect("AffineGen matrices are unimodular");
        let t = inv.mul_rat_vec(&self.translation).expect("square").neg();
        Self::new_unchecked(inv, t)
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::identity(self.dim()), |acc, _| {
            acc.multiply(self).expect("same dimension")
        })
    }

    /// Translation part reduced into [0, 1)ᵏ.
    pub(crate) fn reduced(&self) -> Self {
        Self::new_unchecked(self.matrix.clone(), self.translation.reduce_mod_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> AffineGen {
        AffineGen::new(
            IntMatrix::from_diagonal(&[1, -1]),
            RatVector::from_fractions(&[(1, 2), (0, 1)]),
        )
        .unwrap()
    }

    #[test]
    fn inverse_cancels() {
        let g = klein();
        assert!(g.multiply(&g.invert()).unwrap().is_identity());
        assert!(g.invert().multiply(&g).unwrap().is_identity());
    }

    #[test]
    fn klein_square_is_translation() {
        let g2 = klein().multiply(&klein()).unwrap();
        assert!(g2.matrix().is_identity());
        assert_eq!(
            g2.translation(),
            &RatVector::from_fractions(&[(1, 1), (0, 1)])
        );
    }

    #[test]
    fn hantzsche_wendt_product() {
        let x = AffineGen::new(
            IntMatrix::from_diagonal(&[1, -1, -1]),
            RatVector::from_fractions(&[(1, 2), (1, 2), (0, 1)]),
        )
        .unwrap();
        let y = AffineGen::new(
            IntMatrix::from_diagonal(&[-1, 1, -1]),
            RatVector::from_fractions(&[(0, 1), (1, 2), (1, 2)]),
        )
        .unwrap();
        let xy = x.multiply(&y).unwrap();
        assert_eq!(xy.matrix(), &IntMatrix::from_diagonal(&[-1, -1, 1]));
        assert_eq!(
            xy.translation(),
            &RatVector::from_fractions(&[(1, 2), (0, 1), (-1, 2)])
        );
    }

    #[test]
    fn rejects_bad_input() {
        let e = AffineGen::new(IntMatrix::from_diagonal(&[2, 1]), RatVector::zeros(2));
        assert!(matches!(e, Err(GroupError::NotUnimodular { .. })));
        let e = AffineGen::new(IntMatrix::identity(2), RatVector::zeros(3));
        assert!(matches!(e, Err(GroupError::Linalg(_))));
        assert!(klein().multiply(&AffineGen::identity(3)).is_err());
    }
}
