//! Kernels, integer and rational system solving, rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hermite::row_lattice_basis;
use super::smith::{smith_normal_form, smith_right_only};
use super::{IntMatrix, IntVector, LinalgError, RatVector};

/// ℤ-basis of `{x ∈ ℤᶜ : M·x = 0}`, in Hermite normal form (canonical).
pub fn integer_kernel(m: &IntMatrix) -> Vec<IntVector> {
    let s = smith_right_only(m);
    let r = s.rank();
    let cols = m.cols();
    if r == cols {
        return Vec::new();
    }
    // columns r.. of V span the kernel
    let basis: Vec<IntVector> = (r..cols).map(|j| s.v.column(j)).collect();
    let stacked = IntMatrix::from_rows(&basis, cols).expect("uniform length");
    row_lattice_basis(&stacked)
}

/// Solution set of `M·x = b` over ℤ: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSolution {
    pub particular: IntVector,
    pub kernel: Vec<IntVector>,
}

/// Solves `M·x = b` over the integers. `Ok(None)` means no integral solution.
pub fn solve_integer_linear(
    m: &IntMatrix,
    b: &[BigInt],
) -> Result<Option<IntSolution>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let s = smith_normal_form(m);
    let r = s.rank();
    // D·y = U·b with x = V·y
    let ub = s.u.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, c) in ub.iter().enumerate() {
        if i < r {
            let (q, rem) = c.div_rem(&s.divisors[i]);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !c.is_zero() {
            return Ok(None);
        }
    }
    let particular = s.v.mul_vec(&y)?;
    Ok(Some(IntSolution {
        particular,
        kernel: integer_kernel(m),
    }))
}

/// Rank over ℚ, computed by fraction-free elimination (independent of the
/// Smith normal form path).
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let cols = m.cols();
    let mut rank = 0;
    for j in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][j].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[j] - &f * pv;
            }
            let g = super::gcd_all(row.iter());
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// One solution of `M·x = b` over ℚ, or `None` if inconsistent.
/// Free variables are set to zero.
pub fn solve_rational(m: &IntMatrix, b: &RatVector) -> Result<Option<RatVector>, LinalgError> {
    if b.dim() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: b.dim(),
        });
    }
    let cols = m.cols();
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| {
            let mut row: Vec<BigRational> = m
                .row(i)
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect();
            row.push(b.entries()[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][j].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = BigRational::one() / &a[r][j];
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * pv;
            }
        }
        pivots.push(j);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &j) in pivots.iter().enumerate() {
        x[j] = a[i][cols].clone();
    }
    Ok(Some(RatVector::new(x)))
}
