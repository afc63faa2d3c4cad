//! Smith normal form over ℤ with both unimodular transforms.
//!
//! The result satisfies `U · M · V = D` with `D` diagonal, nonnegative
//! divisors, `dᵢ | dᵢ₊₁` among the nonzero ones and all zeros trailing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `d`, length `min(rows, cols)`.
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    /// Number of nonzero divisors, i.e. the rank over ℚ.
    pub fn rank(&self) -> usize {
        self.divisors.iter().take_while(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith_with(m, true)
}

/// Same as [`smith_normal_form`] but `u` is left as the identity-free
/// placeholder (0×0). Used where the row transform is never read and the
/// matrix is tall.
pub(crate) fn smith_right_only(m: &IntMatrix) -> SmithForm {
    smith_with(m, false)
}

fn smith_with(m: &IntMatrix, track_left: bool) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = if track_left {
        IntMatrix::identity(rows)
    } else {
        IntMatrix::zeros(0, 0)
    };
    let mut v = IntMatrix::identity(cols);

    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                return finish(a, u, v, n);
            };
            a.swap_rows(t, pi);
            if track_left {
                u.swap_rows(t, pi);
            }
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row_multiple(i, t, &q);
                if track_left {
                    u.add_row_multiple(i, t, &q);
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    if track_left {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if track_left {
                u.negate_row(t);
            }
        }
    }
    finish(a, u, v, n)
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn finish(d: IntMatrix, u: IntMatrix, v: IntMatrix, n: usize) -> SmithForm {
    let divisors = (0..n).map(|i| d[(i, i)].clone()).collect();
    SmithForm { u, d, v, divisors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .divisors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn check_identity(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::from(1));
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::from(1));
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(divisors(&IntMatrix::identity(2)), vec![1, 1]);
        assert_eq!(divisors(&IntMatrix::zeros(2, 2)), vec![0, 0]);
    }

    #[test]
    fn two_by_two() {
        // gcd of entries = 2, |det| = 8
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        assert_eq!(divisors(&m), vec![2, 4]);
        check_identity(&m);
    }

    #[test]
    fn divisibility_fixup_needed() {
        // diag(2, 3) is diagonal but not in Smith form
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(divisors(&m), vec![1, 6]);
        check_identity(&m);
    }

    #[test]
    fn rectangular_and_empty() {
        let m = IntMatrix::from_i64(&[&[0, -2, -2], &[4, 0, 6]]);
        check_identity(&m);
        assert_eq!(divisors(&m), vec![2, 2]);
        let e = IntMatrix::zeros(0, 3);
        let s = smith_normal_form(&e);
        assert!(s.divisors.is_empty());
        assert!(s.v.is_identity());
    }

    #[test]
    fn right_only_matches() {
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10], &[2, 2, 2]]);
        let full = smith_normal_form(&m);
        let right = smith_right_only(&m);
        assert_eq!(full.divisors, right.divisors);
        assert_eq!(full.v, right.v);
    }
}
