//! Row-style Hermite normal form.
//!
//! `H = U · M` is in echelon form: pivots positive, entries above each pivot
//! reduced into `[0, pivot)`, zero rows at the bottom. The nonzero rows of
//! `H` are the canonical basis of the row lattice of `M`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Column index of each pivot, one per nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows of `h`.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank()).map(|i| self.h.row(i).to_vec()).collect()
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let pivots = reduce(&mut h, Some(&mut u));
    HermiteForm { h, u, pivots }
}

/// Canonical basis of the row lattice, without tracking the transform.
pub(crate) fn row_lattice_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let mut h = m.clone();
    let pivots = reduce(&mut h, None);
    (0..pivots.len()).map(|i| h.row(i).to_vec()).collect()
}

fn reduce(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) -> Vec<usize> {
    let rows = h.rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..h.cols() {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[(i, j)].is_zero())
                .min_by(|&a, &b| h[(a, j)].abs().cmp(&h[(b, j)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(r, p);
            }
            let pivot = h[(r, j)].clone();
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = -h[(i, j)].div_floor(&pivot);
                h.add_row_multiple(i, r, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row_multiple(i, r, &q);
                }
                done &= h[(i, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, j)].is_zero() {
            continue;
        }
        if h[(r, j)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(r);
            }
        }
        let pivot = h[(r, j)].clone();
        for i in 0..r {
            let q = -h[(i, j)].div_floor(&pivot);
            h.add_row_multiple(i, r, &q);
            if let Some(u) = u.as_deref_mut() {
                u.add_row_multiple(i, r, &q);
            }
        }
        pivots.push(j);
        r += 1;
    }
    pivots
}
