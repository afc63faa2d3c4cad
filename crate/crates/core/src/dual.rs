//! The dual action of the holonomy on rational characters of the lattice.
//!
//! A character `χ ∈ ℚᵏ/ℤᵏ` is moved by `s` to `A(s)ᵀχ mod 1`; the lattice
//! acts trivially, so orbits and stabilizers are computed over `D` alone.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::crystal::CrystalGroup;
use crate::linalg::RatVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("character has dimension {found}, group has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("denominator bound must be at least 1")]
    ZeroDenominator,
    #[error("representation dimension must be at least 1")]
    ZeroSigmaDimension,
}

/// A rational character, entries reduced into `[0,1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character(RatVector);

impl Character {
    pub fn new(v: RatVector) -> Self {
        Self(v.reduce_mod_one())
    }

    pub fn from_fractions(v: &[(i64, i64)]) -> Self {
        Self::new(RatVector::from_fractions(v))
    }

    pub fn vector(&self) -> &RatVector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ{}", self.0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerRecord {
    pub character: Character,
    /// Sorted, without repetition.
    pub orbit: Vec<Character>,
    /// Holonomy indices fixing the character, sorted.
    pub stabilizer: Vec<usize>,
    /// `[D : D_χ]`, equal to the orbit length.
    pub index: usize,
}

fn act(g: &CrystalGroup, s: usize, chi: &RatVector) -> Character {
    let at = g.element(s).matrix.transpose();
    Character::new(at.mul_rat_vec(chi).expect("dimension checked"))
}

pub fn orbit_data(g: &CrystalGroup, chi: &Character) -> Result<StabilizerRecord, DualError> {
    if chi.dim() != g.dim() {
        return Err(DualError::DimensionMismatch {
            expected: g.dim(),
            found: chi.dim(),
        });
    }
    let mut orbit = BTreeSet::new();
    let mut stabilizer = Vec::new();
    for s in 0..g.holonomy_order() {
        let image = act(g, s, chi.vector());
        if &image == chi {
            stabilizer.push(s);
        }
        orbit.insert(image);
    }
    Ok(StabilizerRecord {
        character: chi.clone(),
        index: orbit.len(),
        orbit: orbit.into_iter().collect(),
        stabilizer,
    })
}

/// Distinct stabilizer subgroups over all characters with entries in `{0, 1/q, …, (q−1)/q}`.
pub fn stabilizer_classes(g: &CrystalGroup, q: u32) -> Result<BTreeSet<Vec<usize>>, DualError> {
    if q == 0 {
        return Err(DualError::ZeroDenominator);
    }
    let k = g.dim();
    let q = i64::from(q);
    // A(s)ᵀ over machine integers; entries of holonomy matrices are tiny.
    let transposes: Vec<Vec<i64>> = g
        .holonomy()
        .iter()
        .map(|h| {
            h.matrix
                .transpose()
                .entries()
                .iter()
                .map(|x| i64::try_from(x).expect("small holonomy entries"))
                .collect()
        })
        .collect();
    let mut classes = BTreeSet::new();
    let mut v = vec![0i64; k];
    loop {
        let stab: Vec<usize> = transposes
            .iter()
            .enumerate()
            .filter(|(_, m)| {
                (0..k).all(|i| {
                    let w: i64 = (0..k).map(|j| m[i * k + j] * v[j]).sum();
                    (w - v[i]).rem_euclid(q) == 0
                })
            })
            .map(|(s, _)| s)
            .collect();
        classes.insert(stab);
        let mut i = 0;
        while i < k {
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    Ok(classes)
}

/// Dimension of the representation induced from `G_χ` by a `sigma_dim`-dimensional σ.
pub fn induced_dimension(record: &StabilizerRecord, sigma_dim: usize) -> Result<usize, DualError> {
    if sigma_dim == 0 {
        return Err(DualError::ZeroSigmaDimension);
    }
    Ok(record.index * sigma_dim)
}

/// The characters with entries in `(1/q)ℤ/ℤ`, in lexicographic order of numerators.
pub fn grid_characters(dim: usize, q: u32) -> Vec<Character> {
    let q = i64::from(q.max(1));
    let total = (q as usize).pow(dim as u32);
    (0..total)
        .map(|mut n| {
            let mut entries = vec![BigRational::from_integer(BigInt::from(0)); dim];
            for e in entries.iter_mut().rev() {
                *e = BigRational::new(BigInt::from(n as i64 % q), BigInt::from(q));
                n /= q as usize;
            }
            Character::new(RatVector::new(entries))
        })
        .collect()
}
