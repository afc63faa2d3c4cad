//! Built-in example groups with their known invariants.

use thiserror::Error;

use crate::crystal::{build_group, AffineGen, CrystalGroup, GroupError};
use crate::invariants::abelianization;
use crate::linalg::{IntMatrix, RatVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("catalog entry `{key}` failed validation: {source}")]
    Invalid { key: String, source: GroupError },
    #[error("catalog entry `{0}` violates its defining relations")]
    RelationFailure(String),
}

/// Invariants recorded alongside each entry, recomputed by the test suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub h1_rank: usize,
    pub h1_torsion: Vec<u64>,
    pub fixed_torus_rank: usize,
    pub torus_components: Vec<u64>,
    pub connective: bool,
    /// Number of `ℤ` factors peeled off before reaching dimension 0 or a core.
    pub chain_length: usize,
    pub holonomy_order: usize,
    pub holonomy_id: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub description: &'static str,
    pub group: CrystalGroup,
    pub expected: ExpectedInvariants,
}

const KEYS: &[&str] = &[
    "torus_1",
    "torus_2",
    "torus_3",
    "torus_4",
    "klein_bottle",
    "hw",
    "dim3_c2",
    "dim3_c3",
    "dim3_c4",
    "dim3_c6",
    "dim3_c2c2_connective",
];

/// A translation in dimension 3 as `(numerator, denominator)` pairs.
pub type Translation3 = [(i64, i64); 3];

/// Translation pair found by [`search_c2c2_connective`], frozen here so that
/// loading the catalog does not rerun the search.
const C2C2_TRANSLATIONS: [Translation3; 2] = [[(1, 2), (0, 1), (0, 1)], [(0, 1), (1, 2), (0, 1)]];

pub fn keys() -> &'static [&'static str] {
    KEYS
}

pub fn list() -> Vec<CatalogEntry> {
    KEYS.iter()
        .map(|k| get(k).expect("built-in entries are valid"))
        .collect()
}

pub fn get(key: &str) -> Result<CatalogEntry, CatalogError> {
    let invalid = |source| CatalogError::Invalid {
        key: key.to_string(),
        source,
    };
    let (description, group, expected) = match key {
        "torus_1" | "torus_2" | "torus_3" | "torus_4" => {
            let k: usize = key[6..].parse().expect("digit suffix");
            (
                "flat torus, trivial holonomy",
                torus(k),
                ExpectedInvariants {
                    h1_rank: k,
                    h1_torsion: vec![],
                    fixed_torus_rank: k,
                    torus_components: vec![],
                    connective: true,
                    chain_length: k,
                    holonomy_order: 1,
                    holonomy_id: "1",
                },
            )
        }
        "klein_bottle" => (
            "Klein bottle",
            klein_bottle(),
            ExpectedInvariants {
                h1_rank: 1,
                h1_torsion: vec![2],
                fixed_torus_rank: 1,
                torus_components: vec![2],
                connective: true,
                chain_length: 2,
                holonomy_order: 2,
                holonomy_id: "Z/2",
            },
        ),
        "hw" => (
            "Hantzsche-Wendt manifold",
            checked_hantzsche_wendt()?,
            ExpectedInvariants {
                h1_rank: 0,
                h1_torsion: vec![4, 4],
                fixed_torus_rank: 0,
                torus_components: vec![2, 2, 2],
                connective: false,
                chain_length: 0,
                holonomy_order: 4,
                holonomy_id: "Z/2 + Z/2",
            },
        ),
        "dim3_c2" => (
            "orientable, holonomy Z/2 (half turn)",
            screw(
                key,
                &[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]],
                [(1, 2), (0, 1), (0, 1)],
            )
            .map_err(invalid)?,
            cyclic_expected(vec![2, 2], vec![2, 2], "Z/2", 2),
        ),
        "dim3_c3" => (
            "orientable, holonomy Z/3",
            screw(
                key,
                &[&[0, -1, 0], &[1, -1, 0], &[0, 0, 1]],
                [(0, 1), (0, 1), (1, 3)],
            )
            .map_err(invalid)?,
            cyclic_expected(vec![3], vec![3], "Z/3", 3),
        ),
        "dim3_c4" => (
            "orientable, holonomy Z/4",
            screw(
                key,
                &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]],
                [(0, 1), (0, 1), (1, 4)],
            )
            .map_err(invalid)?,
            cyclic_expected(vec![2], vec![2], "Z/4", 4),
        ),
        "dim3_c6" => (
            "orientable, holonomy Z/6",
            screw(
                key,
                &[&[1, -1, 0], &[1, 0, 0], &[0, 0, 1]],
                [(0, 1), (0, 1), (1, 6)],
            )
            .map_err(invalid)?,
            cyclic_expected(vec![], vec![], "Z/6", 6),
        ),
        "dim3_c2c2_connective" => (
            "non-orientable, holonomy Z/2 + Z/2, infinite first homology",
            c2c2_group(key, &C2C2_TRANSLATIONS[0], &C2C2_TRANSLATIONS[1]).map_err(invalid)?,
            ExpectedInvariants {
                h1_rank: 1,
                h1_torsion: vec![2, 2],
                fixed_torus_rank: 1,
                torus_components: vec![2, 2],
                connective: true,
                chain_length: 3,
                holonomy_order: 4,
                holonomy_id: "Z/2 + Z/2",
            },
        ),
        _ => return Err(CatalogError::UnknownKey(key.to_string())),
    };
    Ok(CatalogEntry {
        key: KEYS.iter().find(|k| **k == key).expect("listed key"),
        description,
        group,
        expected,
    })
}

fn cyclic_expected(
    h1_torsion: Vec<u64>,
    torus_components: Vec<u64>,
    holonomy_id: &'static str,
    order: usize,
) -> ExpectedInvariants {
    ExpectedInvariants {
        h1_rank: 1,
        h1_torsion,
        fixed_torus_rank: 1,
        torus_components,
        connective: true,
        chain_length: 3,
        holonomy_order: order,
        holonomy_id,
    }
}

fn affine(rows: &[&[i64]], t: &[(i64, i64)]) -> AffineGen {
    AffineGen::new(IntMatrix::from_i64(rows), RatVector::from_fractions(t)).expect("unimodular")
}

fn screw(name: &str, rows: &[&[i64]], t: [(i64, i64); 3]) -> Result<CrystalGroup, GroupError> {
    build_group(3, vec![affine(rows, &t)], name)
}

/// `ℤᵏ` with no generators beyond the lattice.
pub fn torus(k: usize) -> CrystalGroup {
    build_group(k, vec![], &format!("torus_{k}")).expect("torus")
}

pub fn klein_bottle() -> CrystalGroup {
    build_group(
        2,
        vec![affine(&[&[1, 0], &[0, -1]], &[(1, 2), (0, 1)])],
        "klein_bottle",
    )
    .expect("klein bottle")
}

fn hw_generators() -> (AffineGen, AffineGen) {
    (
        affine(
            &[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]],
            &[(1, 2), (1, 2), (0, 1)],
        ),
        affine(
            &[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]],
            &[(0, 1), (1, 2), (1, 2)],
        ),
    )
}

/// Checks `x²yx² = y` and `y²xy² = x` on the generators.
pub fn hw_relations_hold(x: &AffineGen, y: &AffineGen) -> bool {
    let rel = |a: &AffineGen, b: &AffineGen| {
        let a2 = a.pow(2);
        a2.multiply(b)
            .and_then(|p| p.multiply(&a2))
            .map(|w| &w == b)
            .unwrap_or(false)
    };
    rel(x, y) && rel(y, x)
}

fn checked_hantzsche_wendt() -> Result<CrystalGroup, CatalogError> {
    let (x, y) = hw_generators();
    if !hw_relations_hold(&x, &y) {
        return Err(CatalogError::RelationFailure("hw".into()));
    }
    build_group(3, vec![x, y], "hw").map_err(|source| CatalogError::Invalid {
        key: "hw".into(),
        source,
    })
}

pub fn hantzsche_wendt() -> CrystalGroup {
    checked_hantzsche_wendt().expect("hw")
}

const C2C2_X: [&[i64]; 3] = [&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]];
const C2C2_Y: [&[i64]; 3] = [&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]];

fn c2c2_group(
    name: &str,
    tx: &[(i64, i64)],
    ty: &[(i64, i64)],
) -> Result<CrystalGroup, GroupError> {
    build_group(3, vec![affine(&C2C2_X, tx), affine(&C2C2_Y, ty)], name)
}

/// First translation pair `(t_x, t_y) ∈ ({0,1/2}³)²`, in lexicographic order,
/// for which the generators `diag(1,−1,−1)` and `diag(1,1,−1)` give a
/// torsion-free group with holonomy of order 4 and infinite first homology.
pub fn search_c2c2_connective() -> Option<(Translation3, Translation3)> {
    let halves = |i: usize| -> Translation3 {
        let bit = |b: usize| {
            if i >> (2 - b) & 1 == 1 {
                (1, 2)
            } else {
                (0, 1)
            }
        };
        [bit(0), bit(1), bit(2)]
    };
    for i in 0..8 {
        for j in 0..8 {
            let (tx, ty) = (halves(i), halves(j));
            let Ok(g) = c2c2_group("search", &tx, &ty) else {
                continue;
            };
            if g.holonomy_order() == 4 && g.is_torsion_free() && !abelianization(&g).is_finite() {
                return Some((tx, ty));
            }
        }
    }
    None
}
