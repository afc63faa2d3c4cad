//! Homological and fixed-point invariants of a crystallographic group.
//!
//! Three independent routes to the same rank:
//! - the abelianization `H₁(G,ℤ)` from a multiplication-table presentation,
//! - the fixed lattice `(ℤᵏ)ᴰ = ker ⊕ₛ (A(s) − I)`,
//! - the fixed subgroup of the dual torus `(𝕋ᵏ)ᴰ`, read off the Smith form of
//!   `⊕ₛ (A(s)ᵀ − I)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::crystal::CrystalGroup;
use crate::linalg::{
    integer_kernel, row_lattice_basis, smith_right_only, IntMatrix, IntVector, RatVector,
};

/// Which conjugation relations `(A(s) − I)·e = 0` go into the presentation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConjugationRows {
    /// Only the holonomy images of the input generators.
    #[default]
    Generators,
    /// Every holonomy element.
    AllElements,
}

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ᵢ ℤ/dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    /// Elementary divisors `dᵢ ≥ 2` with `dᵢ | dᵢ₊₁`.
    pub torsion: Vec<BigInt>,
    /// Change of generators onto the cyclic factors. Row `i` is the image of
    /// presentation generator `i` (lattice basis vectors first, then one lift
    /// per holonomy element); column `j` is the coordinate in a factor of
    /// order `factor_orders[j]` (1: trivial, 0: infinite cyclic).
    pub presentation_map: IntMatrix,
    pub factor_orders: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// ℤ-basis of `Hom(G, ℤ)` as value vectors on the presentation
    /// generators, in Hermite normal form.
    pub fn free_homomorphisms(&self) -> Vec<IntVector> {
        let cols: Vec<IntVector> = self
            .factor_orders
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_zero())
            .map(|(j, _)| self.presentation_map.column(j))
            .collect();
        if cols.is_empty() {
            return cols;
        }
        let m = IntMatrix::from_rows(&cols, self.presentation_map.rows()).expect("uniform");
        row_lattice_basis(&m)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Relation matrix of `G` over the variables `e₁..e_k, x_s (s ∈ D)`.
pub fn relation_matrix(g: &CrystalGroup, rows: ConjugationRows) -> IntMatrix {
    let k = g.dim();
    let n = g.holonomy_order();
    let vars = k + n;
    let mut out: Vec<IntVector> = Vec::new();

    let conj: Vec<usize> = match rows {
        ConjugationRows::Generators => g.holonomy_generators(),
        ConjugationRows::AllElements => (1..n).collect(),
    };
    for s in conj {
        // x_s e_i x_s⁻¹ = A(s) e_i: the relation vector is column i of A(s) − I
        let a = g.element(s).matrix.minus_identity();
        for i in 0..k {
            let mut row = vec![BigInt::zero(); vars];
            for (r, x) in row.iter_mut().take(k).enumerate() {
                *x = a[(r, i)].clone();
            }
            out.push(row);
        }
    }

    let mut identity_row = vec![BigInt::zero(); vars];
    identity_row[k] = BigInt::one();
    out.push(identity_row);

    for s in 0..n {
        for t in 0..n {
            let st = g.multiply_index(s, t);
            let mut row = vec![BigInt::zero(); vars];
            row[k + s] += 1;
            row[k + t] += 1;
            row[k + st] -= 1;
            for (x, tau) in row.iter_mut().zip(g.cocycle().get(s, t)) {
                *x -= tau;
            }
            out.push(row);
        }
    }
    IntMatrix::from_rows(&out, vars).expect("uniform rows")
}

/// `H₁(G,ℤ) = G/[G,G]`.
pub fn abelianization(g: &CrystalGroup) -> AbelianInvariants {
    abelianization_with(g, ConjugationRows::Generators)
}

pub fn abelianization_with(g: &CrystalGroup, rows: ConjugationRows) -> AbelianInvariants {
    let rel = relation_matrix(g, rows);
    let vars = rel.cols();
    // the relation matrix has |D|² rows; reduce to a row-lattice basis first
    let basis = row_lattice_basis(&rel);
    let reduced = IntMatrix::from_rows(&basis, vars).expect("uniform rows");
    let snf = smith_right_only(&reduced);
    let mut factor_orders = snf.divisors.clone();
    factor_orders.resize(vars, BigInt::zero());
    let rank = factor_orders.iter().filter(|d| d.is_zero()).count();
    let torsion = factor_orders
        .iter()
        .filter(|d| **d > BigInt::one())
        .cloned()
        .collect();
    AbelianInvariants {
        rank,
        torsion,
        presentation_map: snf.v,
        factor_orders,
    }
}

/// `N^G = {v ∈ ℤᵏ : A(s)v = v ∀s}`; equals the center `Z(G)` for Bieberbach groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLattice {
    pub basis: Vec<IntVector>,
}

impl FixedLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn fixed_lattice(g: &CrystalGroup) -> FixedLattice {
    fixed_lattice_of(g.dim(), &holonomy_generator_matrices(g))
}

/// Fixed lattice of the group generated by `matrices`.
pub fn fixed_lattice_of(dim: usize, matrices: &[IntMatrix]) -> FixedLattice {
    let blocks: Vec<IntMatrix> = matrices.iter().map(IntMatrix::minus_identity).collect();
    FixedLattice {
        basis: integer_kernel(&IntMatrix::vstack(&blocks, dim)),
    }
}

/// The compact group `K = (𝕋ᵏ)ᴰ ≅ 𝕋ᵐ × ∏ ℤ/dᵢ` of characters fixed by the dual action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedTorusSubgroup {
    /// Dimension `m` of the identity component.
    pub rank: usize,
    /// Orders `dᵢ ≥ 2` of the finite factors.
    pub component_orders: Vec<BigInt>,
    /// Integral vectors spanning the Lie algebra `W = {a : A(s)ᵀa = a ∀s}`.
    pub tangent_basis: Vec<RatVector>,
    /// All fixed points as vectors in `[0,1)ᵏ`, sorted; only when `rank == 0`.
    pub points: Option<Vec<RatVector>>,
}

impl FixedTorusSubgroup {
    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of connected components.
    pub fn component_count(&self) -> BigInt {
        self.component_orders
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }
}

pub fn fixed_torus(g: &CrystalGroup) -> FixedTorusSubgroup {
    fixed_torus_of(g.dim(), &holonomy_generator_matrices(g))
}

/// Fixed subgroup of `𝕋ᵏ` under the dual action of the group generated by `matrices`.
///
/// A point `a ∈ ℝᵏ/ℤᵏ` is fixed iff `(A(s)ᵀ − I)·a ∈ ℤᵏ` for every generator.
/// With `U·M·V = D` for the stacked matrix `M`, substituting `a = V·b`
/// decouples the conditions into `dᵢ·bᵢ ∈ ℤ`.
pub fn fixed_torus_of(dim: usize, matrices: &[IntMatrix]) -> FixedTorusSubgroup {
    let blocks: Vec<IntMatrix> = matrices
        .iter()
        .map(|a| a.transpose().minus_identity())
        .collect();
    let m = IntMatrix::vstack(&blocks, dim);
    let snf = smith_right_only(&m);
    let mut d = snf.divisors.clone();
    d.resize(dim, BigInt::zero());

    let rank = d.iter().filter(|x| x.is_zero()).count();
    let component_orders: Vec<BigInt> = d.iter().filter(|x| **x > BigInt::one()).cloned().collect();
    let tangent_basis = integer_kernel(&m)
        .iter()
        .map(|v| RatVector::from_integers(v))
        .collect();

    let points = (rank == 0).then(|| {
        let mut pts = Vec::new();
        let mut b = vec![BigInt::zero(); dim];
        enumerate_points(&d, &snf.v, 0, &mut b, &mut pts);
        pts.sort();
        pts.dedup();
        pts
    });

    FixedTorusSubgroup {
        rank,
        component_orders,
        tangent_basis,
        points,
    }
}

fn enumerate_points(
    d: &[BigInt],
    v: &IntMatrix,
    i: usize,
    numerators: &mut Vec<BigInt>,
    out: &mut Vec<RatVector>,
) {
    if i == d.len() {
        let b = RatVector::new(
            numerators
                .iter()
                .zip(d)
                .map(|(n, di)| BigRational::new(n.clone(), di.clone()))
                .collect(),
        );
        out.push(v.mul_rat_vec(&b).expect("square").reduce_mod_one());
        return;
    }
    let mut n = BigInt::zero();
    while n < d[i] {
        numerators[i] = n.clone();
        enumerate_points(d, v, i + 1, numerators, out);
        n += 1;
    }
    numerators[i] = BigInt::zero();
}

/// Number of one-dimensional characters of `G`, i.e. `|H₁(G,ℤ)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterCount {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for CharacterCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterCount::Finite(n) => write!(f, "{n}"),
            CharacterCount::Infinite => write!(f, "infinite"),
        }
    }
}

pub fn character_count(g: &CrystalGroup) -> CharacterCount {
    match abelianization(g).order() {
        Some(n) => CharacterCount::Finite(n),
        None => CharacterCount::Infinite,
    }
}

fn holonomy_generator_matrices(g: &CrystalGroup) -> Vec<IntMatrix> {
    g.holonomy_generators()
        .into_iter()
        .map(|s| g.element(s).matrix.clone())
        .collect()
}
