use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{solve_integer_linear, IntMatrix, IntVector, RatVector};

use super::{AffineGen, GroupError};

/// Default cap on the number of holonomy elements enumerated by closure.
pub const DEFAULT_CLOSURE_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub closure_budget: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            closure_budget: DEFAULT_CLOSURE_BUDGET,
        }
    }
}

/// One element `s` of the holonomy group with its linear part `A(s)` and the
/// coset representative translation `a_s ∈ [0,1)ᵏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyElement {
    pub index: usize,
    pub matrix: IntMatrix,
    pub translation: RatVector,
    pub order: u64,
}

impl HolonomyElement {
    /// The coset representative `g_s = (A(s), a_s)`.
    pub fn lift(&self) -> AffineGen {
        AffineGen::new_unchecked(self.matrix.clone(), self.translation.clone())
    }
}

/// τ(s,t) = A(s)·a_t + a_s − a_{st}, stored for all ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCocycle {
    order: usize,
    table: Vec<IntVector>,
}

impl ExtensionCocycle {
    pub fn get(&self, s: usize, t: usize) -> &IntVector {
        &self.table[s * self.order + t]
    }
}

/// Crystallographic group in standard form: lattice `ℤᵏ`, finite holonomy
/// acting by integral matrices, rational coset translations.
///
/// Immutable once built; every constructor path goes through [`build_group`].
#[derive(Clone, Debug)]
pub struct CrystalGroup {
    name: String,
    dim: usize,
    generators: Vec<AffineGen>,
    holonomy: Vec<HolonomyElement>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    cocycle: ExtensionCocycle,
    generator_images: Vec<usize>,
}

/// An element of finite order: `(A(s), a_s + λ)` raised to `order` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub element: usize,
    pub lattice_correction: IntVector,
    pub order: u64,
}

pub fn build_group(
    dim: usize,
    gens: Vec<AffineGen>,
    name: &str,
) -> Result<CrystalGroup, GroupError> {
    build_group_with(dim, gens, name, &BuildOptions::default())
}

pub fn build_group_with(
    dim: usize,
    gens: Vec<AffineGen>,
    name: &str,
    opts: &BuildOptions,
) -> Result<CrystalGroup, GroupError> {
    for g in &gens {
        if g.dim() != dim {
            return Err(GroupError::Linalg(
                crate::linalg::LinalgError::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                },
            ));
        }
    }

    // Closure of the holonomy, keyed by matrix. Every element is a right
    // multiple of the previous ones by a generator, so the finite set that
    // results is the whole group G/ℤᵏ.
    let mut elements: Vec<AffineGen> = vec![AffineGen::identity(dim)];
    let mut index: HashMap<IntMatrix, usize> = HashMap::new();
    index.insert(IntMatrix::identity(dim), 0);
    let mut next = 0;
    while next < elements.len() {
        for g in &gens {
            let p = elements[next].multiply(g)?.reduced();
            match index.get(p.matrix()) {
                Some(&j) => {
                    if elements[j].translation() != p.translation() {
                        return Err(GroupError::HolonomyNotFaithful {
                            matrix: format!("{:?}", p.matrix()),
                        });
                    }
                }
                None => {
                    if elements.len() >= opts.closure_budget {
                        return Err(GroupError::ClosureBudgetExceeded {
                            budget: opts.closure_budget,
                        });
                    }
                    index.insert(p.matrix().clone(), elements.len());
                    elements.push(p);
                }
            }
        }
        next += 1;
    }

    let n = elements.len();
    let mut mult = vec![vec![0; n]; n];
    let mut table = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let p = elements[s].multiply(&elements[t])?;
            let st = *index
                .get(p.matrix())
                .ok_or(GroupError::NonIntegralCocycle { s, t })?;
            mult[s][t] = st;
            let tau = p.translation().sub(elements[st].translation());
            let tau = tau
                .to_integers()
                .ok_or(GroupError::NonIntegralCocycle { s, t })?;
            table.push(tau);
        }
    }
    let inverse: Vec<usize> = (0..n)
        .map(|s| (0..n).find(|&t| mult[s][t] == 0).expect("finite group"))
        .collect();

    let holonomy = elements
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let mut order = 1;
            let mut p = i;
            while p != 0 {
                p = mult[p][i];
                order += 1;
            }
            HolonomyElement {
                index: i,
                matrix: e.matrix().clone(),
                translation: e.translation().clone(),
                order,
            }
        })
        .collect();

    let generator_images = gens.iter().map(|g| index[g.matrix()]).collect();

    Ok(CrystalGroup {
        name: name.to_string(),
        dim,
        generators: gens,
        holonomy,
        mult,
        inverse,
        cocycle: ExtensionCocycle { order: n, table },
        generator_images,
    })
}

impl CrystalGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[AffineGen] {
        &self.generators
    }

    pub fn holonomy(&self) -> &[HolonomyElement] {
        &self.holonomy
    }

    pub fn holonomy_order(&self) -> usize {
        self.holonomy.len()
    }

    pub fn element(&self, s: usize) -> &HolonomyElement {
        &self.holonomy[s]
    }

    pub fn multiply_index(&self, s: usize, t: usize) -> usize {
        self.mult[s][t]
    }

    pub fn multiplication_table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn inverse_index(&self, s: usize) -> usize {
        self.inverse[s]
    }

    pub fn cocycle(&self) -> &ExtensionCocycle {
        &self.cocycle
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.generator_images
    }

    /// Distinct nonidentity holonomy images of the input generators, sorted.
    pub fn holonomy_generators(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .generator_images
            .iter()
            .copied()
            .filter(|&s| s != 0)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == 0
    }

    pub fn index_of_matrix(&self, m: &IntMatrix) -> Option<usize> {
        self.holonomy.iter().position(|h| &h.matrix == m)
    }

    /// Decomposes `g` as `(A(s), a_s + λ)`, i.e. the coset lift of `s`
    /// followed by the lattice translation `λ`.
    pub fn element_normal_form(&self, g: &AffineGen) -> Result<(usize, IntVector), GroupError> {
        if g.dim() != self.dim {
            return Err(GroupError::NotInGroup {
                reason: format!("dimension {} differs from {}", g.dim(), self.dim),
            });
        }
        let s = self
            .index_of_matrix(g.matrix())
            .ok_or_else(|| GroupError::NotInGroup {
                reason: "linear part is not a holonomy matrix".into(),
            })?;
        let lambda = g
            .translation()
            .sub(&self.holonomy[s].translation)
            .to_integers()
            .ok_or_else(|| GroupError::NotInGroup {
                reason: "translation not congruent to the coset representative".into(),
            })?;
        Ok((s, lambda))
    }

    pub fn reconstruct(&self, s: usize, lambda: &[BigInt]) -> AffineGen {
        let h = &self.holonomy[s];
        AffineGen::new_unchecked(h.matrix.clone(), h.translation.add_int(lambda))
    }

    /// `Σ_{j<m} A(s)ʲ` where `m` is the order of `s`.
    pub fn norm_matrix(&self, s: usize) -> IntMatrix {
        let h = &self.holonomy[s];
        let mut acc = IntMatrix::zeros(self.dim, self.dim);
        let mut p = IntMatrix::identity(self.dim);
        for _ in 0..h.order {
            acc = acc.add(&p).expect("same shape");
            p = p.mul(&h.matrix).expect("square");
        }
        acc
    }

    /// First element of finite order found, if any.
    ///
    /// `(A, a_s + λ)ᵐ = (I, N_s·(a_s + λ))`, so torsion over `s` means
    /// `N_s·λ = −N_s·a_s` has an integral solution.
    pub fn torsion_witness(&self) -> Option<TorsionWitness> {
        for s in 1..self.holonomy_order() {
            let ns = self.norm_matrix(s);
            let rhs = ns
                .mul_rat_vec(&self.holonomy[s].translation)
                .expect("square")
                .neg()
                .to_integers()
                .expect("N_s·a_s is a lattice vector for a valid group");
            if let Some(sol) = solve_integer_linear(&ns, &rhs).expect("shapes agree") {
                return Some(TorsionWitness {
                    element: s,
                    lattice_correction: sol.particular,
                    order: self.holonomy[s].order,
                });
            }
        }
        None
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion_witness().is_none()
    }

    /// True when every `a_s` is zero, i.e. the extension splits at the origin.
    pub fn is_symmorphic_at_origin(&self) -> bool {
        self.holonomy
            .iter()
            .all(|h| h.translation.entries().iter().all(Zero::is_zero))
    }
}
