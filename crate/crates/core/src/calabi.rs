//! Calabi reduction: peel off a surjection `G → ℤ`, realize its kernel as a
//! crystallographic group of one dimension less, and repeat.
//!
//! The kernel of `φ` consists of `(A(s), a_s + λ_s + l)` for `s` in
//! `D₀ = {s : d | φ(g_s)}`, with `f(λ_s) = −φ(g_s)` and `l ∈ L = ker f ∩ ℤᵏ`.
//! Projecting translations onto `L ⊗ ℚ` along a `D`-fixed line turns this
//! into an action on `L`, which is then written in a basis of `L`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::crystal::{build_group, AffineGen, CrystalGroup, GroupError};
use crate::invariants::abelianization;
use crate::linalg::{
    gcd_all, integer_kernel, row_lattice_basis, solve_integer_linear, solve_rational, IntMatrix,
    IntVector, RatVector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalabiError {
    #[error("group is not torsion-free: holonomy element {element} lifts to an element of order {order}")]
    NotTorsionFree { element: usize, order: u64 },
    #[error("invalid surjection: {0}")]
    InvalidSurjection(String),
    #[error(
        "projected translation of holonomy element {element} is not in the kernel lattice span"
    )]
    InvariantProjectionFailure { element: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A surjective homomorphism `φ: G → ℤ`, given by its values on the lattice
/// (`f`) and on the coset lifts `g_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectionToZ {
    pub f: IntVector,
    pub phi: Vec<BigInt>,
    /// `gcd(f)`, the index of `φ(ℤᵏ)` in `ℤ`.
    pub d: BigInt,
}

impl SurjectionToZ {
    /// Checks nonvanishing, surjectivity, invariance of `f`, and the
    /// homomorphism identity `φ(g_s) + φ(g_t) − φ(g_{st}) = f(τ(s,t))`.
    pub fn verify(&self, g: &CrystalGroup) -> Result<(), String> {
        let k = g.dim();
        let n = g.holonomy_order();
        if self.f.len() != k || self.phi.len() != n {
            return Err("shape does not match the group".into());
        }
        if self.f.iter().all(Zero::is_zero) {
            return Err("f vanishes".into());
        }
        if gcd_all(self.f.iter()) != self.d {
            return Err("d is not gcd(f)".into());
        }
        if !gcd_all(self.f.iter().chain(&self.phi)).is_one() {
            return Err("not surjective".into());
        }
        let fm = IntMatrix::from_rows(std::slice::from_ref(&self.f), k).expect("row");
        for h in g.holonomy() {
            if fm.mul(&h.matrix).expect("shapes") != fm {
                return Err(format!("f is not invariant under element {}", h.index));
            }
        }
        for s in 0..n {
            for t in 0..n {
                let st = g.multiply_index(s, t);
                let lhs = &self.phi[s] + &self.phi[t] - &self.phi[st];
                if lhs != dot(&self.f, g.cocycle().get(s, t)) {
                    return Err(format!("not a homomorphism at ({s},{t})"));
                }
            }
        }
        Ok(())
    }

    /// `φ((A(s), a_s + λ)) = φ(g_s) + f(λ)`.
    pub fn evaluate(&self, s: usize, lambda: &[BigInt]) -> BigInt {
        &self.phi[s] + dot(&self.f, lambda)
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Debug)]
pub struct CalabiStep {
    pub surjection: SurjectionToZ,
    pub kernel_group: CrystalGroup,
    /// Basis of `L = ker f ∩ ℤᵏ`, in Hermite normal form.
    pub sublattice_basis: Vec<IntVector>,
    /// Holonomy indices of `D₀`, sorted.
    pub d0: Vec<usize>,
    /// `(s, λ_s)` for each `s ∈ D₀`.
    pub lift_corrections: Vec<(usize, IntVector)>,
    /// Set when some nonidentity element of `D₀` acted trivially on `L` and
    /// the kernel lattice had to be enlarged.
    pub vasquez_fired: bool,
}

#[derive(Clone, Debug)]
pub struct PolyZSeries {
    pub steps: Vec<CalabiStep>,
}

impl PolyZSeries {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Clone, Debug)]
pub enum Decomposition {
    /// Reduction reached dimension 0.
    PolyZ(PolyZSeries),
    /// Reduction stopped at a stage with finite first homology.
    Core {
        chain: Vec<CalabiStep>,
        core: CrystalGroup,
    },
}

impl Decomposition {
    pub fn steps(&self) -> &[CalabiStep] {
        match self {
            Decomposition::PolyZ(s) => &s.steps,
            Decomposition::Core { chain, .. } => chain,
        }
    }

    /// Every group visited, starting with the input and ending with the
    /// dimension-0 group or the core.
    pub fn stages<'a>(&'a self, input: &'a CrystalGroup) -> Vec<&'a CrystalGroup> {
        std::iter::once(input)
            .chain(self.steps().iter().map(|s| &s.kernel_group))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ConnectivityReport {
    pub verdict: bool,
    pub decomposition: Decomposition,
}

impl ConnectivityReport {
    pub fn certificate(&self) -> Option<&PolyZSeries> {
        match &self.decomposition {
            Decomposition::PolyZ(s) => Some(s),
            Decomposition::Core { .. } => None,
        }
    }

    pub fn core(&self) -> Option<&CrystalGroup> {
        match &self.decomposition {
            Decomposition::PolyZ(_) => None,
            Decomposition::Core { core, .. } => Some(core),
        }
    }
}

/// A surjection `G → ℤ`, or `None` when `H₁(G,ℤ)` is finite.
///
/// Takes the first vector of the Hermite-normal basis of `Hom(G,ℤ)`, so the
/// choice depends only on the group data.
pub fn surjection_to_z(g: &CrystalGroup) -> Option<SurjectionToZ> {
    let ab = abelianization(g);
    let h = ab.free_homomorphisms().into_iter().next()?;
    let k = g.dim();
    let f = h[..k].to_vec();
    let phi = h[k..].to_vec();
    let d = gcd_all(f.iter());
    Some(SurjectionToZ { f, phi, d })
}

pub fn calabi_kernel(g: &CrystalGroup, phi: &SurjectionToZ) -> Result<CalabiStep, CalabiError> {
    phi.verify(g).map_err(CalabiError::InvalidSurjection)?;
    let k = g.dim();
    let n = g.holonomy_order();
    let f_row = IntMatrix::from_rows(std::slice::from_ref(&phi.f), k).expect("row");
    let basis = integer_kernel(&f_row);
    let b = IntMatrix::from_columns(&basis, k);

    let d0: Vec<usize> = (0..n)
        .filter(|&s| phi.phi[s].is_multiple_of(&phi.d))
        .collect();
    let mut lift_corrections = Vec::with_capacity(d0.len());
    for &s in &d0 {
        let sol = solve_integer_linear(&f_row, &[-&phi.phi[s]])
            .expect("shapes agree")
            .expect("d divides φ(g_s)");
        lift_corrections.push((s, sol.particular));
    }

    // E(x) = x − f(x)/f(w)·w with w the first coordinate vector f does not kill
    let j = phi.f.iter().position(|x| !x.is_zero()).expect("f ≠ 0");
    let fj = BigRational::from_integer(phi.f[j].clone());
    let project_once = |x: &RatVector| -> RatVector {
        let fx: BigRational = x
            .entries()
            .iter()
            .zip(&phi.f)
            .map(|(a, c)| a * BigRational::from_integer(c.clone()))
            .sum();
        let mut e = x.clone().into_entries();
        e[j] -= fx / &fj;
        RatVector::new(e)
    };
    // P = (1/|D|) Σ A(s) E A(s)⁻¹, a D-equivariant projection onto L ⊗ ℚ
    let scale = BigRational::new(BigInt::one(), BigInt::from(n));
    let project = |x: &RatVector| -> RatVector {
        let mut acc = RatVector::zeros(k);
        for s in 0..n {
            let inv = &g.element(g.inverse_index(s)).matrix;
            let y = project_once(&inv.mul_rat_vec(x).expect("square"));
            acc = acc.add(&g.element(s).matrix.mul_rat_vec(&y).expect("square"));
        }
        acc.scale(&scale)
    };

    let mut gens = Vec::with_capacity(d0.len());
    for (s, lambda) in &lift_corrections {
        let h = g.element(*s);
        let moved = project(&h.translation.add_int(lambda));
        let coords = solve_rational(&b, &moved)
            .expect("shapes agree")
            .ok_or(CalabiError::InvariantProjectionFailure { element: *s })?;
        let ab = h.matrix.mul(&b).expect("shapes");
        let restricted = solve_columns(&b, &ab);
        gens.push(AffineGen::new(restricted, coords)?);
    }

    let (gens, vasquez_fired) = standardize(k - 1, gens);
    let name = format!("{}/ker", g.name());
    let kernel_group = build_group(k - 1, gens, &name)?;
    Ok(CalabiStep {
        surjection: phi.clone(),
        kernel_group,
        sublattice_basis: basis,
        d0,
        lift_corrections,
        vasquez_fired,
    })
}

/// `X` with `B·X = M`, for `B` of full column rank and `M` with columns in
/// the column lattice of `B`.
fn solve_columns(b: &IntMatrix, m: &IntMatrix) -> IntMatrix {
    let cols: Vec<IntVector> = (0..m.cols())
        .map(|c| {
            solve_integer_linear(b, &m.column(c))
                .expect("shapes agree")
                .expect("L is invariant")
                .particular
        })
        .collect();
    IntMatrix::from_columns(&cols, b.cols())
}

/// If a nonidentity linear part is the identity, its translation is a
/// missing lattice vector: enlarge the lattice to include every such
/// translation and rewrite all generators in a basis of the enlarged lattice.
pub(crate) fn standardize(dim: usize, gens: Vec<AffineGen>) -> (Vec<AffineGen>, bool) {
    let extra: Vec<&RatVector> = gens
        .iter()
        .filter(|g| g.matrix().is_identity() && !g.translation().is_integral())
        .map(|g| g.translation())
        .collect();
    if extra.is_empty() {
        return (gens, false);
    }
    let den = extra
        .iter()
        .fold(BigInt::one(), |acc, t| acc.lcm(&t.common_denominator()));
    let mut rows: Vec<IntVector> = (0..dim)
        .map(|i| {
            let mut r = vec![BigInt::zero(); dim];
            r[i] = den.clone();
            r
        })
        .collect();
    for t in &extra {
        rows.push(
            t.entries()
                .iter()
                .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        );
    }
    // new basis C (columns) spans the enlarged lattice, scaled by den
    let scaled = row_lattice_basis(&IntMatrix::from_rows(&rows, dim).expect("uniform"));
    let c = IntMatrix::from_columns(&scaled, dim);
    let den_q = BigRational::from_integer(den.clone());
    let to_new = |v: &RatVector| -> RatVector {
        solve_rational(&c, &v.scale(&den_q))
            .expect("shapes")
            .expect("full rank")
    };
    let out = gens
        .iter()
        .map(|g| {
            // C⁻¹ A C is integral because the enlarged lattice is invariant
            let ac = g.matrix().mul(&c).expect("shapes");
            let m = solve_columns(&c, &ac);
            AffineGen::new(m, to_new(g.translation())).expect("conjugate of a unimodular map")
        })
        .collect();
    (out, true)
}

/// Repeats [`surjection_to_z`] and [`calabi_kernel`] until dimension 0 or a
/// stage with finite first homology.
pub fn decompose(g: &CrystalGroup) -> Result<Decomposition, CalabiError> {
    if let Some(w) = g.torsion_witness() {
        return Err(CalabiError::NotTorsionFree {
            element: w.element,
            order: w.order,
        });
    }
    let mut chain = Vec::new();
    let mut current = g.clone();
    while current.dim() > 0 {
        let Some(phi) = surjection_to_z(&current) else {
            return Ok(Decomposition::Core {
                chain,
                core: current,
            });
        };
        let step = calabi_kernel(&current, &phi)?;
        current = step.kernel_group.clone();
        chain.push(step);
    }
    Ok(Decomposition::PolyZ(PolyZSeries { steps: chain }))
}

pub fn is_connective(g: &CrystalGroup) -> Result<ConnectivityReport, CalabiError> {
    let decomposition = decompose(g)?;
    Ok(ConnectivityReport {
        verdict: matches!(decomposition, Decomposition::PolyZ(_)),
        decomposition,
    })
}
