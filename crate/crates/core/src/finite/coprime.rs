use std::collections::BTreeSet;

use super::{coprime, FiniteGroup, FiniteGroupError, Subgroup};

/// Decomposition `D = K ⋊ C` with `C` cyclic and `gcd(|K|, |C|) = 1`,
/// recursing into `K` until a cyclic group remains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoprimeTree {
    Leaf {
        order: usize,
    },
    Node {
        normal: Box<CoprimeTree>,
        complement_order: usize,
    },
}

impl CoprimeTree {
    /// Orders `m₁, …, m_r` of the cyclic factors, innermost first.
    pub fn factor_orders(&self) -> Vec<usize> {
        match self {
            CoprimeTree::Leaf { order } => vec![*order],
            CoprimeTree::Node {
                normal,
                complement_order,
            } => {
                let mut v = normal.factor_orders();
                v.push(*complement_order);
                v
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CoprimeTree::Leaf { .. } => 0,
            CoprimeTree::Node { normal, .. } => 1 + normal.depth(),
        }
    }
}

/// Outcome of the decomposition checks for one normal subgroup `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    pub normal_order: usize,
    /// `D/M = π(K)·π(C)` with `π(K) ∩ π(C)` trivial.
    pub quotient_splits: bool,
    /// `M = (M∩K)·(M∩C)`.
    pub subgroup_splits: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub checks: Vec<SplitCheck>,
}

impl SplitReport {
    pub fn all_hold(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.quotient_splits && c.subgroup_splits)
    }
}

impl FiniteGroup {
    /// A coprime decomposition tree, or `None` when the group is not in the class.
    pub fn in_coprime_class(&self) -> Result<Option<CoprimeTree>, FiniteGroupError> {
        self.check_budget()?;
        if self.is_cyclic() {
            return Ok(Some(CoprimeTree::Leaf {
                order: self.order(),
            }));
        }
        let n = self.order();
        let cyclic: BTreeSet<Subgroup> = self.cyclic_subgroups();
        for k in self.normal_subgroups()? {
            if k.is_trivial() || k.order() == n {
                continue;
            }
            let c_order = n / k.order();
            if !coprime(k.order(), c_order) {
                continue;
            }
            let has_complement = cyclic
                .iter()
                .any(|c| c.order() == c_order && c.intersection(&k).is_trivial());
            if !has_complement {
                continue;
            }
            if let Some(inner) = self.subgroup_as_group(&k).in_coprime_class()? {
                return Ok(Some(CoprimeTree::Node {
                    normal: Box::new(inner),
                    complement_order: c_order,
                }));
            }
        }
        Ok(None)
    }

    /// For `D = K ⋊ C` with coprime orders, checks over every normal `M` that
    /// both `D/M` and `M` decompose compatibly.
    pub fn coprime_split_properties(
        &self,
        k: &Subgroup,
        c: &Subgroup,
    ) -> Result<SplitReport, FiniteGroupError> {
        let n = self.order();
        if !self.is_normal(k) {
            return Err(FiniteGroupError::PreconditionViolation(
                "K is not normal".into(),
            ));
        }
        if k.order() * c.order() != n || !k.intersection(c).is_trivial() {
            return Err(FiniteGroupError::PreconditionViolation(
                "K and C are not complementary".into(),
            ));
        }
        if !coprime(k.order(), c.order()) {
            return Err(FiniteGroupError::PreconditionViolation(format!(
                "|K| = {} and |C| = {} are not coprime",
                k.order(),
                c.order()
            )));
        }
        let mut checks = Vec::new();
        for m in self.normal_subgroups()? {
            let image = |h: &Subgroup| -> BTreeSet<usize> {
                h.elements()
                    .iter()
                    .map(|&g| self.coset_label(&m, g))
                    .collect()
            };
            let (pk, pc) = (image(k), image(c));
            let quotient_order = n / m.order();
            let quotient_splits =
                pk.intersection(&pc).count() == 1 && pk.len() * pc.len() == quotient_order;

            let (mk, mc) = (m.intersection(k), m.intersection(c));
            let product: BTreeSet<usize> = mk
                .elements()
                .iter()
                .flat_map(|&x| mc.elements().iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .collect();
            let subgroup_splits =
                product.len() == m.order() && product.iter().all(|&g| m.contains(g));
            checks.push(SplitCheck {
                normal_order: m.order(),
                quotient_splits,
                subgroup_splits,
            });
        }
        Ok(SplitReport { checks })
    }
}
