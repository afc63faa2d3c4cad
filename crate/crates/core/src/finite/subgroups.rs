use std::collections::BTreeSet;

use super::{is_prime, FiniteGroup, FiniteGroupError};

/// A subgroup, stored as the sorted list of its element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&g| other.contains(g))
                .collect(),
        }
    }
}

/// Evidence that a group is not primitive: a cyclic Sylow subgroup together
/// with a normal complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPrimitivityWitness {
    pub prime: usize,
    pub sylow: Subgroup,
    pub complement: Subgroup,
}

impl FiniteGroup {
    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[self.identity()] = true;
        let mut list = vec![self.identity()];
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let p = self.mul(list[i], g);
                if !seen[p] {
                    seen[p] = true;
                    list.push(p);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Subgroup { elements: list }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: vec![self.identity()],
        }
    }

    /// Checks closure under multiplication; the identity is implied for
    /// nonempty subsets of a finite group.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup, FiniteGroupError> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let h = Subgroup { elements };
        if h.elements.is_empty() || h.elements.iter().any(|&g| g >= self.order()) {
            return Err(FiniteGroupError::PreconditionViolation(
                "not a subset of the group".into(),
            ));
        }
        for &a in &h.elements {
            for &b in &h.elements {
                if !h.contains(self.mul(a, b)) {
                    return Err(FiniteGroupError::PreconditionViolation(
                        "subset is not closed under multiplication".into(),
                    ));
                }
            }
        }
        Ok(h)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.order()).all(|g| {
            let gi = self.inv(g);
            h.elements
                .iter()
                .all(|&x| h.contains(self.mul(self.mul(g, x), gi)))
        })
    }

    /// `H` re-indexed as a standalone group, element `i` = `H.elements()[i]`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let pos = |g: usize| h.elements.binary_search(&g).expect("closed subgroup");
        let table = h
            .elements
            .iter()
            .map(|&a| h.elements.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        FiniteGroup::from_table(table)
            .expect("subgroup tables are group laws")
            .with_order_budget(self.budget)
    }

    pub fn cyclic_subgroups(&self) -> BTreeSet<Subgroup> {
        (0..self.order()).map(|g| self.generate(&[g])).collect()
    }

    /// Every subgroup, by joining with cyclic subgroups until nothing new appears.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>, FiniteGroupError> {
        self.check_budget()?;
        let cyclic: Vec<Subgroup> = self.cyclic_subgroups().into_iter().collect();
        let generators: Vec<usize> = cyclic
            .iter()
            .map(|c| {
                *c.elements
                    .iter()
                    .find(|&&g| self.element_order(g) == c.order())
                    .expect("cyclic subgroup has a generator")
            })
            .collect();
        let mut found: BTreeSet<Subgroup> = cyclic.iter().cloned().collect();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for &g in &generators {
                    if h.contains(g) {
                        continue;
                    }
                    let mut gens = h.elements.clone();
                    gens.push(g);
                    let j = self.generate(&gens);
                    if found.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        Ok(found.into_iter().collect())
    }

    /// Normal subgroups, ordered by size then lexicographically.
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>, FiniteGroupError> {
        let mut out: Vec<Subgroup> = self
            .all_subgroups()?
            .into_iter()
            .filter(|h| self.is_normal(h))
            .collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// A Sylow `p`-subgroup, grown greedily from the identity through
    /// `p`-power-order elements.
    pub fn sylow_subgroup(&self, p: usize) -> Result<Subgroup, FiniteGroupError> {
        if !is_prime(p) {
            return Err(FiniteGroupError::NotPrime { p });
        }
        if !self.order().is_multiple_of(p) {
            return Err(FiniteGroupError::PrimeDoesNotDivide {
                p,
                order: self.order(),
            });
        }
        let target = self.p_part(p);
        let is_p_power = |mut k: usize| {
            while k.is_multiple_of(p) {
                k /= p;
            }
            k == 1
        };
        let mut h = self.trivial_subgroup();
        // A proper p-subgroup of a Sylow P is proper in its normalizer in P,
        // so some p-element extends it; the loop never stalls.
        while h.order() < target {
            let mut grown = false;
            for g in 0..self.order() {
                if h.contains(g) || !is_p_power(self.element_order(g)) {
                    continue;
                }
                let mut gens = h.elements.clone();
                gens.push(g);
                let j = self.generate(&gens);
                if is_p_power(j.order()) {
                    h = j;
                    grown = true;
                    break;
                }
            }
            if !grown {
                return Err(FiniteGroupError::PreconditionViolation(format!(
                    "greedy growth stalled at a {p}-subgroup of order {}",
                    h.order()
                )));
            }
        }
        Ok(h)
    }

    /// First normal subgroup `N` with `N ∩ H = 1` and `|N|·|H| = |D|`.
    pub fn normal_complement(&self, h: &Subgroup) -> Result<Option<Subgroup>, FiniteGroupError> {
        if !self.order().is_multiple_of(h.order()) {
            return Ok(None);
        }
        let want = self.order() / h.order();
        Ok(self
            .normal_subgroups()?
            .into_iter()
            .find(|n| n.order() == want && n.intersection(h).is_trivial()))
    }

    pub fn has_normal_complement(&self, h: &Subgroup) -> Result<bool, FiniteGroupError> {
        Ok(self.normal_complement(h)?.is_some())
    }

    /// Smallest prime `p` whose Sylow subgroup is cyclic and has a normal complement.
    pub fn primitivity_witness(&self) -> Result<Option<NonPrimitivityWitness>, FiniteGroupError> {
        self.check_budget()?;
        for p in self.prime_divisors() {
            let sylow = self.sylow_subgroup(p)?;
            if !self.subgroup_as_group(&sylow).is_cyclic() {
                continue;
            }
            if let Some(complement) = self.normal_complement(&sylow)? {
                return Ok(Some(NonPrimitivityWitness {
                    prime: p,
                    sylow,
                    complement,
                }));
            }
        }
        Ok(None)
    }

    /// Whether the group admits no nontrivial cyclic quotient of prime-power
    /// order coming from a Sylow subgroup. The trivial group is not primitive.
    ///
    /// Checked two ways (normal complements of cyclic Sylow subgroups, and
    /// normal subgroups with cyclic quotient of full `p`-part order); a
    /// mismatch is reported as an error.
    pub fn is_primitive(&self) -> Result<bool, FiniteGroupError> {
        self.check_budget()?;
        if self.order() == 1 {
            return Ok(false);
        }
        let complement = self.primitivity_witness()?.is_none();
        let quotient = !self.has_full_p_cyclic_quotient()?;
        if complement != quotient {
            return Err(FiniteGroupError::CriteriaDisagree {
                complement,
                quotient,
            });
        }
        Ok(complement)
    }

    fn has_full_p_cyclic_quotient(&self) -> Result<bool, FiniteGroupError> {
        let normals = self.normal_subgroups()?;
        for p in self.prime_divisors() {
            let q = self.p_part(p);
            for m in normals.iter().filter(|m| m.order() * q == self.order()) {
                if self.quotient_is_cyclic(m) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// For normal `M`, whether `D/M` is cyclic.
    pub fn quotient_is_cyclic(&self, m: &Subgroup) -> bool {
        let q = self.order() / m.order();
        (0..self.order()).any(|g| {
            let mut k = 1;
            let mut p = g;
            while !m.contains(p) {
                p = self.mul(p, g);
                k += 1;
            }
            k == q
        })
    }

    /// Coset label of `g` modulo normal `M`: the least element of `gM`.
    pub(crate) fn coset_label(&self, m: &Subgroup, g: usize) -> usize {
        m.elements
            .iter()
            .map(|&x| self.mul(g, x))
            .min()
            .expect("nonempty subgroup")
    }
}
