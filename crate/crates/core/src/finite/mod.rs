//! Finite groups given by multiplication tables.
//!
//! Sized for holonomy groups: everything is brute force over the table, and
//! the subgroup-lattice operations refuse groups above an order budget.

mod coprime;
mod subgroups;

pub use coprime::{CoprimeTree, SplitCheck, SplitReport};
pub use subgroups::{NonPrimitivityWitness, Subgroup};

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::crystal::CrystalGroup;
use crate::linalg::{smith_right_only, IntMatrix};

/// Default largest order accepted by subgroup enumeration.
pub const DEFAULT_ORDER_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteGroupError {
    #[error("group of order {order} exceeds the order budget {budget}")]
    OrderBudgetExceeded { order: usize, budget: usize },
    #[error("{p} is not a prime")]
    NotPrime { p: usize },
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: usize, order: usize },
    #[error("table is not a group law: {0}")]
    NotAGroup(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error(
        "primitivity criteria disagree (normal complement: {complement}, quotient: {quotient})"
    )]
    CriteriaDisagree { complement: bool, quotient: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    matrices: Option<Vec<IntMatrix>>,
    budget: usize,
}

impl FiniteGroup {
    /// Validates the group axioms on `table` (associativity checked exhaustively).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, FiniteGroupError> {
        let n = table.len();
        if n == 0 {
            return Err(FiniteGroupError::NotAGroup("empty table".into()));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(FiniteGroupError::NotAGroup(
                "table is not n x n over 0..n".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| FiniteGroupError::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for (g, row) in table.iter().enumerate() {
            let inv = (0..n)
                .find(|&h| row[h] == identity && table[h][g] == identity)
                .ok_or_else(|| FiniteGroupError::NotAGroup(format!("{g} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(FiniteGroupError::NotAGroup(format!(
                            "({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
        let orders = (0..n)
            .map(|g| {
                let mut k = 1;
                let mut p = g;
                while p != identity {
                    p = table[p][g];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Self {
            table,
            identity,
            inverse,
            orders,
            matrices: None,
            budget: DEFAULT_ORDER_BUDGET,
        })
    }

    /// Multiplication table of the holonomy of `g`, element `i` = holonomy element `i`.
    pub fn from_holonomy(g: &CrystalGroup) -> Self {
        let mut fg = Self::from_table(g.multiplication_table().to_vec())
            .expect("holonomy tables are group laws");
        fg.matrices = Some(g.holonomy().iter().map(|h| h.matrix.clone()).collect());
        fg
    }

    /// Closure of permutations of `0..degree` under composition.
    /// `(p*q)(i) = p(q(i))`.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self, FiniteGroupError> {
        let degree = gens.first().map_or(0, Vec::len);
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                if g.len() != degree {
                    return Err(FiniteGroupError::NotAGroup(
                        "permutation degree mismatch".into(),
                    ));
                }
                let p: Vec<usize> = (0..degree).map(|x| elems[i][g[x]]).collect();
                if !elems.contains(&p) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).expect("closed");
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| index(&(0..degree).map(|x| a[b[x]]).collect()))
                    .collect()
            })
            .collect();
        Self::from_table(table)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_table(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
        .expect("cyclic group")
    }

    /// `ℤ/m ⋊ ℤ/n` where the generator of `ℤ/n` acts by multiplication by `r`
    /// (requires `rⁿ ≡ 1 mod m`). Element `(x, y)` has index `x + m·y`.
    pub fn semidirect_cyclic(m: usize, n: usize, r: usize) -> Result<Self, FiniteGroupError> {
        let pow = |y: usize| (0..y).fold(1 % m, |acc, _| acc * r % m);
        if pow(n) != 1 % m {
            return Err(FiniteGroupError::PreconditionViolation(format!(
                "{r}^{n} is not 1 mod {m}"
            )));
        }
        let table = (0..m * n)
            .map(|a| {
                let (x1, y1) = (a % m, a / m);
                (0..m * n)
                    .map(|b| {
                        let (x2, y2) = (b % m, b / m);
                        let x = (x1 + pow(y1) * x2) % m;
                        let y = (y1 + y2) % n;
                        x + m * y
                    })
                    .collect()
            })
            .collect();
        Self::from_table(table)
    }

    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (na, nb) = (a.order(), b.order());
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x % na, y % na) + na * b.mul(x / na, y / na))
                    .collect()
            })
            .collect();
        Self::from_table(table).expect("product of groups")
    }

    pub fn with_order_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn matrices(&self) -> Option<&[IntMatrix]> {
        self.matrices.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order())
    }

    pub(crate) fn check_budget(&self) -> Result<(), FiniteGroupError> {
        if self.order() > self.budget {
            Err(FiniteGroupError::OrderBudgetExceeded {
                order: self.order(),
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Invariant factors of an abelian group, computed from the Smith form of
    /// the table relations `x_a + x_b − x_{ab}`. `None` when nonabelian.
    pub fn abelian_invariants(&self) -> Option<Vec<BigInt>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order();
        let mut rows = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![BigInt::from(0); n];
                row[a] += 1;
                row[b] += 1;
                row[self.table[a][b]] -= 1;
                rows.push(row);
            }
        }
        let m = IntMatrix::from_rows(&rows, n).expect("uniform");
        let basis = crate::linalg::row_lattice_basis(&m);
        let reduced = IntMatrix::from_rows(&basis, n).expect("uniform");
        Some(
            smith_right_only(&reduced)
                .divisors
                .into_iter()
                .filter(|d| *d > BigInt::from(1))
                .collect(),
        )
    }

    /// Short structure label: `1`, `Z/4`, `Z/2 + Z/2`, or `nonabelian(n)`.
    pub fn structure_id(&self) -> String {
        match self.abelian_invariants() {
            Some(inv) if inv.is_empty() => "1".into(),
            Some(inv) => inv
                .iter()
                .map(|d| format!("Z/{d}"))
                .collect::<Vec<_>>()
                .join(" + "),
            None => format!("nonabelian({})", self.order()),
        }
    }

    /// Primes dividing the order, ascending.
    pub fn prime_divisors(&self) -> Vec<usize> {
        let mut n = self.order();
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                out.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    /// Largest power of `p` dividing the order.
    pub fn p_part(&self, p: usize) -> usize {
        let mut n = self.order();
        let mut q = 1;
        while n.is_multiple_of(p) {
            n /= p;
            q *= p;
        }
        q
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub(crate) fn coprime(a: usize, b: usize) -> bool {
    a.gcd(&b) == 1
}
