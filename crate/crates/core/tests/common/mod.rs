#![allow(dead_code)]

//! Test-only oracles. None of these call into the library's linear algebra.

use bieberbach::{build_group, AffineGen, CrystalGroup, IntMatrix, RatVector};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

pub type Matrix = Vec<Vec<i64>>;

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}

/// Laplace expansion, exact over i128.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    if n < r {
        return vec![];
    }
    let mut out = combinations(n - 1, r);
    for mut c in combinations(n - 1, r - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all `r × r` minors (0 when they all vanish).
pub fn minor_gcd(m: &[Vec<i64>], r: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0i128;
    for rs in combinations(rows, r) {
        for cs in combinations(cols, r) {
            let sub: Vec<Vec<i128>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| i128::from(m[i][j])).collect())
                .collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

/// Invariant factors from determinantal divisors: `dᵢ = gᵢ / gᵢ₋₁`.
pub fn smith_oracle(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for r in 1..=rows.min(cols) {
        let g = minor_gcd(m, r);
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

pub fn rank_oracle(m: &[Vec<i64>]) -> usize {
    smith_oracle(m).len()
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn int_matrix(m: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(m, cols).unwrap()
}

pub fn signed_permutation(rng: &mut impl Rng, k: usize) -> Vec<Vec<i64>> {
    let mut perm: Vec<usize> = (0..k).collect();
    for i in (1..k).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut m = vec![vec![0i64; k]; k];
    for (i, &p) in perm.iter().enumerate() {
        m[i][p] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    m
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

/// Order of the matrix group generated by `gens`, or `None` above `cap`.
pub fn matrix_group_order(gens: &[Vec<Vec<i64>>], cap: usize) -> Option<usize> {
    let k = gens[0].len();
    let id: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = mat_mul(&elems[i], g);
            if !elems.contains(&p) {
                elems.push(p);
                if elems.len() > cap {
                    return None;
                }
            }
        }
        i += 1;
    }
    Some(elems.len())
}

/// A symmorphic group whose holonomy is a random signed-permutation group of
/// order at most `max_order`, in a dimension drawn from `dims`.
pub fn random_signed_permutation_group(
    rng: &mut impl Rng,
    dims: std::ops::RangeInclusive<usize>,
    max_order: usize,
) -> CrystalGroup {
    loop {
        let k = rng.gen_range(dims.clone());
        let count = rng.gen_range(1..=2);
        let gens: Vec<Vec<Vec<i64>>> = (0..count).map(|_| signed_permutation(rng, k)).collect();
        if matrix_group_order(&gens, max_order).is_none() {
            continue;
        }
        let affine = gens
            .iter()
            .map(|m| AffineGen::new(int_matrix(m, k), RatVector::zeros(k)).unwrap())
            .collect();
        return build_group(k, affine, "random").unwrap();
    }
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Holonomy matrices and coset translations scaled to a common denominator:
/// `(A(s), a_s·den)` as machine integers.
pub fn holonomy_data(g: &CrystalGroup) -> (Vec<Matrix>, i64, Vec<Vec<i64>>) {
    let den = g.holonomy().iter().fold(BigInt::from(1), |acc, h| {
        acc.lcm(&h.translation.common_denominator())
    });
    let den_i = i64::try_from(&den).unwrap();
    let mats = g.holonomy().iter().map(|h| to_i64(&h.matrix)).collect();
    let trans = g
        .holonomy()
        .iter()
        .map(|h| {
            h.translation
                .entries()
                .iter()
                .map(|x| {
                    let y = x * num_rational::BigRational::from_integer(den.clone());
                    i64::try_from(&y.to_integer()).unwrap()
                })
                .collect()
        })
        .collect();
    (mats, den_i, trans)
}

/// `|Hom(G, ℤ/n)|` by exhaustive search over values on the lattice basis and
/// on every coset lift. Uses only the group law of affine maps, recomputing
/// the cocycle from the holonomy data.
pub fn hom_count(g: &CrystalGroup, n: i64) -> u64 {
    let k = g.dim();
    let order = g.holonomy_order();
    let (mats, den, trans) = holonomy_data(g);
    // τ(s,t) = A(s) a_t + a_s − a_{st}, over the integers after scaling
    let mut st = vec![vec![0usize; order]; order];
    let mut tau = vec![vec![vec![0i64; k]; order]; order];
    for s in 0..order {
        for t in 0..order {
            let prod = mat_mul(&mats[s], &mats[t]);
            let u = mats.iter().position(|m| *m == prod).unwrap();
            st[s][t] = u;
            for i in 0..k {
                let v: i64 = (0..k).map(|j| mats[s][i][j] * trans[t][j]).sum::<i64>() + trans[s][i]
                    - trans[u][i];
                assert_eq!(v % den, 0);
                tau[s][t][i] = v / den;
            }
        }
    }
    let identity = mats
        .iter()
        .position(|m| (0..k).all(|i| (0..k).all(|j| m[i][j] == i64::from(i == j))))
        .unwrap();
    let mut count = 0u64;
    let mut f = vec![0i64; k];
    loop {
        let invariant = mats.iter().all(|a| {
            (0..k).all(|j| {
                let fa: i64 = (0..k).map(|i| f[i] * a[i][j]).sum();
                (fa - f[j]).rem_euclid(n) == 0
            })
        });
        if invariant {
            let mut c = vec![0i64; order];
            count += count_lifts(&f, &mut c, 0, identity, &st, &tau, n);
        }
        if !odometer(&mut f, n) {
            break;
        }
    }
    count
}

fn count_lifts(
    f: &[i64],
    c: &mut Vec<i64>,
    i: usize,
    identity: usize,
    st: &[Vec<usize>],
    tau: &[Vec<Vec<i64>>],
    n: i64,
) -> u64 {
    let order = c.len();
    if i == order {
        let ok = (0..order).all(|s| {
            (0..order).all(|t| {
                let ft: i64 = f.iter().zip(&tau[s][t]).map(|(a, b)| a * b).sum();
                (c[s] + c[t] - c[st[s][t]] - ft).rem_euclid(n) == 0
            })
        });
        return u64::from(ok);
    }
    if i == identity {
        c[i] = 0;
        return count_lifts(f, c, i + 1, identity, st, tau, n);
    }
    (0..n)
        .map(|v| {
            c[i] = v;
            count_lifts(f, c, i + 1, identity, st, tau, n)
        })
        .sum()
}

/// Increments `v` as a base-`n` counter; false after wrapping to zero.
pub fn odometer(v: &mut [i64], n: i64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < n {
            return true;
        }
        *x = 0;
    }
    false
}

/// `|Hom(ℤ^r ⊕ ⊕ ℤ/dᵢ, ℤ/n)|`.
pub fn predicted_hom_count(rank: usize, torsion: &[BigInt], n: i64) -> u64 {
    let mut c = (n as u64).pow(rank as u32);
    for d in torsion {
        let d = i64::try_from(d).unwrap();
        c *= d.gcd(&n) as u64;
    }
    c
}

/// Number of `χ ∈ ((1/q)ℤ/ℤ)ᵏ` fixed by every `A(s)ᵀ`.
pub fn fixed_grid_count(g: &CrystalGroup, q: i64) -> u64 {
    let k = g.dim();
    let (mats, _, _) = holonomy_data(g);
    let mut v = vec![0i64; k];
    let mut count = 0;
    loop {
        let fixed = mats.iter().all(|a| {
            (0..k).all(|i| {
                let w: i64 = (0..k).map(|j| a[j][i] * v[j]).sum();
                (w - v[i]).rem_euclid(q) == 0
            })
        });
        count += u64::from(fixed);
        if !odometer(&mut v, q) {
            break;
        }
    }
    count
}

/// Brute-force torsion search: some `(A(s), a_s + λ)`, `λ ∈ [−r, r]ᵏ`, `s ≠ e`,
/// has a power (up to `|D|`) equal to the identity.
pub fn has_torsion_brute_force(g: &CrystalGroup, r: i64) -> bool {
    let k = g.dim();
    let order = g.holonomy_order() as u64;
    for h in g.holonomy().iter().filter(|h| !h.matrix.is_identity()) {
        let mut lam = vec![-r; k];
        loop {
            let elem = AffineGen::new(h.matrix.clone(), h.translation.add_int(&big(&lam))).unwrap();
            let mut p = elem.clone();
            for _ in 1..order {
                p = p.multiply(&elem).unwrap();
                if p.is_identity() {
                    return true;
                }
            }
            // shift the counter range [-r, r] through [0, 2r]
            let mut shifted: Vec<i64> = lam.iter().map(|x| x + r).collect();
            if !odometer(&mut shifted, 2 * r + 1) {
                break;
            }
            lam = shifted.iter().map(|x| x - r).collect();
        }
    }
    false
}

/// Named finite groups of order at most 24: cyclic groups, products of two
/// cyclic groups, every `ℤ/m ⋊_r ℤ/n`, and a few permutation groups.
pub fn finite_corpus() -> Vec<(String, bieberbach::FiniteGroup)> {
    use bieberbach::FiniteGroup;
    let mut out = Vec::new();
    for n in 1..=24 {
        out.push((format!("Z/{n}"), FiniteGroup::cyclic(n)));
    }
    for a in 2..=12 {
        for b in a..=12 {
            if a * b <= 24 {
                out.push((
                    format!("Z/{a} x Z/{b}"),
                    FiniteGroup::direct_product(&FiniteGroup::cyclic(a), &FiniteGroup::cyclic(b)),
                ));
            }
        }
    }
    for m in 2..=12 {
        for n in 2..=12 {
            if m * n > 24 {
                continue;
            }
            for r in 2..m {
                if let Ok(g) = FiniteGroup::semidirect_cyclic(m, n, r) {
                    out.push((format!("Z/{m} x|{r} Z/{n}"), g));
                }
            }
        }
    }
    let perms: [(&str, Vec<Vec<usize>>); 3] = [
        ("S4", vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
        ("A4", vec![vec![1, 2, 0, 3], vec![0, 2, 3, 1]]),
        (
            "Q8",
            vec![vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]],
        ),
    ];
    for (name, gens) in perms {
        out.push((
            name.to_string(),
            FiniteGroup::from_permutations(&gens).unwrap(),
        ));
    }
    out.push((
        "Z/2 x Z/2 x Z/2".into(),
        FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        ),
    ));
    out.push((
        "S3 x Z/2".into(),
        FiniteGroup::direct_product(
            &FiniteGroup::semidirect_cyclic(3, 2, 2).unwrap(),
            &FiniteGroup::cyclic(2),
        ),
    ));
    out
}

/// Every subgroup by checking all subsets containing the identity.
pub fn subgroups_by_subsets(g: &bieberbach::FiniteGroup) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let e = g.identity();
    (0u32..(1 << n))
        .filter(|mask| mask >> e & 1 == 1)
        .filter(|mask| {
            (0..n).all(|a| {
                mask >> a & 1 == 0
                    || (0..n).all(|b| mask >> b & 1 == 0 || mask >> g.mul(a, b) & 1 == 1)
            })
        })
        .count()
}
