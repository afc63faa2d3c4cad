//! Inputs shared by the benchmarks in `benches/`.

use bieberbach::{catalog, CrystalGroup, IntMatrix};

/// Catalog groups of dimension 3, the sizes most analyses run at.
pub fn dim3_groups() -> Vec<CrystalGroup> {
    catalog::list()
        .into_iter()
        .filter(|e| e.group.dim() == 3)
        .map(|e| e.group)
        .collect()
}

/// A dense `n × n` matrix with small entries and no obvious structure.
pub fn dense_matrix(n: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ((i * i * 7 + j * 13 + i * j * 5 + 3) % 11) as i64 - 5)
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows, n).expect("square")
}
