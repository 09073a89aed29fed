//! Fixed inputs shared by the benchmarks.

use glmn_core::weight::principal_weight;
use glmn_core::{SuperParams, Weight};

/// A deterministic spread of dominant weights of `gl(m|n)` with coefficients in `[-r, r]`.
pub fn weight_family(m: usize, n: usize, r: i64, count: usize) -> Vec<Weight> {
    let params = SuperParams::new(m, n).expect("valid params");
    let span = 2 * r + 1;
    (0..count as i64)
        .map(|s| {
            let mut c: Vec<i64> = (0..(m + n) as i64).map(|i| (s * 7 + i * 13) % span - r).collect();
            c[..m].sort_unstable_by(|a, b| b.cmp(a));
            c[m..].sort_unstable_by(|a, b| b.cmp(a));
            Weight::new(params, c).expect("m+n coefficients")
        })
        .collect()
}

/// Principal-block weights `(x | -x_rev)` of `gl(k|k)`.
pub fn principal_family(k: usize, r: i64, count: usize) -> Vec<Weight> {
    let span = 2 * r + 1;
    (0..count as i64)
        .map(|s| {
            let mut x: Vec<i64> = (0..k as i64).map(|i| (s * 5 + i * 11) % span - r).collect();
            x.sort_unstable_by(|a, b| b.cmp(a));
            principal_weight(&x).expect("principal weight")
        })
        .collect()
}
