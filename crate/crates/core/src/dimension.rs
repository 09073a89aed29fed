//! Weyl dimensions of `g_0`-simples, projective-cover bounds, partition
//! counts and the degree constraints on `Ext` from Kac modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{
    bruhat_leq_principal, is_dominant, is_principal_block, length, naive_length, pair_with_root,
    positive_roots_m, positive_roots_n, rho_m, rho_n, SuperParams, Weight,
};

/// Largest `k` accepted by [`cauchy_symmetric_decomposition`].
pub const CAUCHY_MAX_K: usize = 4;
/// Largest degree accepted by [`cauchy_symmetric_decomposition`].
pub const CAUCHY_MAX_D: usize = 30;

fn require_dominant(mu: &Weight) -> Result<()> {
    if is_dominant(mu) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{mu} is not dominant")))
    }
}

/// `dim L_0(μ)` for `g_0 = gl(m) ⊕ gl(n)`, as one exact rational product.
pub fn weyl_dim_g0(mu: &Weight) -> Result<BigUint> {
    require_dominant(mu)?;
    let p = mu.params();
    let mut acc = BigRational::one();
    for (roots, shift) in [(positive_roots_m(p), rho_m(p)), (positive_roots_n(p), rho_n(p))] {
        let shifted = mu.add(&shift)?;
        for r in roots {
            let num = pair_with_root(&shifted, r);
            let den = pair_with_root(&shift, r);
            acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
    }
    if !acc.is_integer() || !acc.is_positive() {
        return Err(Error::Internal(format!(
            "Weyl quotient for {mu} is {acc}, not a positive integer"
        )));
    }
    Ok(acc.to_integer().magnitude().clone())
}

/// Bounds serialize as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimBound {
    #[serde(with = "decimal")]
    pub lower: BigUint,
    #[serde(with = "decimal")]
    pub upper: BigUint,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

impl DimBound {
    pub fn contains(&self, dim: &BigUint) -> bool {
        &self.lower <= dim && dim <= &self.upper
    }
}

/// `dim L_0(μ) ≤ dim P(μ) ≤ 2^{dim g_1̄} dim L_0(μ)`.
pub fn projective_dim_bounds(mu: &Weight) -> Result<DimBound> {
    let lower = weyl_dim_g0(mu)?;
    let upper = &lower << mu.params().dim_odd();
    Ok(DimBound { lower, upper })
}

/// Exponent `(m+n−k−1)k` in the growth bound on `dim P(μ)` over a block of atypicality `k`.
pub fn proj_growth_exponent(params: SuperParams, k: usize) -> Result<usize> {
    if k > params.n() {
        return Err(Error::Domain(format!("atypicality {k} exceeds n = {}", params.n())));
    }
    if k == 0 {
        return Ok(0);
    }
    Ok((params.rank() - k - 1) * k)
}

/// Number of partitions of `i` into at most `k` parts.
pub fn partitions_at_most_k_parts(i: usize, k: usize) -> BigUint {
    // row[j] holds p(j, c) for the current c; p(j, c) = p(j − c, c) + p(j, c − 1).
    let mut row: Vec<BigUint> = (0..=i).map(|j| if j == 0 { BigUint::one() } else { BigUint::zero() }).collect();
    for c in 1..=k {
        for j in c..=i {
            let add = row[j - c].clone();
            row[j] += add;
        }
    }
    row.swap_remove(i)
}

/// All partitions of `d` with at most `k` parts, in reverse lexicographic order.
pub fn partitions_of(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, k, &mut Vec::new(), &mut out);
    out
}

/// Degrees `d` allowed by `−d = |λ| − |μ| + b`, `0 ≤ b ≤ mn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtDegreeWindow {
    /// `|μ| − |λ|`, the largest admissible degree.
    pub base: i64,
    pub width: usize,
}

impl ExtDegreeWindow {
    pub fn new(lam: &Weight, mu: &Weight) -> Result<Self> {
        if lam.params() != mu.params() {
            return Err(Error::Parameter("weights for different algebras".into()));
        }
        require_dominant(lam)?;
        require_dominant(mu)?;
        Ok(ExtDegreeWindow {
            base: naive_length(mu) - naive_length(lam),
            width: lam.params().dim_g1(),
        })
    }

    /// The `b` realising degree `d`, if any.
    pub fn offset(&self, d: usize) -> Option<usize> {
        let b = self.base - d as i64;
        (0..=self.width as i64).contains(&b).then_some(b as usize)
    }

    pub fn contains(&self, d: usize) -> bool {
        self.offset(d).is_some()
    }
}

/// Necessary condition for `Ext^d(K(λ), L(μ)) ≠ 0`.
pub fn ext_degree_constraint(lam: &Weight, mu: &Weight, d: usize) -> Result<bool> {
    Ok(ExtDegreeWindow::new(lam, mu)?.contains(d))
}

/// `g_0`-highest weights of `S^d(g_1^*)` for `gl(k|k)`: `(−τ_k, …, −τ_1 | τ_1, …, τ_k)`
/// for each partition `τ ⊢ d` with at most `k` parts, each with multiplicity one.
pub fn cauchy_symmetric_decomposition(k: usize, d: usize) -> Result<Vec<Weight>> {
    if k == 0 || k > CAUCHY_MAX_K || d > CAUCHY_MAX_D {
        return Err(Error::Resource(format!(
            "Cauchy decomposition limited to 1 <= k <= {CAUCHY_MAX_K}, d <= {CAUCHY_MAX_D} (got k={k}, d={d})"
        )));
    }
    let params = SuperParams::new(k, k)?;
    partitions_of(d, k)
        .into_iter()
        .map(|mut tau| {
            tau.resize(k, 0);
            let mut coeffs: Vec<i64> = tau.iter().rev().map(|&t| -(t as i64)).collect();
            coeffs.extend(tau.iter().map(|&t| t as i64));
            Weight::new(params, coeffs)
        })
        .collect()
}

/// Multiplicity of `L_0(σ)` in [`cauchy_symmetric_decomposition`].
pub fn cauchy_multiplicity(sigma: &Weight, d: usize) -> Result<usize> {
    let p = sigma.params();
    if p.m() != p.n() {
        return Err(Error::Domain(format!("{sigma} is not a gl(k|k) weight")));
    }
    Ok(cauchy_symmetric_decomposition(p.m(), d)?
        .iter()
        .filter(|w| *w == sigma)
        .count())
}

/// `1` iff `σ ≼ 0` and `d = −l(σ)`; the dimension of the degree-`d` piece of
/// `Hom_{g_0}(L_0(σ), S(g_1^*))` for principal-block `σ`.
pub fn kac_ext_trivial(sigma: &Weight, d: usize) -> Result<u8> {
    if !is_principal_block(sigma) {
        return Err(Error::Domain(format!("{sigma} is not in the principal block of gl(k|k)")));
    }
    let zero = Weight::zero(sigma.params());
    let below = bruhat_leq_principal(sigma, &zero)?;
    Ok(u8::from(below && -length(sigma)? == d as i64))
}

/// Smallest `C` with `p(i, k) ≤ C i^{k−1}` over `1 ≤ i ≤ imax`, as a float ratio.
pub fn partition_growth_constant(k: usize, imax: usize) -> f64 {
    (1..=imax)
        .map(|i| {
            let p = partitions_at_most_k_parts(i, k).to_f64().unwrap_or(f64::INFINITY);
            p / (i as f64).powi(k as i32 - 1)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::principal_weight;

    fn w(m: usize, n: usize, c: &[i64]) -> Weight {
        Weight::new(SuperParams::new(m, n).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dim_g0(&w(2, 2, &[1, 0, 0, -1])).unwrap(), BigUint::from(4u32));
        assert_eq!(weyl_dim_g0(&w(2, 1, &[0, 0, 0])).unwrap(), BigUint::from(1u32));
        assert_eq!(weyl_dim_g0(&w(3, 1, &[2, 1, 0, 7])).unwrap(), BigUint::from(8u32));
        assert_eq!(weyl_dim_g0(&w(3, 3, &[2, 0, 0, 0, 0, -2])).unwrap(), BigUint::from(36u32));
        assert!(matches!(weyl_dim_g0(&w(2, 1, &[0, 1, 0])), Err(Error::Domain(_))));
    }

    #[test]
    fn projective_bounds() {
        let b = projective_dim_bounds(&w(1, 1, &[0, 0])).unwrap();
        assert_eq!((b.lower, b.upper), (BigUint::from(1u32), BigUint::from(4u32)));
        let b = projective_dim_bounds(&w(2, 1, &[0, 0, 0])).unwrap();
        assert_eq!((b.lower, b.upper), (BigUint::from(1u32), BigUint::from(16u32)));
        let b = projective_dim_bounds(&w(2, 2, &[3, 1, 0, -2])).unwrap();
        assert_eq!(&b.upper, &(&b.lower << 8usize));
    }

    #[test]
    fn growth_exponent() {
        let p = |m, n| SuperParams::new(m, n).unwrap();
        assert_eq!(proj_growth_exponent(p(2, 2), 2).unwrap(), 2);
        assert_eq!(proj_growth_exponent(p(3, 2), 1).unwrap(), 3);
        assert_eq!(proj_growth_exponent(p(4, 3), 0).unwrap(), 0);
        assert!(proj_growth_exponent(p(2, 1), 2).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_at_most_k_parts(0, 3), BigUint::one());
        assert_eq!(partitions_at_most_k_parts(5, 2), BigUint::from(3u32));
        assert_eq!(partitions_at_most_k_parts(10, 10), BigUint::from(42u32));
        assert_eq!(partitions_at_most_k_parts(100, 100), BigUint::from(190_569_292u64));
        for i in 0..25 {
            for k in 1..6 {
                assert_eq!(partitions_of(i, k).len(), partitions_at_most_k_parts(i, k).to_usize().unwrap());
            }
        }
    }

    #[test]
    fn partition_growth_is_polynomial() {
        // p(i, k) ~ i^{k-1} / (k!(k-1)!), so the running ratio stays bounded.
        for k in 1..=4 {
            let c_small = partition_growth_constant(k, 1000);
            let c_large = partition_growth_constant(k, 10_000);
            assert!(c_large.is_finite());
            assert!(c_large <= c_small * 1.0001, "k={k}: {c_small} -> {c_large}");
        }
    }

    #[test]
    fn ext_degree_examples() {
        let z = w(1, 1, &[0, 0]);
        assert!(ext_degree_constraint(&z, &w(1, 1, &[1, -1]), 1).unwrap());
        assert!(!ext_degree_constraint(&z, &w(1, 1, &[5, -5]), 1).unwrap());
        assert!(ext_degree_constraint(&z, &z, 0).unwrap());
        let win = ExtDegreeWindow::new(&z, &w(1, 1, &[1, -1])).unwrap();
        assert_eq!(win.offset(1), Some(0));
        assert_eq!(win.offset(0), Some(1));
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_symmetric_decomposition(2, 1).unwrap(), vec![w(2, 2, &[0, -1, 1, 0])]);
        for k in 1..=4 {
            let triv = cauchy_symmetric_decomposition(k, 0).unwrap();
            assert_eq!(triv, vec![Weight::zero(SuperParams::new(k, k).unwrap())]);
        }
        for d in 0..12 {
            assert_eq!(
                cauchy_symmetric_decomposition(3, d).unwrap().len(),
                partitions_at_most_k_parts(d, 3).to_usize().unwrap()
            );
        }
        assert!(matches!(cauchy_symmetric_decomposition(5, 1), Err(Error::Resource(_))));
        assert!(matches!(cauchy_symmetric_decomposition(2, 31), Err(Error::Resource(_))));
    }

    #[test]
    fn ext_trivial_examples() {
        assert_eq!(kac_ext_trivial(&w(2, 2, &[0, -1, 1, 0]), 1).unwrap(), 1);
        assert_eq!(kac_ext_trivial(&principal_weight(&[0, 0]).unwrap(), 0).unwrap(), 1);
        for d in 0..5 {
            assert_eq!(kac_ext_trivial(&w(2, 2, &[1, 0, 0, -1]), d).unwrap(), 0);
        }
        assert!(kac_ext_trivial(&w(2, 2, &[1, 1, 0, 0]), 0).is_err());
    }
}
