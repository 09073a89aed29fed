//! Weight pairs in a fixed block `B` of atypicality `k`, built from the
//! lattice points of [`crate::ehrhart`], together with the values of the
//! Su-Zhang bijection `φ: B → (principal block of gl(k|k))` on them.
//!
//! Only the values of `φ` on `ζ`-images and on the `μ^(a)` are implemented.
//! For `k = 1`, weights of `B` are indexed by their atypical value
//! `v = (λ+ρ, ε_1)` at the paired index. `B` is totally ordered by `v`, and
//! `φ` is the order-preserving bijection onto `Z` pinned by
//! `φ(μ^(a)) = (a − n + 1)(ε_1 − ε_2)`, which is how `ν = φ^{-1}(0)` is found.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ehrhart::enumerate_lattice_points;
use crate::error::{Error, Result};
use crate::weight::{
    atypicality, bruhat_leq_principal, is_dominant, length, principal_weight, rho, BlockDescriptor,
    Root, SuperParams, Weight,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZetaInput {
    pub params: SuperParams,
    pub k: usize,
    pub x: Vec<i64>,
}

impl ZetaInput {
    pub fn new(params: SuperParams, k: usize, x: Vec<i64>) -> Result<Self> {
        check_k(params, k)?;
        if x.len() != k {
            return Err(Error::Parameter(format!("ζ needs {k} coordinates, got {}", x.len())));
        }
        Ok(ZetaInput { params, k, x })
    }
}

fn check_k(params: SuperParams, k: usize) -> Result<()> {
    if k == 0 || k > params.n() {
        return Err(Error::Parameter(format!(
            "atypicality {k} outside 1..={} for {params}",
            params.n()
        )));
    }
    Ok(())
}

/// `(p, p−1, …, 1, x_1, …, x_k | −x_k, …, −x_1, −(q+1), …, −(q+n−k))` with `p = m−k`, `q = 2m−2k`.
pub fn zeta(input: &ZetaInput) -> Weight {
    let (m, n, k) = (input.params.m(), input.params.n(), input.k);
    let p = (m - k) as i64;
    let qq = 2 * p;
    let mut c: Vec<i64> = (0..m - k).map(|i| p - i as i64).collect();
    c.extend(&input.x);
    c.extend(input.x.iter().rev().map(|v| -v));
    c.extend((1..=(n - k) as i64).map(|s| -(qq + s)));
    Weight::new(input.params, c).expect("ζ has m+n coordinates")
}

/// Recovers `x` from a weight of the form `ζ(x)`.
pub fn zeta_preimage(params: SuperParams, k: usize, w: &Weight) -> Option<Vec<i64>> {
    if w.params() != params || check_k(params, k).is_err() {
        return None;
    }
    let m = params.m();
    let x = w.coeffs()[m - k..m].to_vec();
    let input = ZetaInput::new(params, k, x.clone()).ok()?;
    (zeta(&input) == *w).then_some(x)
}

/// The block `B` of atypicality `k`. Its `omega` is that of [`nu`].
pub fn block_b_descriptor(params: SuperParams, k: usize) -> Result<BlockDescriptor> {
    check_k(params, k)?;
    let (m, n) = (params.m() as i64, params.n() as i64);
    let ki = k as i64;
    let (core_left, core_right): (Vec<i64>, Vec<i64>) = if k == 1 {
        ((1..m).map(|t| 2 * t).collect(), (0..n - 1).map(|t| 2 * m + 2 * t).collect())
    } else {
        (
            (0..m - ki).map(|t| ki + 2 + 2 * t).collect(),
            (1..=n - ki).map(|t| 2 * m - ki + 2 * t).collect(),
        )
    };
    let omega = atypicality(&nu(params, k)?)?.omega;
    Ok(BlockDescriptor {
        atypicality: k,
        core_left,
        core_right,
        omega,
    })
}

fn core_k1(params: SuperParams) -> Vec<i64> {
    let (m, n) = (params.m() as i64, params.n() as i64);
    let mut core: Vec<i64> = (1..m).map(|t| 2 * t).collect();
    core.extend((0..n - 1).map(|t| 2 * m + 2 * t));
    core
}

/// The weight of the `k = 1` block `B` whose paired shifted value is `v`.
pub fn block_b_weight_k1(params: SuperParams, v: i64) -> Result<Weight> {
    let (m, n) = (params.m(), params.n());
    let core = core_k1(params);
    if core.contains(&v) {
        return Err(Error::Domain(format!("{v} is a core value of the block")));
    }
    let mut left: Vec<i64> = core[..m - 1].to_vec();
    left.push(v);
    left.sort_unstable_by(|a, b| b.cmp(a));
    let mut right: Vec<i64> = core[m - 1..].to_vec();
    right.push(v);
    right.sort_unstable();
    let shifted: Vec<i64> = left.into_iter().chain(right.into_iter().map(|r| -r)).collect();
    let r = rho(params);
    let coeffs = shifted.iter().zip(r.coeffs()).map(|(s, p)| s - p).collect();
    let w = Weight::new(params, coeffs)?;
    debug_assert_eq!(w.coeffs().len(), m + n);
    Ok(w)
}

/// Paired shifted value `v` of a weight in the `k = 1` block `B`.
pub fn atypical_value_k1(w: &Weight) -> Result<i64> {
    let desc = atypicality(w)?;
    let block = block_b_descriptor(w.params(), 1)?;
    if !desc.same_block_as(&block) {
        return Err(Error::Domain(format!("{w} is not in the block B")));
    }
    let root = desc.omega[0];
    Ok(w.coeff(root.i) + rho(w.params()).coeff(root.i))
}

/// `φ` on the `k = 1` block as an integer: `v − #{core values < v} − 1`.
pub fn phi_index_k1(params: SuperParams, v: i64) -> i64 {
    v - core_k1(params).iter().filter(|&&c| c < v).count() as i64 - 1
}

/// `φ(ζ(x)) = x_1ε_1 + … + x_kε_k − x_kε_{k+1} − … − x_1ε_{2k}`.
pub fn phi_on_zeta(input: &ZetaInput) -> Result<Weight> {
    if !is_dominant(&zeta(input)) {
        return Err(Error::Domain(format!("ζ({:?}) is not dominant", input.x)));
    }
    principal_weight(&input.x)
}

/// `φ(μ^(a)) = (a − n + 1)(ε_1 − ε_2)`.
pub fn phi_k1(params: SuperParams, a: i64) -> Weight {
    let c = a - params.n() as i64 + 1;
    principal_weight(&[c]).expect("gl(1|1) weight")
}

fn check_window(params: SuperParams, a: i64, d: i64) -> Result<()> {
    let bound = 6 * params.rank() as i64;
    if d <= bound {
        return Err(Error::Domain(format!("need d > 6(m+n) = {bound}, got {d}")));
    }
    if !(3 * a > 2 * d && a <= d) {
        return Err(Error::Domain(format!("need 2d/3 < a <= d, got a = {a}, d = {d}")));
    }
    Ok(())
}

/// `μ^(a) = aε_1 + pε_2 + … + ε_m − (q+1)ε_{m+1} − … − (q+n−1)ε_{m+n−1} − (a+m−n)ε_{m+n}`.
pub fn mu_a(params: SuperParams, a: i64, d: i64) -> Result<Weight> {
    check_window(params, a, d)?;
    let (m, n) = (params.m() as i64, params.n() as i64);
    let p = m - 1;
    let qq = 2 * m - 2;
    let mut c = vec![a];
    c.extend((0..p).map(|i| p - i));
    c.extend((1..n).map(|s| -(qq + s)));
    c.push(-(a + m - n));
    Weight::new(params, c)
}

/// `ν = ζ(0)` for `k > 1`; for `k = 1` the weight of `B` with `φ(ν) = 0`.
pub fn nu(params: SuperParams, k: usize) -> Result<Weight> {
    check_k(params, k)?;
    if k > 1 {
        return Ok(zeta(&ZetaInput::new(params, k, vec![0; k])?));
    }
    // Core values are at least 2 and the index is increasing, so its zero lies in [1, 2(m+n)].
    let hits: Vec<i64> = (-1..=2 * params.rank() as i64)
        .filter(|v| !core_k1(params).contains(v) && phi_index_k1(params, *v) == 0)
        .collect();
    match hits.as_slice() {
        [v] => block_b_weight_k1(params, *v),
        _ => Err(Error::Internal(format!("φ^-1(0) search found {hits:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPair {
    pub mu: Weight,
    pub sigma: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPairSet {
    pub d: u64,
    pub k: usize,
    pub block: BlockDescriptor,
    pub pairs: Vec<WeightPair>,
}

/// `S(d)`: `(ζ(b), ζ(a))` over the lattice points for `k > 1`; the diagonal
/// `(μ^(a), μ^(a))`, `2d/3 < a ≤ d`, for `k = 1`.
pub fn build_s(params: SuperParams, k: usize, d: u64) -> Result<WeightPairSet> {
    check_k(params, k)?;
    let block = block_b_descriptor(params, k)?;
    let pairs = if k == 1 {
        let di = d as i64;
        let lo = 2 * di / 3 + 1;
        (lo..=di)
            .map(|a| {
                let mu = mu_a(params, a, di)?;
                Ok(WeightPair { mu: mu.clone(), sigma: mu })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        enumerate_lattice_points(k, d)?
            .par_iter()
            .map(|pt| {
                let (b, a) = pt.split_at(k);
                Ok(WeightPair {
                    mu: zeta(&ZetaInput::new(params, k, b.to_vec())?),
                    sigma: zeta(&ZetaInput::new(params, k, a.to_vec())?),
                })
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(WeightPairSet { d, k, block, pairs })
}

fn in_block(w: &Weight, block: &BlockDescriptor) -> bool {
    is_dominant(w) && atypicality(w).is_ok_and(|desc| desc.same_block_as(block))
}

/// The order, length and gap conditions every pair of `S(d)` satisfies (`k > 1`).
pub fn check_pair_conditions(pair: &WeightPair, d: u64, params: SuperParams, k: usize) -> Result<bool> {
    check_k(params, k)?;
    if k == 1 {
        return Err(Error::Domain("k = 1 pairs are checked by check_pair_conditions_k1".into()));
    }
    let (Some(xm), Some(xs)) = (
        zeta_preimage(params, k, &pair.mu),
        zeta_preimage(params, k, &pair.sigma),
    ) else {
        return Ok(false);
    };
    let block = block_b_descriptor(params, k)?;
    if !in_block(&pair.mu, &block) || !in_block(&pair.sigma, &block) {
        return Ok(false);
    }
    let phi_mu = principal_weight(&xm)?;
    let phi_sigma = principal_weight(&xs)?;
    let phi_nu = principal_weight(&vec![0; k])?;
    let d = d as i64;
    let (l_mu, l_sigma) = (length(&pair.mu)?, length(&pair.sigma)?);
    let kk2 = 2 * (k * k) as i64;
    let m = params.m();
    let mu = |i: usize| pair.mu.coeff(i);
    let gaps = -kk2 * mu(m - k + 1) >= d && (m - k + 1..m).all(|i| kk2 * (mu(i) - mu(i + 1)) >= d);
    Ok(bruhat_leq_principal(&phi_sigma, &phi_mu)?
        && bruhat_leq_principal(&phi_sigma, &phi_nu)?
        && (0..=d).contains(&(l_mu - l_sigma))
        && -2 * l_sigma == d - l_mu
        && gaps)
}

/// `k = 1` pairs: diagonal, of the form `μ^(a)` with `a` in the window, inside `B`.
pub fn check_pair_conditions_k1(pair: &WeightPair, d: u64, params: SuperParams) -> Result<bool> {
    if pair.mu != pair.sigma {
        return Ok(false);
    }
    let a = pair.mu.coeff(1);
    let Ok(expected) = mu_a(params, a, d as i64) else {
        return Ok(false);
    };
    Ok(expected == pair.mu && in_block(&pair.mu, &block_b_descriptor(params, 1)?))
}

/// Root set of `ζ`-images: `ε_{m−k+i} − ε_{m+k−i+1}`.
pub fn zeta_omega(params: SuperParams, k: usize) -> Vec<Root> {
    let m = params.m();
    (1..=k).map(|i| Root::new(m - k + i, m + k - i + 1)).collect()
}
