//! Weights, roots and block combinatorics for `gl(m|n)`.
//!
//! Indices are 1-based throughout so that `Root { i, j }` reads as
//! `ε_i − ε_j`. The form is `(ε_i, ε_j) = δ_ij` on the first `m` indices,
//! `−δ_ij` on the last `n`, and zero across the bar. `ρ` is the shifted
//! integral vector `(m, …, 1 | −1, …, −n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which the exhaustive matching check runs alongside the
/// greedy search in [`atypicality`].
const EXHAUSTIVE_MATCHING_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr", into = "ParamsRepr")]
pub struct SuperParams {
    m: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    m: usize,
    n: usize,
}

impl TryFrom<ParamsRepr> for SuperParams {
    type Error = Error;
    fn try_from(r: ParamsRepr) -> Result<Self> {
        SuperParams::new(r.m, r.n)
    }
}

impl From<SuperParams> for ParamsRepr {
    fn from(p: SuperParams) -> Self {
        ParamsRepr { m: p.m, n: p.n }
    }
}

impl SuperParams {
    /// Requires `m ≥ n ≥ 1`; `gl(m|n) ≅ gl(n|m)` so nothing is lost.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n == 0 || m < n {
            return Err(Error::Parameter(format!(
                "gl({m}|{n}): expected m >= n >= 1"
            )));
        }
        Ok(SuperParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// `dim g_1 = dim g_{-1} = mn`.
    pub fn dim_g1(&self) -> usize {
        self.m * self.n
    }

    /// `dim g_1̄ = 2mn`.
    pub fn dim_odd(&self) -> usize {
        2 * self.m * self.n
    }

    /// Sign of `(ε_i, ε_i)`.
    pub fn sign(&self, i: usize) -> i64 {
        if i <= self.m {
            1
        } else {
            -1
        }
    }

    pub fn is_even_index_pair(&self, i: usize, j: usize) -> bool {
        (i <= self.m) == (j <= self.m)
    }
}

impl fmt::Display for SuperParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// An integral weight `Σ λ_i ε_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct Weight {
    params: SuperParams,
    coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    m: usize,
    n: usize,
    weight: Vec<i64>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = Error;
    fn try_from(r: WeightRepr) -> Result<Self> {
        Weight::new(SuperParams::new(r.m, r.n)?, r.weight)
    }
}

impl From<Weight> for WeightRepr {
    fn from(w: Weight) -> Self {
        WeightRepr {
            m: w.params.m,
            n: w.params.n,
            weight: w.coeffs,
        }
    }
}

impl Weight {
    pub fn new(params: SuperParams, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != params.rank() {
            return Err(Error::Parameter(format!(
                "{params} weight needs {} coefficients, got {}",
                params.rank(),
                coeffs.len()
            )));
        }
        Ok(Weight { params, coeffs })
    }

    pub fn zero(params: SuperParams) -> Self {
        Weight {
            params,
            coeffs: vec![0; params.rank()],
        }
    }

    /// `ε_i` (1-based).
    pub fn epsilon(params: SuperParams, i: usize) -> Self {
        let mut w = Self::zero(params);
        w.coeffs[i - 1] = 1;
        w
    }

    /// Weight of the Berezinian representation `ε_1+…+ε_m − ε_{m+1}−…−ε_{m+n}`.
    pub fn berezinian(params: SuperParams) -> Self {
        Weight {
            params,
            coeffs: (1..=params.rank()).map(|i| params.sign(i)).collect(),
        }
    }

    pub fn params(&self) -> SuperParams {
        self.params
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `ε_i` (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn even_part(&self) -> &[i64] {
        &self.coeffs[..self.params.m]
    }

    pub fn odd_part(&self) -> &[i64] {
        &self.coeffs[self.params.m..]
    }

    fn check_same(&self, other: &Weight) -> Result<()> {
        if self.params != other.params {
            return Err(Error::Parameter(format!(
                "weights for {} and {} cannot be combined",
                self.params, other.params
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_same(other)?;
        Ok(Weight {
            params: self.params,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            params: self.params,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.coeffs.split_at(self.params.m);
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(l), join(r))
    }
}

/// The root `ε_i − ε_j`, `i ≠ j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1, "invalid root e{i} - e{j}");
        Root { i, j }
    }

    pub fn is_odd(&self, params: SuperParams) -> bool {
        !params.is_even_index_pair(self.i, self.j)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn as_weight(&self, params: SuperParams) -> Weight {
        let mut w = Weight::zero(params);
        w.coeffs[self.i - 1] = 1;
        w.coeffs[self.j - 1] = -1;
        w
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

pub fn positive_roots_m(params: SuperParams) -> Vec<Root> {
    let m = params.m;
    (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| Root::new(i, j)))
        .collect()
}

pub fn positive_roots_n(params: SuperParams) -> Vec<Root> {
    let (m, r) = (params.m, params.rank());
    (m + 1..=r)
        .flat_map(|i| (i + 1..=r).map(move |j| Root::new(i, j)))
        .collect()
}

pub fn odd_positive_roots(params: SuperParams) -> Vec<Root> {
    let (m, r) = (params.m, params.rank());
    (1..=m)
        .flat_map(|i| (m + 1..=r).map(move |j| Root::new(i, j)))
        .collect()
}

/// The invariant form on weights.
pub fn bilinear_form(a: &Weight, b: &Weight) -> Result<i64> {
    a.check_same(b)?;
    let p = a.params;
    Ok(a.coeffs
        .iter()
        .zip(&b.coeffs)
        .enumerate()
        .map(|(idx, (x, y))| p.sign(idx + 1) * x * y)
        .sum())
}

/// `(v, ε_i − ε_j)` without materialising the root.
pub fn pair_with_root(v: &Weight, root: Root) -> i64 {
    let p = v.params;
    p.sign(root.i) * v.coeff(root.i) - p.sign(root.j) * v.coeff(root.j)
}

pub fn rho(params: SuperParams) -> Weight {
    rho_m(params)
        .add(&rho_n(params))
        .expect("rho_m and rho_n share parameters")
}

/// `m ε_1 + … + ε_m`.
pub fn rho_m(params: SuperParams) -> Weight {
    let m = params.m as i64;
    let mut w = Weight::zero(params);
    for i in 0..params.m {
        w.coeffs[i] = m - i as i64;
    }
    w
}

/// `−ε_{m+1} − 2ε_{m+2} − … − nε_{m+n}`.
pub fn rho_n(params: SuperParams) -> Weight {
    let mut w = Weight::zero(params);
    for t in 1..=params.n {
        w.coeffs[params.m + t - 1] = -(t as i64);
    }
    w
}

/// `λ_i ≥ λ_{i+1}` within each of the two blocks; nothing is required across the bar.
pub fn is_dominant(lam: &Weight) -> bool {
    let m = lam.params.m;
    lam.coeffs[..m].windows(2).all(|w| w[0] >= w[1])
        && lam.coeffs[m..].windows(2).all(|w| w[0] >= w[1])
}

fn require_dominant(lam: &Weight) -> Result<()> {
    if is_dominant(lam) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{lam} is not dominant")))
    }
}

/// Atypicality data of a dominant weight: `k`, the set `Ω` and the core.
///
/// Two weights lie in the same block iff [`BlockDescriptor::block_key`]
/// agrees; `omega` itself varies inside a block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockDescriptor {
    #[serde(rename = "k")]
    pub atypicality: usize,
    /// Sorted multiset `{(λ+ρ, ε_s) : s ≤ m, s ∉ {i_t}}`.
    pub core_left: Vec<i64>,
    /// Sorted multiset `{(λ+ρ, ε_s) : s > m, s ∉ {j_t}}`.
    pub core_right: Vec<i64>,
    pub omega: Vec<Root>,
}

impl BlockDescriptor {
    pub fn block_key(&self) -> (usize, &[i64], &[i64]) {
        (self.atypicality, &self.core_left, &self.core_right)
    }

    pub fn same_block_as(&self, other: &BlockDescriptor) -> bool {
        self.block_key() == other.block_key()
    }

    /// Even-side indices `i_1 < … < i_k` of `Ω`.
    pub fn left_indices(&self) -> Vec<usize> {
        self.omega.iter().map(|r| r.i).collect()
    }

    pub fn right_indices(&self) -> Vec<usize> {
        self.omega.iter().map(|r| r.j).collect()
    }
}

/// Largest set of pairwise orthogonal odd roots among `edges` (exhaustive).
///
/// Two distinct odd roots `ε_i − ε_j`, `ε_i' − ε_j'` are orthogonal iff
/// `i ≠ i'` and `j ≠ j'`, so this is a maximum bipartite matching.
fn exhaustive_matching(edges: &[Root]) -> Vec<Root> {
    fn go(edges: &[Root], idx: usize, used_i: u64, used_j: u64, cur: &mut Vec<Root>, best: &mut Vec<Root>) {
        if cur.len() + (edges.len() - idx) <= best.len() {
            return;
        }
        if idx == edges.len() {
            *best = cur.clone();
            return;
        }
        let e = edges[idx];
        if used_i & (1 << e.i) == 0 && used_j & (1 << e.j) == 0 {
            cur.push(e);
            go(edges, idx + 1, used_i | 1 << e.i, used_j | 1 << e.j, cur, best);
            cur.pop();
        }
        go(edges, idx + 1, used_i, used_j, cur, best);
    }
    let mut best = Vec::new();
    go(edges, 0, 0, 0, &mut Vec::new(), &mut best);
    best
}

fn pairwise_orthogonal(params: SuperParams, roots: &[Root]) -> bool {
    roots.iter().enumerate().all(|(a, r)| {
        roots[a + 1..].iter().all(|s| {
            bilinear_form(&r.as_weight(params), &s.as_weight(params)).expect("same params") == 0
        })
    })
}

/// Atypicality, `Ω` and core of a dominant weight.
pub fn atypicality(lam: &Weight) -> Result<BlockDescriptor> {
    require_dominant(lam)?;
    let params = lam.params;
    let shifted = lam.add(&rho(params))?;
    let candidates: Vec<Root> = odd_positive_roots(params)
        .into_iter()
        .filter(|&r| pair_with_root(&shifted, r) == 0)
        .collect();

    let mut used_j = vec![false; params.rank() + 1];
    let mut used_i = vec![false; params.rank() + 1];
    let mut greedy = Vec::new();
    for &r in &candidates {
        if !used_i[r.i] && !used_j[r.j] {
            used_i[r.i] = true;
            used_j[r.j] = true;
            greedy.push(r);
        }
    }
    let omega = if params.n <= EXHAUSTIVE_MATCHING_MAX_N && params.rank() < 63 {
        let best = exhaustive_matching(&candidates);
        if best.len() > greedy.len() {
            best
        } else {
            greedy
        }
    } else {
        greedy
    };
    if !pairwise_orthogonal(params, &omega) {
        return Err(Error::Internal(format!("Ω for {lam} is not orthogonal")));
    }

    let mut core_left: Vec<i64> = (1..=params.m)
        .filter(|s| !omega.iter().any(|r| r.i == *s))
        .map(|s| shifted.coeff(s))
        .collect();
    let mut core_right: Vec<i64> = (params.m + 1..=params.rank())
        .filter(|s| !omega.iter().any(|r| r.j == *s))
        .map(|s| -shifted.coeff(s))
        .collect();
    core_left.sort_unstable();
    core_right.sort_unstable();
    let mut omega = omega;
    omega.sort();
    Ok(BlockDescriptor {
        atypicality: omega.len(),
        core_left,
        core_right,
        omega,
    })
}

pub fn same_block(a: &Weight, b: &Weight) -> Result<bool> {
    a.check_same(b)?;
    Ok(atypicality(a)?.same_block_as(&atypicality(b)?))
}

/// `|λ| = λ_1 + … + λ_m`.
pub fn naive_length(lam: &Weight) -> i64 {
    lam.even_part().iter().sum()
}

/// `l(λ) = k(k+1)/2 + Σ_{α∈Ω} (λ⁺ + ρ_n, α)`.
pub fn length(lam: &Weight) -> Result<i64> {
    let desc = atypicality(lam)?;
    let params = lam.params;
    let mut plus = rho_n(params);
    plus.coeffs[..params.m].copy_from_slice(lam.even_part());
    let k = desc.atypicality as i64;
    Ok(k * (k + 1) / 2 + desc.omega.iter().map(|&r| pair_with_root(&plus, r)).sum::<i64>())
}

/// Whether `lam` lies in the principal block of `gl(k|k)`.
pub fn is_principal_block(lam: &Weight) -> bool {
    let p = lam.params;
    p.m == p.n
        && is_dominant(lam)
        && atypicality(lam).map(|d| d.atypicality == p.n).unwrap_or(false)
}

/// Principal-block weight `x_1ε_1+…+x_kε_k − x_kε_{k+1} − … − x_1ε_{2k}` of `gl(k|k)`.
pub fn principal_weight(x: &[i64]) -> Result<Weight> {
    let k = x.len();
    let params = SuperParams::new(k, k)?;
    let mut coeffs = x.to_vec();
    coeffs.extend(x.iter().rev().map(|v| -v));
    Weight::new(params, coeffs)
}

/// Bruhat order on the principal block of `gl(k|k)`: coordinate-wise on the first `k` entries.
pub fn bruhat_leq_principal(a: &Weight, b: &Weight) -> Result<bool> {
    a.check_same(b)?;
    for w in [a, b] {
        if !is_principal_block(w) {
            return Err(Error::Domain(format!(
                "{w} is not in the principal block of gl(k|k)"
            )));
        }
    }
    Ok(a.even_part().iter().zip(b.even_part()).all(|(x, y)| x <= y))
}

/// `Φ_m⁺` and `Φ_n⁺` split by how many endpoints hit the atypical indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPartition {
    pub a_m: Vec<Root>,
    pub b_m: Vec<Root>,
    pub c_m: Vec<Root>,
    pub a_n: Vec<Root>,
    pub b_n: Vec<Root>,
    pub c_n: Vec<Root>,
}

pub fn root_partition(lam: &Weight) -> Result<RootPartition> {
    let desc = atypicality(lam)?;
    let split = |roots: Vec<Root>, hits: &[usize]| {
        let mut parts = (Vec::new(), Vec::new(), Vec::new());
        for r in roots {
            match [r.i, r.j].iter().filter(|s| hits.contains(s)).count() {
                0 => parts.0.push(r),
                1 => parts.1.push(r),
                _ => parts.2.push(r),
            }
        }
        parts
    };
    let (a_m, b_m, c_m) = split(positive_roots_m(lam.params), &desc.left_indices());
    let (a_n, b_n, c_n) = split(positive_roots_n(lam.params), &desc.right_indices());
    Ok(RootPartition {
        a_m,
        b_m,
        c_m,
        a_n,
        b_n,
        c_n,
    })
}
