//! Minimal projective resolutions in the principal block of `gl(1|1)`.
//!
//! Weights of the block are `a(ε_1 − ε_2)` and are recorded by the integer `a`.
//! Every simple is one-dimensional and `P(a)` is the four-dimensional module
//! induced from `C_a` over `g_0`, with basis `v, yv, xv, yxv` where
//! `x = E_12` and `y = E_21`.
//!
//! Each step covers the head of the current kernel exactly, so minimality
//! holds by construction; [`Resolution::check_exactness`] re-verifies it.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::{Shape, Unit};
use super::kac::kac_module;
use super::module::MatrixModule;
use crate::error::{Error, Result};
use crate::linalg::{least_squares_slope, q, Matrix, Rational, SparseMatrix, SparseVec, SubspaceCoords};
use crate::weight::{length, SuperParams, Weight};

/// Deepest resolution the oracle will compute.
pub const MAX_DEPTH: usize = 25;

const SHAPE: Shape = Shape { m: 1, n: 1 };
const X: Unit = Unit { i: 1, j: 2 };
const Y: Unit = Unit { i: 2, j: 1 };

fn gl11_weight(a: i64) -> Weight {
    Weight::new(SuperParams::new(1, 1).expect("gl(1|1)"), vec![a, -a]).expect("two coefficients")
}

fn diag(entries: &[i64]) -> SparseMatrix {
    let cols = entries
        .iter()
        .enumerate()
        .map(|(i, &e)| if e == 0 { SparseVec::new() } else { SparseVec::from([(i, q(e))]) })
        .collect();
    SparseMatrix::from_columns(entries.len(), cols)
}

/// The one-dimensional simple `L(a)`.
pub fn gl11_simple(a: i64) -> MatrixModule {
    let actions = vec![diag(&[a]), SparseMatrix::zero(1), SparseMatrix::zero(1), diag(&[-a])];
    MatrixModule::new(SHAPE, vec![false], actions).expect("one-dimensional simple")
}

/// The Kac module `K(a)`.
pub fn gl11_kac(a: i64) -> Result<MatrixModule> {
    kac_module(&gl11_weight(a))
}

/// `P(a)` with the head vector of parity `odd_top`.
pub fn gl11_projective_with_parity(a: i64, odd_top: bool) -> MatrixModule {
    let x = SparseMatrix::from_columns(
        4,
        vec![SparseVec::from([(2, q(1))]), SparseVec::from([(3, q(-1))]), SparseVec::new(), SparseVec::new()],
    );
    let y = SparseMatrix::from_columns(
        4,
        vec![SparseVec::from([(1, q(1))]), SparseVec::new(), SparseVec::from([(3, q(1))]), SparseVec::new()],
    );
    let actions = vec![diag(&[a, a - 1, a + 1, a]), x, y, diag(&[-a, 1 - a, -a - 1, -a])];
    let parity = vec![odd_top, !odd_top, !odd_top, odd_top];
    MatrixModule::new(SHAPE, parity, actions).expect("projective satisfies the relations")
}

/// The projective cover `P(a)` of `L(a)`.
pub fn gl11_projective(a: i64) -> MatrixModule {
    gl11_projective_with_parity(a, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gl11Target {
    Kac(i64),
    Simple(i64),
}

impl Gl11Target {
    pub fn module(self) -> Result<MatrixModule> {
        match self {
            Gl11Target::Kac(a) => gl11_kac(a),
            Gl11Target::Simple(a) => Ok(gl11_simple(a)),
        }
    }

    pub fn weight(self) -> i64 {
        match self {
            Gl11Target::Kac(a) | Gl11Target::Simple(a) => a,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub weight: i64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub degree: usize,
    pub summands: Vec<Summand>,
    pub total_dim: usize,
}

impl DegreeSummary {
    pub fn multiplicity(&self, weight: i64) -> usize {
        self.summands.iter().find(|s| s.weight == weight).map_or(0, |s| s.multiplicity)
    }

    pub fn count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

/// Multiplicities of `P(a)` in each term of a minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResolutionTrace(pub Vec<DegreeSummary>);

impl ResolutionTrace {
    /// Highest computed degree.
    pub fn depth(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn degree(&self, d: usize) -> Option<&DegreeSummary> {
        self.0.get(d)
    }
}

/// One term `P_d` of the resolution and its map to the previous term.
#[derive(Clone, Debug)]
struct Term {
    heads: Vec<(i64, bool)>,
    module: MatrixModule,
    /// `P_d → P_{d−1}`, or the augmentation `P_0 → M`.
    map: Matrix,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    target: MatrixModule,
    requested: usize,
    terms: Vec<Term>,
}

fn principal_weights(module: &MatrixModule) -> Result<Vec<i64>> {
    module
        .weights()?
        .into_iter()
        .map(|w| {
            if w[0] + w[1] != 0 {
                Err(Error::Domain(format!("weight ({}, {}) lies outside the principal block", w[0], w[1])))
            } else {
                Ok(w[0])
            }
        })
        .collect()
}

fn dense(v: &SparseVec, dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Basis indices of `module` spanning a complement of `xM + yM`, with their weights and parities.
fn head(module: &MatrixModule) -> Result<Vec<(usize, i64, bool)>> {
    let weights = principal_weights(module)?;
    let parity = module.parity();
    let mut groups: BTreeMap<(i64, bool), Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        groups.entry((w, parity[i])).or_default().push(i);
    }
    let mut radical: BTreeMap<(i64, bool), Vec<&[(usize, Rational)]>> = BTreeMap::new();
    for u in [X, Y] {
        for j in 0..module.dim() {
            let col = module.action(u).column(j);
            if let Some((i, _)) = col.first() {
                radical.entry((weights[*i], parity[*i])).or_default().push(col);
            }
        }
    }
    let mut out = Vec::new();
    for (key, idx) in groups {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut cols: Vec<Vec<Rational>> = radical
            .get(&key)
            .map(|cs| {
                cs.iter()
                    .map(|c| {
                        let mut v = vec![Rational::zero(); idx.len()];
                        for (i, a) in c.iter() {
                            v[pos[i]] = a.clone();
                        }
                        v
                    })
                    .collect()
            })
            .unwrap_or_default();
        let mut rank = Matrix::from_columns(idx.len(), &cols).rank();
        for (p, &i) in idx.iter().enumerate() {
            if rank == idx.len() {
                break;
            }
            let mut e = vec![Rational::zero(); idx.len()];
            e[p] = Rational::one();
            cols.push(e);
            let r = Matrix::from_columns(idx.len(), &cols).rank();
            if r > rank {
                rank = r;
                out.push((i, key.0, key.1));
            } else {
                cols.pop();
            }
        }
    }
    Ok(out)
}

fn direct_sum(modules: &[MatrixModule]) -> Result<MatrixModule> {
    let mut iter = modules.iter();
    let first = iter.next().ok_or_else(|| Error::Internal("empty direct sum".into()))?.clone();
    iter.try_fold(first, |acc, m| acc.direct_sum(m))
}

/// Submodule of `p` spanned by the columns of `basis`, in those coordinates.
fn submodule(p: &MatrixModule, basis: &Matrix, parity: Vec<bool>) -> Result<MatrixModule> {
    let coords = SubspaceCoords::new(basis.clone())?;
    let r = basis.cols();
    let mut actions = Vec::new();
    for u in SHAPE.units() {
        let a = p.action(u).to_dense();
        let mut cols = Vec::with_capacity(r);
        for j in 0..r {
            let image = a.mul_vec(&basis.column(j));
            let c = coords.coords(&image)?;
            cols.push(c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect::<SparseVec>());
        }
        actions.push(SparseMatrix::from_columns(r, cols));
    }
    MatrixModule::new(SHAPE, parity, actions)
}

impl Resolution {
    /// Resolves a principal-block module to degree `depth`.
    pub fn of_module(target: MatrixModule, depth: usize) -> Result<Resolution> {
        if depth > MAX_DEPTH {
            return Err(Error::Parameter(format!("depth {depth} exceeds {MAX_DEPTH}")));
        }
        if target.shape() != SHAPE {
            return Err(Error::Parameter("resolutions are only built over gl(1|1)".into()));
        }
        let mut terms: Vec<Term> = Vec::new();
        let mut current = target.clone();
        let mut embed = Matrix::identity(target.dim());
        for _ in 0..=depth {
            if current.dim() == 0 {
                break;
            }
            let heads = head(&current)?;
            let summands: Vec<MatrixModule> =
                heads.iter().map(|&(_, w, odd)| gl11_projective_with_parity(w, odd)).collect();
            let p = direct_sum(&summands)?;

            // Cover: v ↦ h, yv ↦ yh, xv ↦ xh, yxv ↦ yxh.
            let mut cols = Vec::with_capacity(p.dim());
            for &(i, _, _) in &heads {
                let h = SparseVec::from([(i, q(1))]);
                let yh = current.action(Y).apply(&h);
                let xh = current.action(X).apply(&h);
                let yxh = current.action(Y).apply(&xh);
                for v in [&h, &yh, &xh, &yxh] {
                    cols.push(dense(v, current.dim()));
                }
            }
            let cover = Matrix::from_columns(current.dim(), &cols);
            if cover.rank() != current.dim() {
                return Err(Error::Internal("projective cover is not surjective".into()));
            }

            // The cover preserves weight and parity, so its kernel splits along them.
            let weights = principal_weights(&p)?;
            let mut groups: BTreeMap<(i64, bool), Vec<usize>> = BTreeMap::new();
            for (i, &w) in weights.iter().enumerate() {
                groups.entry((w, p.parity()[i])).or_default().push(i);
            }
            let mut kernel_cols = Vec::new();
            let mut kernel_parity = Vec::new();
            for ((_, odd), idx) in groups {
                let restricted: Vec<Vec<Rational>> = idx.iter().map(|&c| cover.column(c)).collect();
                for k in Matrix::from_columns(current.dim(), &restricted).kernel() {
                    let mut v = vec![Rational::zero(); p.dim()];
                    for (&c, a) in idx.iter().zip(k) {
                        v[c] = a;
                    }
                    kernel_cols.push(v);
                    kernel_parity.push(odd);
                }
            }
            let kernel = Matrix::from_columns(p.dim(), &kernel_cols);
            let next = submodule(&p, &kernel, kernel_parity)?;

            terms.push(Term {
                heads: heads.iter().map(|&(_, w, odd)| (w, odd)).collect(),
                module: p,
                map: embed.mul(&cover),
            });
            current = next;
            embed = kernel;
        }
        Ok(Resolution { target, requested: depth, terms })
    }

    pub fn of_target(target: Gl11Target, depth: usize) -> Result<Resolution> {
        Resolution::of_module(target.module()?, depth)
    }

    pub fn target(&self) -> &MatrixModule {
        &self.target
    }

    /// Requested depth; terms past the projective dimension are zero.
    pub fn depth(&self) -> usize {
        self.requested
    }

    /// Number of nonzero terms.
    pub fn length(&self) -> usize {
        self.terms.len()
    }

    pub fn term(&self, d: usize) -> Option<&MatrixModule> {
        self.terms.get(d).map(|t| &t.module)
    }

    /// The map `P_d → P_{d−1}` (the augmentation for `d = 0`).
    pub fn differential(&self, d: usize) -> Option<&Matrix> {
        self.terms.get(d).map(|t| &t.map)
    }

    /// Head weights of `P_d` with the parity of each head vector.
    pub fn heads(&self, d: usize) -> Option<&[(i64, bool)]> {
        self.terms.get(d).map(|t| t.heads.as_slice())
    }

    pub fn trace(&self) -> ResolutionTrace {
        ResolutionTrace(
            (0..=self.requested)
                .map(|degree| {
                    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
                    let mut total_dim = 0;
                    if let Some(t) = self.terms.get(degree) {
                        for &(w, _) in &t.heads {
                            *counts.entry(w).or_default() += 1;
                        }
                        total_dim = t.module.dim();
                    }
                    DegreeSummary {
                        degree,
                        summands: counts.into_iter().map(|(weight, multiplicity)| Summand { weight, multiplicity }).collect(),
                        total_dim,
                    }
                })
                .collect(),
        )
    }

    /// Re-checks every computed term: maps are module maps, consecutive maps
    /// compose to zero, the complex is exact, and images lie in radicals.
    pub fn check_exactness(&self) -> Result<()> {
        let Some(first) = self.terms.first() else {
            return if self.target.dim() == 0 { Ok(()) } else { Err(Error::Internal("empty resolution of a nonzero module".into())) };
        };
        if first.map.rank() != self.target.dim() {
            return Err(Error::Internal("augmentation is not surjective".into()));
        }
        for (d, t) in self.terms.iter().enumerate() {
            let prev = if d == 0 { &self.target } else { &self.terms[d - 1].module };
            for u in SHAPE.units() {
                let lhs = t.map.mul(&t.module.action(u).to_dense());
                let rhs = prev.action(u).to_dense().mul(&t.map);
                if lhs != rhs {
                    return Err(Error::Internal(format!("degree {d} map does not commute with {u}")));
                }
            }
            if d == 0 {
                continue;
            }
            let before = &self.terms[d - 1];
            if !before.map.mul(&t.map).is_zero() {
                return Err(Error::Internal(format!("d^2 != 0 at degree {d}")));
            }
            if t.map.rank() + before.map.rank() != before.module.dim() {
                return Err(Error::Internal(format!("complex is not exact at degree {}", d - 1)));
            }
            let radical: Vec<Vec<Rational>> = [X, Y]
                .iter()
                .flat_map(|&u| {
                    let a = before.module.action(u).to_dense();
                    (0..a.cols()).map(move |c| a.column(c))
                })
                .collect();
            let rad = Matrix::from_columns(before.module.dim(), &radical);
            let mut both = radical.clone();
            both.extend((0..t.map.cols()).map(|c| t.map.column(c)));
            if Matrix::from_columns(before.module.dim(), &both).rank() != rad.rank() {
                return Err(Error::Internal(format!("image at degree {d} leaves the radical")));
            }
        }
        Ok(())
    }
}

/// `dim Ext^d(A, L(μ))` read off a minimal resolution of `A`.
pub fn gl11_ext(trace: &ResolutionTrace, mu: i64, d: usize) -> Result<usize> {
    trace
        .degree(d)
        .map(|s| s.multiplicity(mu))
        .ok_or_else(|| Error::Domain(format!("degree {d} is beyond the computed depth {}", trace.depth())))
}

/// Laurent polynomial with nonnegative integer coefficients, keyed by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlPoly {
    pub terms: BTreeMap<i64, usize>,
}

impl KlPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> usize {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn at_one(&self) -> usize {
        self.terms.values().sum()
    }

    /// Constant term 1, no negative powers, degree at most 1 and `p(1) ≤ 1`.
    pub fn satisfies_constraints(&self) -> bool {
        self.is_zero()
            || (self.coefficient(0) == 1
                && self.min_exponent() >= Some(0)
                && self.degree() <= Some(1)
                && self.at_one() <= 1)
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, &c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (e, 1) => format!("q^{e}"),
                (e, c) => format!("{c}q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Resolution depth used for `p_{λ,μ}`: every degree that can contribute a nonnegative power, plus two.
pub fn kl_depth(lam: i64, mu: i64) -> usize {
    (mu - lam).unsigned_abs() as usize + 2
}

/// `p_{λ,μ}(q) = q^{l(μ)−l(λ)} Σ_d dim Ext^d(K(λ), L(μ)) q^{−d}` from a resolution of `K(λ)`.
pub fn kl_poly_from_trace(trace: &ResolutionTrace, lam: i64, mu: i64) -> Result<KlPoly> {
    let shift = length(&gl11_weight(mu))? - length(&gl11_weight(lam))?;
    let mut terms = BTreeMap::new();
    for s in &trace.0 {
        let c = s.multiplicity(mu);
        if c > 0 {
            terms.insert(shift - s.degree as i64, c);
        }
    }
    Ok(KlPoly { terms })
}

/// Naive KL polynomial for `gl(1|1)`, failing if it violates the expected constraints.
pub fn kl_poly_gl11(lam: i64, mu: i64) -> Result<KlPoly> {
    let depth = kl_depth(lam, mu);
    if depth > MAX_DEPTH {
        return Err(Error::Parameter(format!("|μ − λ| = {} needs depth beyond {MAX_DEPTH}", (mu - lam).abs())));
    }
    let trace = Resolution::of_target(Gl11Target::Kac(lam), depth)?.trace();
    let p = kl_poly_from_trace(&trace, lam, mu)?;
    if !p.satisfies_constraints() {
        return Err(Error::Internal(format!("p_{{{lam},{mu}}} = {p} violates the KL constraints")));
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    /// Each `P(μ)` counts `dim P(μ)`.
    ByDimP,
    /// Each `P(μ)` counts once.
    Unit,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GrowthFit {
    pub rate: i64,
    pub slope: f64,
}

/// Rate of growth from the log-log slope over the upper half of the degrees.
pub fn measured_growth(trace: &ResolutionTrace, weighting: Weighting) -> Result<GrowthFit> {
    let totals: Vec<usize> = trace
        .0
        .iter()
        .map(|s| match weighting {
            Weighting::ByDimP => s.total_dim,
            Weighting::Unit => s.count(),
        })
        .collect();
    let depth = trace.depth();
    if depth < 10 {
        return Err(Error::Precondition(format!("need depth at least 10, have {depth}")));
    }
    let at = |d: usize| totals[d];
    let lo = depth / 2;
    let window: Vec<usize> = (lo..=depth).collect();
    if window.iter().all(|&d| at(d) == 0) {
        return Ok(GrowthFit { rate: 0, slope: 0.0 });
    }
    if window.iter().any(|&d| at(d) == 0) {
        return Err(Error::Fit("resolution vanishes inside the fit window".into()));
    }
    let xs: Vec<f64> = window.iter().map(|&d| (d as f64).ln()).collect();
    let ys: Vec<f64> = window.iter().map(|&d| (at(d) as f64).ln()).collect();
    let slope = least_squares_slope(&xs, &ys).ok_or_else(|| Error::Fit("degenerate fit window".into()))?;
    Ok(GrowthFit { rate: (slope + 1.0).round() as i64, slope })
}
