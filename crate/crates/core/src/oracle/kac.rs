//! Kac and dual Kac modules as explicit matrices.
//!
//! `K(λ) = Λ(g_{-1}) ⊗ L_0(λ)` is induced from `g_0 ⊕ g_1` with `g_1` acting
//! by zero on `L_0(λ)`. The dual Kac module is realised as the module induced
//! from `g_0 ⊕ g_{-1}`, `Λ(g_1) ⊗ L_0(λ − 2ρ_1)`, where `2ρ_1` is the sum of
//! the positive odd roots. The top exterior power shifts the weight back so
//! that `L(λ)` is its socle.
//!
//! Basis vectors are `f_S ⊗ w` for subsets `S` of the free odd units, with
//! `f_S` the product in increasing order.

use super::algebra::{bracket, Shape, Unit};
use super::gt::gl_simple;
use super::module::MatrixModule;
use crate::error::{Error, Result};
use crate::linalg::{q, Rational, SparseMatrix, SparseVec};
use crate::weight::{is_dominant, Weight};

/// Largest dimension the induced-module builders accept.
pub const KAC_MAX_DIM: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Induction {
    /// Free over `g_{-1}`: the Kac module.
    Plus,
    /// Free over `g_1`: the dual Kac module.
    Minus,
}

/// `L_0(λ) = L(λ_even) ⊠ L(λ_odd)` as a `g_0`-module, acting on `u ⊗ v` with index `u·dim_v + v`.
struct EvenPart {
    left: MatrixModule,
    right: MatrixModule,
}

impl EvenPart {
    fn new(lam: &Weight) -> Result<Self> {
        let p = lam.params();
        Ok(EvenPart {
            left: gl_simple(p.m(), lam.even_part())?,
            right: gl_simple(p.n(), lam.odd_part())?,
        })
    }

    fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    /// Image of basis vector `w` under the even unit `u` of `gl(m|n)`.
    fn act(&self, m: usize, u: Unit, w: usize) -> Vec<(usize, Rational)> {
        let dv = self.right.dim();
        let (a, b) = (w / dv, w % dv);
        if u.i <= m {
            self.left.action(u).column(a).iter().map(|(i, c)| (i * dv + b, c.clone())).collect()
        } else {
            let v = Unit::new(u.i - m, u.j - m);
            self.right.action(v).column(b).iter().map(|(i, c)| (a * dv + i, c.clone())).collect()
        }
    }
}

/// Sorts a word of distinct free indices, returning the sign and bitmask,
/// or `None` if an index repeats.
fn normalize(word: &[usize]) -> Option<(i64, usize)> {
    let mut mask = 0usize;
    let mut inversions = 0usize;
    for (pos, &t) in word.iter().enumerate() {
        if mask & (1 << t) != 0 {
            return None;
        }
        mask |= 1 << t;
        inversions += word[..pos].iter().filter(|&&s| s > t).count();
    }
    Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, mask))
}

fn bits(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|t| mask & (1 << t) != 0).collect()
}

fn add(v: &mut SparseVec, idx: usize, c: Rational) {
    let e = v.entry(idx).or_insert_with(|| q(0));
    *e += c;
    if num_traits::Zero::is_zero(e) {
        v.remove(&idx);
    }
}

/// Module induced from `L_0(μ)` over the parabolic opposite to the free odd part.
pub fn induced_module(mu: &Weight, side: Induction) -> Result<MatrixModule> {
    if !is_dominant(mu) {
        return Err(Error::Domain(format!("{mu} is not dominant")));
    }
    let params = mu.params();
    let shape = Shape::new(params.m(), params.n());
    let (free, killers) = match side {
        Induction::Plus => (shape.minus_units(), shape.plus_units()),
        Induction::Minus => (shape.plus_units(), shape.minus_units()),
    };
    let nfree = free.len();
    let even = EvenPart::new(mu)?;
    let d0 = even.dim();
    let dim = (1usize << nfree)
        .checked_mul(d0)
        .filter(|&d| d <= KAC_MAX_DIM)
        .ok_or_else(|| Error::Resource(format!("induced module exceeds {KAC_MAX_DIM} dimensions")))?;
    let idx = |mask: usize, w: usize| mask * d0 + w;
    let free_pos = |u: Unit| free.iter().position(|&f| f == u);

    let mut actions: Vec<Option<SparseMatrix>> = vec![None; shape.rank() * shape.rank()];

    // g_0: Leibniz rule over the exterior factors plus the action on L_0.
    for u in shape.units().filter(|&u| !shape.is_odd(u)) {
        let mut cols = Vec::with_capacity(dim);
        for mask in 0..1usize << nfree {
            let word = bits(mask);
            for w in 0..d0 {
                let mut col = SparseVec::new();
                for (i, c) in even.act(shape.m, u, w) {
                    add(&mut col, idx(mask, i), c);
                }
                for (p, &t) in word.iter().enumerate() {
                    for (v, c) in bracket(shape, u, free[t]) {
                        let t2 = free_pos(v).ok_or_else(|| Error::Internal(format!("[{u}, {}] leaves the free part", free[t])))?;
                        let mut w2 = word.clone();
                        w2[p] = t2;
                        if let Some((sign, m2)) = normalize(&w2) {
                            add(&mut col, idx(m2, w), q(sign * c));
                        }
                    }
                }
                cols.push(col);
            }
        }
        actions[shape.index(u)] = Some(SparseMatrix::from_columns(dim, cols));
    }

    // Free odd part: exterior multiplication on the left.
    for (s, &u) in free.iter().enumerate() {
        let mut cols = Vec::with_capacity(dim);
        for mask in 0..1usize << nfree {
            for w in 0..d0 {
                let mut col = SparseVec::new();
                if mask & (1 << s) == 0 {
                    let before = (mask & ((1 << s) - 1)).count_ones();
                    let sign = if before % 2 == 0 { 1 } else { -1 };
                    col.insert(idx(mask | 1 << s, w), q(sign));
                }
                cols.push(col);
            }
        }
        actions[shape.index(u)] = Some(SparseMatrix::from_columns(dim, cols));
    }

    // Killing odd part: x·(f_t v') = [x, f_t]·v' − f_t·(x·v') with t the smallest index.
    let mut order: Vec<usize> = (0..1usize << nfree).collect();
    order.sort_by_key(|m| m.count_ones());
    for &x in &killers {
        let mut cols: Vec<SparseVec> = vec![SparseVec::new(); dim];
        for &mask in &order {
            if mask == 0 {
                continue;
            }
            let t = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << t);
            let ft = actions[shape.index(free[t])].as_ref().expect("free actions built");
            for w in 0..d0 {
                let mut col = SparseVec::new();
                for (v, c) in bracket(shape, x, free[t]) {
                    let h = actions[shape.index(v)].as_ref().expect("even actions built");
                    for (i, a) in h.column(idx(rest, w)) {
                        add(&mut col, *i, a * q(c));
                    }
                }
                let inner = ft.apply(&cols[idx(rest, w)]);
                for (i, a) in inner {
                    add(&mut col, i, -a);
                }
                cols[idx(mask, w)] = col;
            }
        }
        actions[shape.index(x)] = Some(SparseMatrix::from_columns(dim, cols));
    }

    let parity = (0..1usize << nfree)
        .flat_map(|mask| std::iter::repeat_n(mask.count_ones() % 2 == 1, d0))
        .collect();
    let actions = actions.into_iter().map(|a| a.expect("every unit assigned")).collect();
    MatrixModule::new(shape, parity, actions)
}

/// The Kac module `K(λ)`.
pub fn kac_module(lam: &Weight) -> Result<MatrixModule> {
    induced_module(lam, Induction::Plus)
}

/// `2ρ_1 = n(ε_1 + … + ε_m) − m(ε_{m+1} + … + ε_{m+n})`.
pub fn two_rho_one(lam: &Weight) -> Weight {
    let p = lam.params();
    let coeffs = (1..=p.rank())
        .map(|i| if i <= p.m() { p.n() as i64 } else { -(p.m() as i64) })
        .collect();
    Weight::new(p, coeffs).expect("m+n coefficients")
}

/// The dual Kac module `K^-(λ)`.
pub fn dual_kac_module(lam: &Weight) -> Result<MatrixModule> {
    if !is_dominant(lam) {
        return Err(Error::Domain(format!("{lam} is not dominant")));
    }
    induced_module(&lam.sub(&two_rho_one(lam))?, Induction::Minus)
}
