//! Simple `gl(n)`-modules on Gelfand-Tsetlin bases.
//!
//! Uses the rational normalisation with `l_{ki} = λ_{ki} − i + 1`:
//!
//! ```text
//! E_kk ξ      = (Σ_i λ_{ki} − Σ_i λ_{k−1,i}) ξ
//! E_{k,k+1} ξ = −Σ_i ∏_j (l_{ki} − l_{k+1,j}) / ∏_{j≠i} (l_{ki} − l_{kj}) · ξ_{+δ_{ki}}
//! E_{k+1,k} ξ =  Σ_i ∏_j (l_{ki} − l_{k−1,j}) / ∏_{j≠i} (l_{ki} − l_{kj}) · ξ_{−δ_{ki}}
//! ```
//!
//! The remaining units come from commutators. The formulas only involve
//! differences of entries, so highest weights with negative entries need no
//! determinant twist.

use std::collections::HashMap;

use super::algebra::{Shape, Unit};
use super::module::MatrixModule;
use crate::error::{Error, Result};
use crate::linalg::{q, Rational, SparseMatrix, SparseVec};

/// Largest dimension [`gl_simple`] will build.
pub const GT_MAX_DIM: usize = 10_000;

/// Rows `λ_n, λ_{n−1}, …, λ_1` stored as `rows[k−1] = λ_k` (length `k`).
pub type GtPattern = Vec<Vec<i64>>;

/// All patterns with top row `top`, in a fixed order; errors past `limit`.
pub fn gt_patterns(top: &[i64], limit: usize) -> Result<Vec<GtPattern>> {
    let n = top.len();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); n];
    rows[n - 1] = top.to_vec();

    fn fill(k: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>, limit: usize) -> Result<()> {
        if k == 0 {
            if out.len() >= limit {
                return Err(Error::Resource(format!("Gelfand-Tsetlin basis exceeds {limit} vectors")));
            }
            out.push(rows.clone());
            return Ok(());
        }
        // Row k (length k) interlaces row k+1: λ_{k+1,i} ≥ λ_{k,i} ≥ λ_{k+1,i+1}.
        let upper = rows[k].clone();
        let mut cur = vec![0i64; k];
        fn choose(i: usize, upper: &[i64], cur: &mut Vec<i64>, k: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>, limit: usize) -> Result<()> {
            if i == cur.len() {
                rows[k - 1] = cur.clone();
                return fill(k - 1, rows, out, limit);
            }
            for v in upper[i + 1]..=upper[i] {
                cur[i] = v;
                choose(i + 1, upper, cur, k, rows, out, limit)?;
            }
            Ok(())
        }
        choose(0, &upper, &mut cur, k, rows, out, limit)
    }

    fill(n - 1, &mut rows, &mut out, limit)?;
    Ok(out)
}

fn l(p: &GtPattern, k: usize, i: usize) -> Rational {
    q(p[k - 1][i - 1] - i as i64 + 1)
}

/// The simple `gl(n)`-module of highest weight `hw` (weakly decreasing).
pub fn gl_simple(n: usize, hw: &[i64]) -> Result<MatrixModule> {
    if hw.len() != n || n == 0 {
        return Err(Error::Parameter(format!("gl({n}) highest weight needs {n} entries")));
    }
    if hw.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain(format!("{hw:?} is not dominant for gl({n})")));
    }
    let basis = gt_patterns(hw, GT_MAX_DIM)?;
    let index: HashMap<&GtPattern, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = basis.len();
    let shape = Shape::new(n, 0);
    let mut actions: Vec<Option<SparseMatrix>> = vec![None; n * n];

    for k in 1..=n {
        let cols = basis
            .iter()
            .map(|p| {
                let below: i64 = if k > 1 { p[k - 2].iter().sum() } else { 0 };
                let mut v = SparseVec::new();
                v.insert(index[p], q(p[k - 1].iter().sum::<i64>() - below));
                v
            })
            .collect();
        actions[shape.index(Unit::new(k, k))] = Some(SparseMatrix::from_columns(dim, cols));
    }

    for k in 1..n {
        let mut raise = Vec::with_capacity(dim);
        let mut lower = Vec::with_capacity(dim);
        for p in &basis {
            let mut up = SparseVec::new();
            let mut down = SparseVec::new();
            for i in 1..=k {
                let lki = l(p, k, i);
                let denom: Rational = (1..=k).filter(|&j| j != i).map(|j| &lki - l(p, k, j)).product();
                let mut shifted = p.clone();
                shifted[k - 1][i - 1] += 1;
                if let Some(&t) = index.get(&shifted) {
                    let num: Rational = (1..=k + 1).map(|j| &lki - l(p, k + 1, j)).product();
                    up.insert(t, -(num / &denom));
                }
                shifted[k - 1][i - 1] -= 2;
                if let Some(&t) = index.get(&shifted) {
                    let num: Rational = (1..k).map(|j| &lki - l(p, k - 1, j)).product();
                    down.insert(t, num / &denom);
                }
            }
            raise.push(up);
            lower.push(down);
        }
        actions[shape.index(Unit::new(k, k + 1))] = Some(SparseMatrix::from_columns(dim, raise));
        actions[shape.index(Unit::new(k + 1, k))] = Some(SparseMatrix::from_columns(dim, lower));
    }

    let commutator = |a: &SparseMatrix, b: &SparseMatrix| {
        SparseMatrix::linear_combination(dim, &[(q(1), &a.mul(b)), (q(-1), &b.mul(a))])
    };
    for gap in 2..n {
        for i in 1..=n - gap {
            let j = i + gap;
            let get = |acts: &Vec<Option<SparseMatrix>>, u: Unit| acts[shape.index(u)].clone().expect("built earlier");
            let up = commutator(&get(&actions, Unit::new(i, j - 1)), &get(&actions, Unit::new(j - 1, j)));
            let down = commutator(&get(&actions, Unit::new(j, j - 1)), &get(&actions, Unit::new(j - 1, i)));
            actions[shape.index(Unit::new(i, j))] = Some(up);
            actions[shape.index(Unit::new(j, i))] = Some(down);
        }
    }

    let actions = actions.into_iter().map(|a| a.expect("all units built")).collect();
    MatrixModule::new(shape, vec![false; dim], actions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(gl_simple(2, &[1, 0]).unwrap().dim(), 2);
        assert_eq!(gl_simple(2, &[2, 0]).unwrap().dim(), 3);
        assert_eq!(gl_simple(3, &[1, 0, 0]).unwrap().dim(), 3);
        assert_eq!(gl_simple(3, &[2, 1, 0]).unwrap().dim(), 8);
        assert_eq!(gl_simple(3, &[0, 0, -2]).unwrap().dim(), 6);
        assert_eq!(gl_simple(4, &[1, 1, 0, 0]).unwrap().dim(), 6);
        assert_eq!(gl_simple(1, &[-7]).unwrap().weights().unwrap(), vec![vec![-7]]);
    }

    #[test]
    fn highest_weight_vector_present() {
        let m = gl_simple(3, &[3, 1, -2]).unwrap();
        let w = m.weights().unwrap();
        assert_eq!(w.iter().filter(|v| **v == vec![3, 1, -2]).count(), 1);
        assert!(w.iter().all(|v| v.iter().sum::<i64>() == 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(gl_simple(2, &[0, 1]), Err(Error::Domain(_))));
        assert!(gl_simple(2, &[0]).is_err());
        assert!(matches!(gl_simple(4, &[60, 40, 20, 0]), Err(Error::Resource(_))));
    }
}
