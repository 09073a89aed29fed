//! Finite-dimensional supermodules given by explicit action matrices.

use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use super::algebra::{bracket, Shape, Unit};
use crate::error::{Error, Result};
use crate::linalg::{q, Rational, SparseMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModule {
    shape: Shape,
    /// `true` marks an odd basis vector.
    parity: Vec<bool>,
    /// Indexed by [`Shape::index`].
    actions: Vec<SparseMatrix>,
}

impl MatrixModule {
    /// Validates dimensions, parity and every superbracket relation.
    pub fn new(shape: Shape, parity: Vec<bool>, actions: Vec<SparseMatrix>) -> Result<Self> {
        let module = Self::new_unchecked(shape, parity, actions)?;
        module.check_parity()?;
        module.check_brackets()?;
        Ok(module)
    }

    /// Validates only the shapes of the data.
    pub fn new_unchecked(shape: Shape, parity: Vec<bool>, actions: Vec<SparseMatrix>) -> Result<Self> {
        let r = shape.rank();
        if actions.len() != r * r {
            return Err(Error::Internal(format!("expected {} action matrices, got {}", r * r, actions.len())));
        }
        if actions.iter().any(|a| a.dim() != parity.len()) {
            return Err(Error::Internal("action matrix size differs from module dimension".into()));
        }
        Ok(MatrixModule { shape, parity, actions })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[bool] {
        &self.parity
    }

    pub fn action(&self, u: Unit) -> &SparseMatrix {
        &self.actions[self.shape.index(u)]
    }

    /// Action matrix of `Σ c_u E_u`.
    pub fn element(&self, terms: &[(Unit, Rational)]) -> SparseMatrix {
        let parts: Vec<(Rational, &SparseMatrix)> = terms.iter().map(|(u, c)| (c.clone(), self.action(*u))).collect();
        SparseMatrix::linear_combination(self.dim(), &parts)
    }

    /// Homogeneous generators must shift parity by their own parity.
    pub fn check_parity(&self) -> Result<()> {
        for u in self.shape.units() {
            let odd = self.shape.is_odd(u);
            let a = self.action(u);
            for j in 0..self.dim() {
                if let Some((i, _)) = a.column(j).iter().find(|(i, _)| self.parity[*i] != (self.parity[j] ^ odd)) {
                    return Err(Error::Internal(format!("{u} maps basis vector {j} to {i} with the wrong parity")));
                }
            }
        }
        Ok(())
    }

    /// `ρ(a)ρ(b) − (−1)^{|a||b|}ρ(b)ρ(a) = ρ([a, b])` for all pairs of units.
    pub fn check_brackets(&self) -> Result<()> {
        let units: Vec<Unit> = self.shape.units().collect();
        let dim = self.dim();
        for (ia, &a) in units.iter().enumerate() {
            for &b in &units[ia..] {
                let sign = if self.shape.is_odd(a) && self.shape.is_odd(b) { q(1) } else { q(-1) };
                let ab = self.action(a).mul(self.action(b));
                let ba = self.action(b).mul(self.action(a));
                let lhs = SparseMatrix::linear_combination(dim, &[(q(1), &ab), (sign, &ba)]);
                let rhs_terms: Vec<(Rational, &SparseMatrix)> = bracket(self.shape, a, b)
                    .into_iter()
                    .map(|(u, c)| (q(c), self.action(u)))
                    .collect();
                let rhs = SparseMatrix::linear_combination(dim, &rhs_terms);
                if lhs != rhs {
                    return Err(Error::Internal(format!("bracket relation fails for [{a}, {b}]")));
                }
            }
        }
        Ok(())
    }

    /// Integral weight of each basis vector, read off the diagonal units.
    pub fn weights(&self) -> Result<Vec<Vec<i64>>> {
        let r = self.shape.rank();
        let mut out = vec![vec![0i64; r]; self.dim()];
        for a in 1..=r {
            let h = self.action(Unit::new(a, a));
            for (j, w) in out.iter_mut().enumerate() {
                let col = h.column(j);
                let val = match col {
                    [] => Rational::zero(),
                    [(i, v)] if *i == j => v.clone(),
                    _ => return Err(Error::Internal(format!("basis vector {j} is not a weight vector"))),
                };
                if !val.is_integer() {
                    return Err(Error::Internal(format!("non-integral weight on basis vector {j}")));
                }
                w[a - 1] = val.to_integer().to_i64().ok_or_else(|| Error::Internal("weight overflow".into()))?;
            }
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &MatrixModule) -> Result<MatrixModule> {
        if self.shape != other.shape {
            return Err(Error::Parameter("direct sum of modules over different algebras".into()));
        }
        let mut parity = self.parity.clone();
        parity.extend(&other.parity);
        let actions = self.actions.iter().zip(&other.actions).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(MatrixModule { shape: self.shape, parity, actions })
    }

    /// The parity-shifted module `ΠM`.
    pub fn parity_shift(&self) -> MatrixModule {
        let mut out = self.clone();
        out.parity.iter_mut().for_each(|p| *p = !*p);
        out
    }

    /// Dense CSV dump of one action matrix; entries are exact rationals.
    pub fn action_csv(&self, u: Unit) -> String {
        let dense = self.action(u).to_dense();
        let mut s = String::new();
        for r in 0..dense.rows() {
            let row: Vec<String> = dense.row(r).iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{}", row.join(","));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial(shape: Shape) -> MatrixModule {
        let r = shape.rank();
        MatrixModule::new(shape, vec![false], vec![SparseMatrix::zero(1); r * r]).unwrap()
    }

    #[test]
    fn trivial_module_passes_checks() {
        let m = trivial(Shape::new(2, 1));
        assert_eq!(m.dim(), 1);
        assert_eq!(m.weights().unwrap(), vec![vec![0, 0, 0]]);
        assert_eq!(m.direct_sum(&m).unwrap().dim(), 2);
    }

    #[test]
    fn broken_relation_is_rejected() {
        let shape = Shape::new(1, 0);
        let bad = vec![SparseMatrix::identity(2)];
        assert!(MatrixModule::new(shape, vec![false, false], bad).is_ok());
        // gl(1|1) with E12 = E21 = identity on an even/odd pair violates parity.
        let s = Shape::new(1, 1);
        let acts = vec![SparseMatrix::zero(1), SparseMatrix::identity(1), SparseMatrix::identity(1), SparseMatrix::zero(1)];
        assert!(MatrixModule::new(s, vec![false], acts).is_err());
    }

    #[test]
    fn csv_export() {
        let m = trivial(Shape::new(1, 1));
        assert_eq!(m.action_csv(Unit::new(1, 1)), "0\n");
    }
}
