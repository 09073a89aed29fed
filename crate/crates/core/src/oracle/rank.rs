//! Rank-variety tests: freeness over the algebra generated by one odd
//! square-zero element.

use super::algebra::Unit;
use super::kac::kac_module;
use super::module::MatrixModule;
use crate::error::{Error, Result};
use crate::linalg::{q, Rational, SparseMatrix};
use crate::weight::{is_principal_block, Weight};

/// `true` iff `M` is free over `⟨x⟩`, i.e. `rank X = dim M / 2`.
pub fn odd_projectivity_test(module: &MatrixModule, x: &SparseMatrix) -> Result<bool> {
    if x.dim() != module.dim() {
        return Err(Error::Parameter("element matrix does not match the module".into()));
    }
    if !x.mul(x).is_zero() {
        return Err(Error::Precondition("x does not act with square zero".into()));
    }
    Ok(2 * x.rank() == module.dim())
}

/// Which odd half a rank representative lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn from_sign(sign: i32) -> Result<Side> {
        match sign {
            1 => Ok(Side::Plus),
            -1 => Ok(Side::Minus),
            other => Err(Error::Parameter(format!("side must be +1 or -1, got {other}"))),
        }
    }
}

fn oriented(u: Unit, side: Side) -> Unit {
    match side {
        Side::Plus => u,
        Side::Minus => Unit::new(u.j, u.i),
    }
}

/// `E_{1,m+1} + … + E_{r,m+r}` (transposed for [`Side::Minus`]).
pub fn rank_representative(m: usize, r: usize, side: Side) -> Vec<(Unit, Rational)> {
    (1..=r).map(|t| (oriented(Unit::new(t, m + t), side), q(1))).collect()
}

/// `E_{m,m+1} + … + E_{m−r+1,m+r}`: a rank-`r` element of `f_{±1}`.
pub fn detecting_representative(m: usize, r: usize, side: Side) -> Vec<(Unit, Rational)> {
    (1..=r).map(|t| (oriented(Unit::new(m - t + 1, m + t), side), q(1))).collect()
}

fn largest_failing_rank(module: &MatrixModule, side: Side, rep: fn(usize, usize, Side) -> Vec<(Unit, Rational)>) -> Result<usize> {
    let shape = module.shape();
    for r in (1..=shape.n.min(shape.m)).rev() {
        let x = module.element(&rep(shape.m, r, side));
        if !odd_projectivity_test(module, &x)? {
            return Ok(r);
        }
    }
    Ok(0)
}

/// Largest `r` whose rank-`r` representative in `g_{±1}` is not free on `M`.
pub fn rank_variety(module: &MatrixModule, side: Side) -> Result<usize> {
    largest_failing_rank(module, side, rank_representative)
}

/// As [`rank_variety`] but restricted to the detecting subalgebra `f`.
pub fn detecting_rank(module: &MatrixModule, side: Side) -> Result<usize> {
    largest_failing_rank(module, side, detecting_representative)
}

/// Whether `K(λ)` has a trivial summand over `⟨I_k⟩` for principal-block `λ` of `gl(k|k)`.
pub fn trivial_summand_check(lam: &Weight) -> Result<bool> {
    if !is_principal_block(lam) {
        return Err(Error::Domain(format!("{lam} is not in the principal block of gl(k|k)")));
    }
    let k = lam.params().m();
    let module = kac_module(lam)?;
    let x = module.element(&rank_representative(k, k, Side::Plus));
    if !x.mul(&x).is_zero() {
        return Err(Error::Precondition("I_k does not square to zero".into()));
    }
    Ok(2 * x.rank() < module.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::algebra::Shape;
    use crate::weight::SuperParams;

    fn w(m: usize, n: usize, c: &[i64]) -> Weight {
        Weight::new(SuperParams::new(m, n).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn trivial_module_is_never_free() {
        let shape = Shape::new(1, 1);
        let triv = MatrixModule::new(shape, vec![false], vec![SparseMatrix::zero(1); 4]).unwrap();
        let x = triv.element(&[(Unit::new(1, 2), q(1))]);
        assert!(!odd_projectivity_test(&triv, &x).unwrap());
    }

    #[test]
    fn gl11_kac() {
        let k = kac_module(&w(1, 1, &[0, 0])).unwrap();
        assert!(odd_projectivity_test(&k, k.action(Unit::new(2, 1))).unwrap());
        assert!(!odd_projectivity_test(&k, k.action(Unit::new(1, 2))).unwrap());
    }

    #[test]
    fn square_zero_precondition() {
        // x² = E11 + E22 acts by 1 on the typical K(1, 0).
        let k = kac_module(&w(1, 1, &[1, 0])).unwrap();
        let x = k.element(&[(Unit::new(1, 2), q(1)), (Unit::new(2, 1), q(1))]);
        assert!(matches!(odd_projectivity_test(&k, &x), Err(Error::Precondition(_))));
    }

    #[test]
    fn kac_rank_varieties() {
        let k = kac_module(&w(2, 1, &[0, 0, 0])).unwrap();
        assert_eq!(rank_variety(&k, Side::Plus).unwrap(), 1);
        assert_eq!(rank_variety(&k, Side::Minus).unwrap(), 0);
        let typ = kac_module(&w(2, 1, &[1, 1, 0])).unwrap();
        assert_eq!(rank_variety(&typ, Side::Plus).unwrap(), 0);
        assert_eq!(rank_variety(&typ, Side::Minus).unwrap(), 0);
        let k22 = kac_module(&w(2, 2, &[0, 0, 0, 0])).unwrap();
        assert_eq!(rank_variety(&k22, Side::Plus).unwrap(), 2);
    }

    #[test]
    fn trivial_summands() {
        assert!(trivial_summand_check(&w(1, 1, &[0, 0])).unwrap());
        assert!(trivial_summand_check(&w(2, 2, &[0, 0, 0, 0])).unwrap());
        assert!(trivial_summand_check(&w(2, 1, &[1, 1, 0])).is_err());
        assert_eq!(Side::from_sign(-1).unwrap(), Side::Minus);
        assert!(Side::from_sign(0).is_err());
    }
}
