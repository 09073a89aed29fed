//! Matrix units of `gl(m|n)` and their superbracket. `n = 0` gives `gl(m)`.

use serde::{Deserialize, Serialize};

/// Ambient algebra `gl(m|n)`; unlike [`crate::SuperParams`] this allows `n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
}

/// The matrix unit `E_ij`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Unit {
    pub i: usize,
    pub j: usize,
}

impl Unit {
    pub const fn new(i: usize, j: usize) -> Self {
        Unit { i, j }
    }
}

impl std::fmt::Display for Unit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "E{},{}", self.i, self.j)
    }
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Self {
        Shape { m, n }
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn is_odd(&self, u: Unit) -> bool {
        (u.i <= self.m) != (u.j <= self.m)
    }

    /// Position of `u` in [`Shape::units`].
    pub fn index(&self, u: Unit) -> usize {
        (u.i - 1) * self.rank() + (u.j - 1)
    }

    pub fn units(&self) -> impl Iterator<Item = Unit> {
        let r = self.rank();
        (1..=r).flat_map(move |i| (1..=r).map(move |j| Unit::new(i, j)))
    }

    /// `E_{i,m+j}`, the basis of `g_1`.
    pub fn plus_units(&self) -> Vec<Unit> {
        let (m, n) = (self.m, self.n);
        (1..=m).flat_map(|i| (1..=n).map(move |j| Unit::new(i, m + j))).collect()
    }

    /// `E_{m+j,i}`, the basis of `g_{-1}`.
    pub fn minus_units(&self) -> Vec<Unit> {
        let (m, n) = (self.m, self.n);
        (1..=m).flat_map(|i| (1..=n).map(move |j| Unit::new(m + j, i))).collect()
    }
}

/// `[E_ij, E_kl] = δ_jk E_il − (−1)^{|E_ij||E_kl|} δ_li E_kj`.
pub fn bracket(shape: Shape, a: Unit, b: Unit) -> Vec<(Unit, i64)> {
    let sign = if shape.is_odd(a) && shape.is_odd(b) { 1 } else { -1 };
    let mut out: Vec<(Unit, i64)> = Vec::with_capacity(2);
    if a.j == b.i {
        out.push((Unit::new(a.i, b.j), 1));
    }
    if b.j == a.i {
        let u = Unit::new(b.i, a.j);
        match out.iter_mut().find(|(v, _)| *v == u) {
            Some(entry) => entry.1 += sign,
            None => out.push((u, sign)),
        }
    }
    out.retain(|(_, c)| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        let s = Shape::new(1, 1);
        let (e11, e12, e21, e22) = (Unit::new(1, 1), Unit::new(1, 2), Unit::new(2, 1), Unit::new(2, 2));
        assert_eq!(bracket(s, e12, e21), vec![(e11, 1), (e22, 1)]);
        assert_eq!(bracket(s, e11, e12), vec![(e12, 1)]);
        assert_eq!(bracket(s, e11, e11), vec![]);
        assert_eq!(bracket(s, e12, e12), vec![]);
        let g = Shape::new(2, 0);
        assert_eq!(bracket(g, Unit::new(1, 2), Unit::new(2, 1)), vec![(Unit::new(1, 1), 1), (Unit::new(2, 2), -1)]);
    }

    #[test]
    fn unit_bookkeeping() {
        let s = Shape::new(2, 1);
        assert_eq!(s.units().count(), 9);
        assert!(s.units().enumerate().all(|(k, u)| s.index(u) == k));
        assert_eq!(s.plus_units(), vec![Unit::new(1, 3), Unit::new(2, 3)]);
        assert_eq!(s.minus_units(), vec![Unit::new(3, 1), Unit::new(3, 2)]);
        assert!(s.plus_units().iter().all(|&u| s.is_odd(u)));
    }
}
