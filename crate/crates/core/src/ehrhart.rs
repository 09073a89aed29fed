//! The rational polytope `P ⊂ R^{2k}` of weight pairs, its lattice-point
//! counts `|S̃(d)| = #(dP ∩ Z^{2k})`, and Ehrhart quasipolynomial fitting.
//!
//! Coordinates are ordered `(b_1, …, b_k, a_1, …, a_k)`.
//!
//! Every integer point of `dP` lies in the box `[−d, 0]^{2k}`. From the
//! equality, `Σb − Σa = d + Σa`, so the two-sided sum bound gives
//! `Σa ∈ [−d, 0]`. The `a_i` are decreasing with `a_1 ≤ 0`, so each is
//! nonpositive and at least `Σa ≥ −d`. The `b_i` are strictly decreasing from
//! `b_1 < 0`, and `Σb = d + 2Σa ≥ −d`, so the same argument applies.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, qfrac, Matrix, Rational};

/// Largest dilation accepted by the enumerators, indexed by `k`.
pub fn max_dilation(k: usize) -> Option<u64> {
    match k {
        2 => Some(400),
        3 => Some(120),
        _ => None,
    }
}

/// `coeffs · x ≥ rhs` (or `=` when used as an equality).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl LinearConstraint {
    fn from_ints(coeffs: Vec<i64>, rhs: Rational) -> Self {
        LinearConstraint {
            coeffs: coeffs.into_iter().map(q).collect(),
            rhs,
        }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// `coeffs · x − rhs`.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        self.lhs(x) - &self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    pub dim_ambient: usize,
    pub equalities: Vec<LinearConstraint>,
    pub inequalities: Vec<LinearConstraint>,
}

impl RationalPolytope {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|c| c.slack(x).is_zero())
            && self.inequalities.iter().all(|c| !c.slack(x).is_negative())
    }

    pub fn contains_integer(&self, x: &[i64]) -> bool {
        let xs: Vec<Rational> = x.iter().map(|&v| q(v)).collect();
        self.contains(&xs)
    }

    /// Satisfies the equalities and every inequality with positive slack.
    pub fn strictly_contains(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|c| c.slack(x).is_zero())
            && self.inequalities.iter().all(|c| c.slack(x).is_positive())
    }

    pub fn dilate(&self, d: u64) -> RationalPolytope {
        let scale = |c: &LinearConstraint| LinearConstraint {
            coeffs: c.coeffs.clone(),
            rhs: &c.rhs * q(d as i64),
        };
        RationalPolytope {
            dim_ambient: self.dim_ambient,
            equalities: self.equalities.iter().map(scale).collect(),
            inequalities: self.inequalities.iter().map(scale).collect(),
        }
    }

    /// Vertices, found by solving every square system of the equalities plus
    /// `dim − #equalities` tight inequalities.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        let free = self.dim_ambient - self.equalities.len();
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for subset in combinations(self.inequalities.len(), free) {
            let rows: Vec<&LinearConstraint> = self
                .equalities
                .iter()
                .chain(subset.iter().map(|&i| &self.inequalities[i]))
                .collect();
            let a = Matrix::from_rows(rows.iter().map(|c| c.coeffs.clone()).collect());
            let Some(inv) = a.inverse() else { continue };
            let rhs: Vec<Rational> = rows.iter().map(|c| c.rhs.clone()).collect();
            let x = inv.mul_vec(&rhs);
            if self.contains(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    /// Least common multiple of the vertex coordinate denominators. The
    /// Ehrhart period divides it.
    pub fn denominator(&self) -> BigInt {
        self.vertices()
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (r - cur.len()) {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        go(0, n, r, &mut Vec::new(), &mut out);
    }
    out
}

fn require_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "the polytope degenerates for k = {k}; use k1_degenerate_point"
        )));
    }
    Ok(())
}

/// The polytope `P` (the system at `d = 1`).
pub fn build_polytope(k: usize) -> Result<RationalPolytope> {
    require_k(k)?;
    let dim = 2 * k;
    let b = |i: usize| i - 1;
    let a = |i: usize| k + i - 1;
    let unit = |pairs: &[(usize, i64)]| {
        let mut v = vec![0; dim];
        for &(idx, c) in pairs {
            v[idx] += c;
        }
        v
    };
    let gap = qfrac(1, 2 * (k * k) as i64);
    let mut eq = vec![1; k];
    eq.extend(vec![-2; k]);
    let equalities = vec![LinearConstraint::from_ints(eq, q(1))];

    let mut ineq = Vec::new();
    for u in 1..k {
        ineq.push(LinearConstraint::from_ints(unit(&[(b(u), 1), (b(u + 1), -1)]), gap.clone()));
    }
    ineq.push(LinearConstraint::from_ints(unit(&[(b(1), -1)]), gap.clone()));
    for u in 1..k {
        ineq.push(LinearConstraint::from_ints(unit(&[(a(u), 1), (a(u + 1), -1)]), q(0)));
    }
    ineq.push(LinearConstraint::from_ints(unit(&[(a(1), -1)]), q(0)));
    let mut diff = vec![1; k];
    diff.extend(vec![-1; k]);
    ineq.push(LinearConstraint::from_ints(diff.clone(), q(0)));
    ineq.push(LinearConstraint::from_ints(diff.iter().map(|c| -c).collect(), q(-1)));
    for v in 1..=k {
        ineq.push(LinearConstraint::from_ints(unit(&[(b(v), 1), (a(v), -1)]), q(0)));
    }
    Ok(RationalPolytope {
        dim_ambient: dim,
        equalities,
        inequalities: ineq,
    })
}

/// A point of `P` satisfying every inequality strictly.
pub fn interior_witness(k: usize) -> Result<Vec<Rational>> {
    require_k(k)?;
    let kk = q((k * k) as i64);
    let delta = qfrac(3, 5);
    let delta_p = qfrac(7 * k as i64 - 13, 20);
    let mut x: Vec<Rational> = (1..=k)
        .map(|i| -(q(1) + q(i as i64) * &delta) / &kk)
        .collect();
    x.extend((1..=k).map(|i| -(q(1) + q(i as i64) * &delta + &delta_p) / &kk));
    if !build_polytope(k)?.strictly_contains(&x) {
        return Err(Error::Internal(format!("interior witness fails for k = {k}")));
    }
    Ok(x)
}

/// The single point the system collapses to when `k = 1`.
pub fn k1_degenerate_point() -> [i64; 2] {
    [-1, -1]
}

fn check_bounds(k: usize, d: u64) -> Result<()> {
    require_k(k)?;
    if d == 0 {
        return Err(Error::Domain("dilation must be positive".into()));
    }
    match max_dilation(k) {
        Some(max) if d <= max => Ok(()),
        Some(max) => Err(Error::Resource(format!("k = {k} enumeration limited to d <= {max}"))),
        None => Err(Error::Resource(format!("enumeration limited to k <= 3 (got {k})"))),
    }
}

/// Walks the integer points of `dP` in lexicographic order, calling `visit`
/// on each. `b1` is fixed by the caller so the outer loop can be split.
fn walk<F: FnMut(&[i64])>(k: usize, d: i64, b1: i64, visit: &mut F) {
    let gap = (d + 2 * (k * k) as i64 - 1) / (2 * (k * k) as i64);
    let mut point = vec![0i64; 2 * k];
    point[0] = b1;

    fn walk_b<F: FnMut(&[i64])>(k: usize, d: i64, gap: i64, idx: usize, sum: i64, p: &mut Vec<i64>, visit: &mut F) {
        if idx == k {
            if (sum - d).rem_euclid(2) != 0 || sum < -d {
                return;
            }
            let target = (sum - d) / 2;
            walk_a(k, d, 0, 0, target, p, visit);
            return;
        }
        let prev = p[idx - 1];
        // Σb ≥ −d with b_{idx+t} ≤ prev − (t+1)·gap for the remaining slots.
        let rest = (k - idx) as i64;
        for v in -d..=prev - gap {
            let max_tail = v * rest - gap * (rest - 1) * rest / 2;
            if sum + max_tail < -d {
                continue;
            }
            p[idx] = v;
            walk_b(k, d, gap, idx + 1, sum + v, p, visit);
        }
    }

    fn walk_a<F: FnMut(&[i64])>(k: usize, d: i64, idx: usize, sum: i64, target: i64, p: &mut Vec<i64>, visit: &mut F) {
        // a_1 ≤ 0, a_j ≤ a_{j−1}, a_j ≤ b_j.
        let prev = if idx == 0 { 0 } else { p[k + idx - 1] };
        let hi = prev.min(p[idx]);
        if idx == k - 1 {
            let v = target - sum;
            if v >= -d && v <= hi {
                p[k + idx] = v;
                visit(p);
            }
            return;
        }
        let remaining = (k - idx - 1) as i64;
        for v in -d..=hi {
            // Remaining a's lie in [−d, min(v, b_j)].
            let upper: i64 = (idx + 1..k).map(|j| v.min(p[j])).sum();
            let need = target - sum - v;
            if need < -d * remaining || need > upper {
                continue;
            }
            p[k + idx] = v;
            walk_a(k, d, idx + 1, sum + v, target, p, visit);
        }
    }

    walk_b(k, d, gap, 1, b1, &mut point, visit);
}

fn b1_range(k: usize, d: u64) -> std::ops::RangeInclusive<i64> {
    let d = d as i64;
    let gap = (d + 2 * (k * k) as i64 - 1) / (2 * (k * k) as i64);
    -d..=-gap
}

/// All integer points of `dP`, in lexicographic order.
pub fn enumerate_lattice_points(k: usize, d: u64) -> Result<Vec<Vec<i64>>> {
    check_bounds(k, d)?;
    let chunks: Vec<Vec<Vec<i64>>> = b1_range(k, d)
        .into_par_iter()
        .map(|b1| {
            let mut pts = Vec::new();
            walk(k, d as i64, b1, &mut |p: &[i64]| pts.push(p.to_vec()));
            pts
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// `|S̃(d)|` without materialising the points.
pub fn count_lattice_points(k: usize, d: u64) -> Result<u64> {
    check_bounds(k, d)?;
    Ok(b1_range(k, d)
        .into_par_iter()
        .map(|b1| {
            let mut n = 0u64;
            walk(k, d as i64, b1, &mut |_| n += 1);
            n
        })
        .sum())
}

/// Counts for every `d` in `range`.
pub fn count_range(k: usize, range: std::ops::RangeInclusive<u64>) -> Result<BTreeMap<u64, u64>> {
    range.map(|d| Ok((d, count_lattice_points(k, d)?))).collect()
}

/// Polynomial with exact coefficients, constant term first.
pub type Poly = Vec<Rational>;

pub fn eval_poly(p: &[Rational], x: i64) -> Rational {
    let x = q(x);
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
}

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Unique polynomial of degree `< xs.len()` through the points, via Newton
/// divided differences expanded to the monomial basis.
pub fn interpolate(xs: &[i64], ys: &[Rational]) -> Poly {
    let n = xs.len();
    let mut coef: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / q(xs[i] - xs[i - j]);
        }
    }
    let mut poly = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (x − xs[i]) + coef[i]
        let mut next = vec![Rational::zero(); n];
        for (p, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if p + 1 < n {
                next[p + 1] += c;
            }
            next[p] -= c * q(xs[i]);
        }
        next[0] += &coef[i];
        poly = next;
    }
    poly
}

/// `L(d) = polys[d mod period](d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: usize,
    pub polys: Vec<Poly>,
}

impl QuasiPolynomial {
    pub fn eval(&self, d: u64) -> Rational {
        eval_poly(&self.polys[(d % self.period as u64) as usize], d as i64)
    }

    pub fn degree(&self) -> Option<usize> {
        self.polys.iter().filter_map(|p| degree(p)).max()
    }

    /// The shared leading coefficient, if every constituent has the full degree and they agree.
    pub fn leading_coefficient(&self) -> Option<Rational> {
        let deg = self.degree()?;
        let first = self.polys[0].get(deg)?.clone();
        self.polys
            .iter()
            .all(|p| p.get(deg) == Some(&first))
            .then_some(first)
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, p) in self.polys.iter().enumerate() {
            let terms: Vec<String> = p.iter().enumerate().map(|(i, c)| format!("{c}*d^{i}")).collect();
            writeln!(f, "d = {r} mod {}: {}", self.period, terms.join(" + "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QuasiPolyRepr {
    period: usize,
    coefficients: Vec<Vec<String>>,
}

impl Serialize for QuasiPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuasiPolyRepr {
            period: self.period,
            coefficients: self
                .polys
                .iter()
                .map(|p| p.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = QuasiPolyRepr::deserialize(de)?;
        if r.period == 0 || r.coefficients.len() != r.period {
            return Err(D::Error::custom("period must equal the number of constituents"));
        }
        let polys = r
            .coefficients
            .iter()
            .map(|p| p.iter().map(|c| c.parse::<Rational>().map_err(D::Error::custom)).collect())
            .collect::<std::result::Result<Vec<Poly>, _>>()?;
        Ok(QuasiPolynomial { period: r.period, polys })
    }
}

/// Default period search bound: the denominator of `P`.
pub fn period_bound(k: usize) -> Result<usize> {
    build_polytope(k)?
        .denominator()
        .to_usize()
        .ok_or_else(|| Error::Internal("polytope denominator overflow".into()))
}

/// Least period `M ≤ max_period` for which per-residue interpolation of
/// degree `2k − 1` reproduces every count. Periods for which some residue
/// class has no held-out point are skipped as untestable.
pub fn fit_quasipolynomial(counts: &BTreeMap<u64, u64>, k: usize, max_period: usize) -> Result<QuasiPolynomial> {
    require_k(k)?;
    let npts = 2 * k;
    let mut largest_testable = None;
    'period: for m in 1..=max_period {
        let mut classes: Vec<Vec<(u64, u64)>> = vec![Vec::new(); m];
        for (&d, &c) in counts {
            classes[(d % m as u64) as usize].push((d, c));
        }
        if classes.iter().any(|cl| cl.len() <= npts) {
            continue;
        }
        largest_testable = Some(m);
        let mut polys = Vec::with_capacity(m);
        for cl in &classes {
            let xs: Vec<i64> = cl[..npts].iter().map(|&(d, _)| d as i64).collect();
            let ys: Vec<Rational> = cl[..npts].iter().map(|&(_, c)| q(c as i64)).collect();
            let p = trim(interpolate(&xs, &ys));
            if cl[npts..].iter().any(|&(d, c)| eval_poly(&p, d as i64) != q(c as i64)) {
                continue 'period;
            }
            polys.push(p);
        }
        let qp = QuasiPolynomial { period: m, polys };
        if qp.degree() != Some(npts - 1) {
            return Err(Error::Fit(format!(
                "period {m} fits but has degree {:?}, expected {}",
                qp.degree(),
                npts - 1
            )));
        }
        return match qp.leading_coefficient() {
            Some(lc) if lc.is_positive() => Ok(qp),
            _ => Err(Error::Fit(format!(
                "period {m} fits but constituents lack a shared positive leading coefficient"
            ))),
        };
    }
    Err(Error::Fit(match largest_testable {
        Some(m) => format!("no consistent period up to {max_period} (largest testable {m})"),
        None => format!("too few counts to test any period up to {max_period}"),
    }))
}

/// Coefficient-wise minimum over the constituents, a polynomial `Q` with
/// `Q(d) ≤ L(d)` for all `d ≥ 0`.
pub fn lower_bound_poly(qp: &QuasiPolynomial) -> Poly {
    let len = qp.polys.iter().map(Vec::len).max().unwrap_or(0);
    let coeff = |p: &Poly, i: usize| p.get(i).cloned().unwrap_or_else(Rational::zero);
    trim(
        (0..len)
            .map(|i| qp.polys.iter().map(|p| coeff(p, i)).min().expect("period >= 1"))
            .collect(),
    )
}

/// Log-log slope of the counts over `[lo, hi]`.
pub fn loglog_slope(counts: &BTreeMap<u64, u64>, lo: u64, hi: u64) -> Option<f64> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = counts
        .range(lo..=hi)
        .filter(|(_, &c)| c > 0)
        .map(|(&d, &c)| ((d as f64).ln(), (c as f64).ln()))
        .unzip();
    crate::linalg::least_squares_slope(&xs, &ys)
}
