//! Exact rational linear algebra.
//!
//! [`Matrix`] is a dense row-major matrix used for elimination (rank,
//! kernels, solving). [`SparseMatrix`] stores square action matrices column
//! by column; module actions built from Gelfand-Tsetlin and PBW formulas are
//! very sparse, so products and bracket checks stay cheap.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, c)] - &factor * &m[(row, c)];
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Some(inv)
    }
}

/// Coordinates with respect to a fixed basis of a subspace.
///
/// Built from linearly independent columns; [`SubspaceCoords::coords`]
/// recovers the unique coefficients of a vector lying in their span and
/// rejects vectors outside it.
#[derive(Clone, Debug)]
pub struct SubspaceCoords {
    basis: Matrix,
    rows: Vec<usize>,
    inv: Matrix,
}

impl SubspaceCoords {
    pub fn new(basis: Matrix) -> Result<Self> {
        let r = basis.cols();
        if r == 0 {
            return Ok(SubspaceCoords {
                basis,
                rows: Vec::new(),
                inv: Matrix::zeros(0, 0),
            });
        }
        let (_, rows) = basis.transpose().rref();
        if rows.len() != r {
            return Err(Error::Internal("subspace basis is linearly dependent".into()));
        }
        let mut square = Matrix::zeros(r, r);
        for (i, &row) in rows.iter().enumerate() {
            for c in 0..r {
                square[(i, c)] = basis[(row, c)].clone();
            }
        }
        let inv = square
            .inverse()
            .ok_or_else(|| Error::Internal("selected minor is singular".into()))?;
        Ok(SubspaceCoords { basis, rows, inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let restricted: Vec<Rational> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = if self.dim() == 0 { Vec::new() } else { self.inv.mul_vec(&restricted) };
        let back = if self.dim() == 0 {
            vec![Rational::zero(); v.len()]
        } else {
            self.basis.mul_vec(&c)
        };
        if back.as_slice() != v {
            return Err(Error::Internal("vector does not lie in the subspace".into()));
        }
        Ok(c)
    }
}

/// Sparse vector keyed by basis index.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn sparse_add_scaled(acc: &mut SparseVec, v: &SparseVec, scale: &Rational) {
    for (&i, x) in v {
        let entry = acc.entry(i).or_insert_with(Rational::zero);
        *entry += x * scale;
        if entry.is_zero() {
            acc.remove(&i);
        }
    }
}

/// Square sparse matrix stored by columns: `cols[j]` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    cols: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            dim,
            cols: (0..dim).map(|j| vec![(j, Rational::one())]).collect(),
        }
    }

    /// Builds a matrix from the images of basis vectors; zero entries are dropped.
    pub fn from_columns(dim: usize, cols: Vec<SparseVec>) -> Self {
        assert_eq!(cols.len(), dim);
        SparseMatrix {
            dim,
            cols: cols
                .into_iter()
                .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        assert_eq!(m.rows(), m.cols());
        let dim = m.rows();
        let cols = (0..dim)
            .map(|c| {
                (0..dim)
                    .filter(|&r| !m[(r, c)].is_zero())
                    .map(|r| (r, m[(r, c)].clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, x) in v {
            for (i, a) in &self.cols[j] {
                let e = out.entry(*i).or_insert_with(Rational::zero);
                *e += a * x;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let cols = other
            .cols
            .iter()
            .map(|col| self.apply(&col.iter().cloned().collect()))
            .collect();
        Self::from_columns(self.dim, cols)
    }

    pub fn linear_combination(dim: usize, terms: &[(Rational, &SparseMatrix)]) -> SparseMatrix {
        let mut cols = vec![SparseVec::new(); dim];
        for (coef, m) in terms {
            assert_eq!(m.dim, dim);
            for (j, col) in m.cols.iter().enumerate() {
                for (i, a) in col {
                    let e = cols[j].entry(*i).or_insert_with(Rational::zero);
                    *e += coef * a;
                }
            }
        }
        Self::from_columns(dim, cols)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, a) in col {
                m[(*i, j)] = a.clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_dense().rank()
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let shift = self.dim;
        let mut cols = self.cols.clone();
        cols.extend(
            other
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, a)| (i + shift, a.clone())).collect()),
        );
        SparseMatrix {
            dim: self.dim + other.dim,
            cols,
        }
    }

    /// Largest absolute numerator or denominator; a cheap growth diagnostic.
    pub fn max_height(&self) -> BigInt {
        self.cols
            .iter()
            .flatten()
            .map(|(_, a)| a.numer().abs().max(a.denom().abs()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Ordinary least-squares slope of `ys` against `xs`; `None` with fewer than two distinct `xs`.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    if xs.len() < 2 || xs.len() != ys.len() {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
