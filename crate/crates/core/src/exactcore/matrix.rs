//! Dense matrices over exact rings.

use std::fmt;

use num::bigint::BigInt;
use num::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::poly::SparsePoly;
use super::rational::Q;
use super::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}×{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("symbolic determinant limited to size {max}, got {size}")]
    TooLarge { size: usize, max: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Q>;
pub type PolyMatrix = Matrix<SparsePoly>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::Shape { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::Ragged { row: i, expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Deletes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let rs: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.select(&rs, &cs)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(MatrixError::Dimension(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols.max(other.cols), data })
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul_mat(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Dimension(format!(
                "{}×{} times {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc.add(&self.get(i, k).mul(rhs.get(k, j))))
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, MatrixError> {
        if self.cols != v.len() {
            return Err(MatrixError::Dimension(format!("{} columns times vector of length {}", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).fold(T::zero(), |acc, k| acc.add(&self.get(i, k).mul(&v[k]))))
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| Q::from_integer(x.clone()))
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }
}

/// Exact determinant, dispatched on the entry ring.
pub trait Determinant: Ring {
    fn determinant(m: &Matrix<Self>) -> Result<Self, MatrixError>;
}

fn require_square<T>(m: &Matrix<T>) -> Result<(), MatrixError> {
    if m.rows != m.cols {
        return Err(MatrixError::NotSquare { rows: m.rows, cols: m.cols });
    }
    Ok(())
}

impl Determinant for BigInt {
    /// Fraction-free Bareiss elimination.
    fn determinant(m: &Matrix<BigInt>) -> Result<BigInt, MatrixError> {
        require_square(m)?;
        let n = m.rows;
        if n == 0 {
            return Ok(BigInt::from(1));
        }
        let mut a = m.to_rows();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }
}

impl Determinant for Q {
    fn determinant(m: &Matrix<Q>) -> Result<Q, MatrixError> {
        require_square(m)?;
        let n = m.rows;
        let mut a = m.to_rows();
        let mut det = Q::from_integer(BigInt::from(1));
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Q::zero());
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= &a[k][k];
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &a[k][k];
                for j in k..n {
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
        }
        Ok(det)
    }
}

/// Largest size accepted for determinants with polynomial entries.
pub const MAX_SYMBOLIC_DET: usize = 8;

impl Determinant for SparsePoly {
    /// Laplace expansion memoized over column subsets.
    fn determinant(m: &Matrix<SparsePoly>) -> Result<SparsePoly, MatrixError> {
        require_square(m)?;
        if m.rows > MAX_SYMBOLIC_DET {
            return Err(MatrixError::TooLarge { size: m.rows, max: MAX_SYMBOLIC_DET });
        }
        Ok(det_subset_expansion(m))
    }
}

/// Determinant over any commutative ring by expansion along rows, sharing minors on the
/// same column subset. Cost is O(2ⁿ·n) ring operations.
pub fn det_subset_expansion<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.rows;
    // minors[mask] = det of the last popcount(mask) rows restricted to the columns in mask
    let mut minors: Vec<R> = vec![R::zero(); 1 << n];
    minors[0] = R::one();
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = R::zero();
        let mut pos = 0;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = m.get(row, j);
            if !entry.is_zero() {
                let sub = &minors[mask & !(1 << j)];
                if !sub.is_zero() {
                    let term = entry.mul(sub);
                    acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            pos += 1;
        }
        minors[mask] = acc;
    }
    minors[(1 << n) - 1].clone()
}

/// Plain recursive cofactor expansion along the first row.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.rows;
    match n {
        0 => R::one(),
        1 => m.get(0, 0).clone(),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                let term = m.get(0, j).mul(&det_cofactor(&m.minor(0, j)));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

pub fn determinant<T: Determinant>(m: &Matrix<T>) -> Result<T, MatrixError> {
    T::determinant(m)
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub reduced: RatMatrix,
    pub pivots: Vec<usize>,
}

impl RatMatrix {
    pub fn rref(&self) -> Echelon {
        let mut a = self.to_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..cols {
                        let v = &a[i][j] - &f * &a[r][j];
                        a[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: Matrix::from_rows(a).unwrap_or_else(|_| Matrix::zeros(rows, cols)), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right nullspace over Q, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::from_integer(BigInt::from(1));
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `A x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Two-sided inverse, or `None` when singular or non-square.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Q::from_integer(BigInt::from(1))
            } else {
                Q::zero()
            }
        });
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    pub fn max_abs(&self) -> Q {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}
