//! Dense exact matrices over a [`Field`] with Gauss-Jordan elimination.
//!
//! Pivots are chosen as the first nonzero entry scanning down the current
//! column, so every result is deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<S: Field> {
    rows: usize,
    cols: usize,
    ctx: S::Ctx,
    data: Vec<S>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<S: Field> {
    pub reduced: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: Field> Matrix<S> {
    pub fn zeros(ctx: S::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            ctx,
            data: vec![S::zero_in(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: S::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one_in(ctx);
        }
        m
    }

    /// A `1 x 1` matrix.
    pub fn scalar(value: S) -> Self {
        Matrix {
            rows: 1,
            cols: 1,
            ctx: value.ctx(),
            data: vec![value],
        }
    }

    pub fn from_rows(ctx: S::Ctx, cols: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            ctx,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(ctx: S::Ctx, rows: usize, columns: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(ctx, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn ctx(&self) -> S::Ctx {
        self.ctx
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Panics on a shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("matrix product shape")
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero_in(self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, S::add)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, S::sub)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("matrix sum shape")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("matrix difference shape")
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn rref(&self) -> Echelon<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pivot_entry = m.get(r, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).sub(&factor.mul(pivot_entry));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero_in(self.ctx); self.cols];
                v[f] = S::one_in(self.ctx);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = reduced.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    /// A basis of the column space, taken from the original pivot columns.
    pub fn column_basis(&self) -> Vec<Vec<S>> {
        self.rref()
            .pivots
            .into_iter()
            .map(|c| self.column(c))
            .collect()
    }

    /// Some solution of `A x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Self::zeros(self.ctx, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero_in(self.ctx); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(row, self.cols).clone();
        }
        Some(x)
    }
}

impl<S: Field> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

/// Dimension of the span of a list of vectors of length `len`.
pub fn span_dim<S: Field>(ctx: S::Ctx, len: usize, vectors: &[Vec<S>]) -> usize {
    Matrix::from_columns(ctx, len, vectors).rank()
}
