use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} over F_{} [", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.to_signed(self.get(r, c)))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of residues; all rows must share a length.
    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| x % field.order()).collect(),
        })
    }

    /// Like [`Matrix::from_rows`] but with explicit shape, allowing zero rows.
    pub fn from_rows_shaped(field: Field, rows: usize, cols: usize, entries: &[Vec<u64>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("expected {rows}x{cols} entries")));
        }
        let mut m = Self::zeros(field, rows, cols);
        for (i, r) in entries.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x % field.order());
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        let conv: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, &conv)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
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
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn data_mut(&mut self) -> &mut [u64] {
        &mut self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product. Panics if the inner dimensions differ.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let q = f.order();
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        // Accumulate without reduction while it is safe to do so.
        let batch = (u64::MAX / ((q - 1) * (q - 1)).max(1)).min(1 << 20) as usize;
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0usize;
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b;
                }
                pending += 1;
                if pending >= batch {
                    acc.iter_mut().for_each(|x| *x %= q);
                    pending = 0;
                }
            }
            for (j, x) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = x % q;
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: u64) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// Row vector times matrix: `v · self`.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        out
    }

    /// Matrix times column vector: `self · x`.
    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(x).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Sub-matrix of the given columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(prow, sel);
            let inv = f.inv(m.get(prow, c));
            for j in c..m.cols {
                let v = m.get(prow, j);
                m.set(prow, j, f.mul(v, inv));
            }
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(prow, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column of the
    /// reduced echelon form (free entry 1, other free entries 0).
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · x = b`; `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let f = self.field;
        let col = Matrix {
            field: f,
            rows: self.rows,
            cols: 1,
            data: b.iter().map(|&x| x % f.order()).collect(),
        };
        let (r, pivots) = self.hstack(&col).rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let (r, pivots) = self.hstack(&Matrix::identity(self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.select_cols(&cols))
    }
}

/// A subspace of F_q^n given by a list of basis rows, able to express
/// members in coordinates of exactly those rows.
#[derive(Clone, Debug)]
pub struct RowBasis {
    basis: Matrix,
    pivot_cols: Vec<usize>,
    pivot_inv: Matrix,
}

impl RowBasis {
    /// The rows of `basis` must be linearly independent.
    pub fn new(basis: Matrix) -> Result<Self> {
        let (_, pivots) = basis.transpose().rref();
        // pivots of the transpose = independent rows of basis
        if pivots.len() != basis.rows() {
            return Err(Error::Dimension("basis rows are dependent".into()));
        }
        let (_, pivot_cols) = basis.rref();
        let pivot_inv = basis
            .select_cols(&pivot_cols)
            .inverse()
            .expect("pivot minor of a full-rank basis is invertible");
        Ok(RowBasis { basis, pivot_cols, pivot_inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates `c` with `c · basis = y`, or an error if `y` lies outside.
    pub fn coords(&self, y: &[u64]) -> Result<Vec<u64>> {
        let yp: Vec<u64> = self.pivot_cols.iter().map(|&c| y[c]).collect();
        let c = self.pivot_inv.vec_mul(&yp);
        if self.basis.vec_mul(&c) != y {
            return Err(Error::Dimension("vector outside the subspace".into()));
        }
        Ok(c)
    }
}
