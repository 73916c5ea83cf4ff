//! Minimal dense matrices for desk-scale spectral work.
//!
//! Nothing here tries to be a linear-algebra library: the spectral module
//! needs row-major storage, matrix-vector products for residual checks, and a
//! symmetric variant whose storage is symmetric by construction (the
//! eigensolver relies on exact symmetry, not symmetry up to rounding).

use std::ops::{Index, IndexMut};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Identity of the given order.
    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order, order);
        for i in 0..order {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.cols + col] = value;
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = vec![0.0; self.rows];
        for (i, out_i) in out.iter_mut().enumerate() {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            *out_i = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn column(&self, col: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    /// Reorders columns; used to sort eigenvectors alongside eigenvalues.
    pub fn permuted_columns(&self, order: &[usize]) -> DenseMatrix {
        assert_eq!(order.len(), self.cols);
        let mut out = Self::zeros(self.rows, self.cols);
        for (new_col, &old_col) in order.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, new_col, self.get(r, old_col));
            }
        }
        out
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (row, col): (usize, usize)) -> &f64 {
        &self.data[row * self.cols + col]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut f64 {
        &mut self.data[row * self.cols + col]
    }
}

/// Square matrix kept exactly symmetric: every write lands on both `(i, j)`
/// and `(j, i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymmetricMatrix {
    inner: DenseMatrix,
}

impl DenseSymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseSymmetricMatrix {
            inner: DenseMatrix::zeros(order, order),
        }
    }

    /// Fills the matrix from `f`, evaluating each unordered pair once so the
    /// two triangles are bit-identical.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set_sym(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.inner.rows()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.inner.get(row, col)
    }

    pub fn set_sym(&mut self, row: usize, col: usize, value: f64) {
        self.inner.set(row, col, value);
        self.inner.set(col, row, value);
    }

    pub fn add_sym(&mut self, row: usize, col: usize, value: f64) {
        let updated = self.inner.get(row, col) + value;
        self.set_sym(row, col, updated);
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        self.inner.mul_vec(v)
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.inner
    }
}
