//! The tensor-matrix unfolding.
//!
//! `unfold` sends a tensor with shape `(I1..IN) x (J1..JM)` to the
//! `(I1*..*IN) x (J1*..*JM)` matrix with the same flat buffer. It carries the
//! Einstein product to the matrix product and the tensor conjugate transpose
//! to the matrix conjugate transpose.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::shape::GroupedShape;
use crate::tensor::DenseTensor;
use crate::Scalar;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for p in 0..self.cols {
                let a = self.data[i * self.cols + p];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[p * rhs.cols + j];
                }
            }
        }
        Ok(out)
    }
}

/// Matrix of a tensor: row `(i1..iN)` and column `(j1..jM)` linearized
/// row-major.
pub fn unfold(a: &DenseTensor) -> Matrix {
    a.clone().into_matrix()
}

/// Inverse of [`unfold`] for the given shape.
pub fn fold(m: Matrix, shape: GroupedShape) -> Result<DenseTensor> {
    if m.rows != shape.row_count() || m.cols != shape.col_count() {
        return Err(Error::ShapeMismatch(format!(
            "a {}x{} matrix does not fold into {}",
            m.rows, m.cols, shape
        )));
    }
    DenseTensor::new(shape, m.data)
}

impl DenseTensor {
    /// Unfolding without copying the entries.
    pub fn into_matrix(self) -> Matrix {
        let (shape, data) = self.into_parts();
        Matrix {
            rows: shape.row_count(),
            cols: shape.col_count(),
            data,
        }
    }
}
