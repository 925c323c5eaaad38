use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::shape::GroupedShape;
use crate::Scalar;

/// Dense complex tensor with a grouped shape.
///
/// Entries are stored row-major over `(i1..iN, j1..jM)`, last index fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseTensor {
    shape: GroupedShape,
    entries: Vec<Scalar>,
}

impl DenseTensor {
    pub fn new(shape: GroupedShape, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != shape.len() {
            return Err(Error::EntryCount {
                expected: shape.len(),
                found: entries.len(),
            });
        }
        Ok(Self { shape, entries })
    }

    /// Tensor with real entries.
    pub fn from_real(shape: GroupedShape, entries: &[f64]) -> Result<Self> {
        Self::new(
            shape,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn zeros(shape: GroupedShape) -> Self {
        let entries = vec![Complex64::zero(); shape.len()];
        Self { shape, entries }
    }

    /// Unit of the Einstein product on `dims x dims`.
    pub fn identity(dims: &[usize]) -> Result<Self> {
        let shape = GroupedShape::square(dims)?;
        let n = shape.row_count();
        let mut t = Self::zeros(shape);
        for i in 0..n {
            t.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Ok(t)
    }

    pub fn shape(&self) -> &GroupedShape {
        &self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub(crate) fn into_parts(self) -> (GroupedShape, Vec<Scalar>) {
        (self.shape, self.entries)
    }

    /// Entry at the full index tuple `(i1..iN, j1..jM)`.
    pub fn get(&self, index: &[usize]) -> Option<Scalar> {
        self.shape.offset(index).map(|k| self.entries[k])
    }

    /// Entry at linear row `row` and linear column `col` of the unfolding.
    pub fn get_rc(&self, row: usize, col: usize) -> Scalar {
        self.entries[row * self.shape.col_count() + col]
    }

    /// Einstein product `self * rhs`, contracting the column group of `self`
    /// with the row group of `rhs`.
    pub fn einstein(&self, rhs: &DenseTensor) -> Result<DenseTensor> {
        if self.shape.col_dims() != rhs.shape.row_dims() {
            return Err(Error::ShapeMismatch(format!(
                "cannot contract {} with {}",
                self.shape, rhs.shape
            )));
        }
        let shape = GroupedShape::new(self.shape.row_dims(), rhs.shape.col_dims())?;
        let (m, k, n) = (
            self.shape.row_count(),
            self.shape.col_count(),
            rhs.shape.col_count(),
        );
        let mut out = vec![Complex64::zero(); m * n];
        for i in 0..m {
            let row = &mut out[i * n..(i + 1) * n];
            for p in 0..k {
                let a = self.entries[i * k + p];
                if a.is_zero() {
                    continue;
                }
                let b = &rhs.entries[p * n..(p + 1) * n];
                for (o, &bv) in row.iter_mut().zip(b) {
                    *o += a * bv;
                }
            }
        }
        Ok(DenseTensor {
            shape,
            entries: out,
        })
    }

    /// `(A^H)_{j..i..} = conj(A_{i..j..})`.
    pub fn conj_transpose(&self) -> DenseTensor {
        let (m, n) = (self.shape.row_count(), self.shape.col_count());
        let mut entries = Vec::with_capacity(m * n);
        for j in 0..n {
            for i in 0..m {
                entries.push(self.entries[i * n + j].conj());
            }
        }
        DenseTensor {
            shape: self.shape.transposed(),
            entries,
        }
    }

    fn zip_with(
        &self,
        rhs: &DenseTensor,
        op: &str,
        f: impl Fn(Scalar, Scalar) -> Scalar,
    ) -> Result<DenseTensor> {
        if self.shape != rhs.shape {
            return Err(Error::ShapeMismatch(format!(
                "cannot {op} {} and {}",
                self.shape, rhs.shape
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(DenseTensor {
            shape: self.shape.clone(),
            entries,
        })
    }

    pub fn add(&self, rhs: &DenseTensor) -> Result<DenseTensor> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &DenseTensor) -> Result<DenseTensor> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    pub fn scale(&self, c: Scalar) -> DenseTensor {
        DenseTensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `||self - rhs||_F / max(1, ||self||_F, ||rhs||_F)`.
    ///
    /// Every residual in this crate is measured this way, so a comparison
    /// against the zero tensor degrades to an absolute test.
    pub fn rel_distance(&self, rhs: &DenseTensor) -> Result<f64> {
        let diff = self.sub(rhs)?.frobenius_norm();
        let scale = 1f64.max(self.frobenius_norm()).max(rhs.frobenius_norm());
        Ok(diff / scale)
    }

    /// `rel_distance(self, rhs) <= rel_tol`.
    pub fn approx_eq(&self, rhs: &DenseTensor, rel_tol: f64) -> Result<bool> {
        Ok(self.rel_distance(rhs)? <= rel_tol)
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &DenseTensor) -> Result<f64> {
        Ok(self
            .sub(rhs)?
            .entries
            .iter()
            .fold(0.0, |m: f64, z| m.max(z.norm())))
    }

    /// `rel_distance(X^H, X)`.
    pub fn hermitian_residual(&self) -> Result<f64> {
        self.conj_transpose().rel_distance(self)
    }
}

/// Einstein product `a * b`.
pub fn einstein_product(a: &DenseTensor, b: &DenseTensor) -> Result<DenseTensor> {
    a.einstein(b)
}

/// Left-to-right Einstein product of a nonempty chain.
pub fn chain(factors: &[&DenseTensor]) -> Result<DenseTensor> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::ShapeMismatch("empty product chain".into()))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, t| acc.einstein(t))
}
