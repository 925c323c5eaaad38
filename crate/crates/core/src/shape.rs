use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Row and column index groups of a tensor.
///
/// A tensor in `C^{I1 x .. x IN x J1 x .. x JM}` has row dims `[I1..IN]` and
/// column dims `[J1..JM]`. Both groups are nonempty and every dimension is at
/// least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupedShape {
    row_dims: Vec<usize>,
    col_dims: Vec<usize>,
    row_count: usize,
    col_count: usize,
}

fn group_size(dims: &[usize], which: &str) -> Result<usize> {
    if dims.is_empty() {
        return Err(Error::InvalidShape(format!("{which} group is empty")));
    }
    dims.iter().try_fold(1usize, |acc, &d| {
        if d == 0 {
            return Err(Error::InvalidShape(format!(
                "{which} group has a zero dimension"
            )));
        }
        acc.checked_mul(d)
            .ok_or_else(|| Error::InvalidShape(format!("{which} group size overflows")))
    })
}

impl GroupedShape {
    pub fn new(row_dims: impl Into<Vec<usize>>, col_dims: impl Into<Vec<usize>>) -> Result<Self> {
        let row_dims = row_dims.into();
        let col_dims = col_dims.into();
        let row_count = group_size(&row_dims, "row")?;
        let col_count = group_size(&col_dims, "column")?;
        row_count
            .checked_mul(col_count)
            .ok_or_else(|| Error::InvalidShape("entry count overflows".into()))?;
        Ok(Self {
            row_dims,
            col_dims,
            row_count,
            col_count,
        })
    }

    /// Shape `(dims, dims)`.
    pub fn square(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        Self::new(dims.clone(), dims)
    }

    pub fn row_dims(&self) -> &[usize] {
        &self.row_dims
    }

    pub fn col_dims(&self) -> &[usize] {
        &self.col_dims
    }

    /// Product of the row dims.
    pub fn row_count(&self) -> usize {
        self.row_count
    }

    /// Product of the column dims.
    pub fn col_count(&self) -> usize {
        self.col_count
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.row_count * self.col_count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of modes, `N + M`.
    pub fn order(&self) -> usize {
        self.row_dims.len() + self.col_dims.len()
    }

    /// The shape with the two groups swapped.
    pub fn transposed(&self) -> Self {
        Self {
            row_dims: self.col_dims.clone(),
            col_dims: self.row_dims.clone(),
            row_count: self.col_count,
            col_count: self.row_count,
        }
    }

    pub fn is_square(&self) -> bool {
        self.row_dims == self.col_dims
    }

    /// Flat offset of a full index tuple `(i1..iN, j1..jM)`.
    pub fn offset(&self, index: &[usize]) -> Option<usize> {
        if index.len() != self.order() {
            return None;
        }
        let dims = self.row_dims.iter().chain(self.col_dims.iter());
        let mut flat = 0usize;
        for (&i, &d) in index.iter().zip(dims) {
            if i >= d {
                return None;
            }
            flat = flat * d + i;
        }
        Some(flat)
    }
}

impl fmt::Display for GroupedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} x {:?}", self.row_dims, self.col_dims)
    }
}
