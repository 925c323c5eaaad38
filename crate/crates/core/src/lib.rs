//! Generalized inverses of even-grouped complex tensors under the Einstein
//! product.
//!
//! A [`DenseTensor`] carries a [`GroupedShape`]: a row group `I1..IN` and a
//! column group `J1..JM`. The Einstein product contracts the column group of
//! the left operand with the row group of the right operand, which makes every
//! tensor behave like a `(I1*..*IN) x (J1*..*JM)` matrix. On top of that this
//! crate provides:
//!
//! * [`pinv`]: the Moore-Penrose inverse (through the unfolding and a Jacobi
//!   SVD) and residual checks of the four Penrose equations;
//! * [`generalized`]: the product Moore-Penrose inverse of a factorization
//!   `A = R*S*T`, the auxiliary `B` and `C` tensors, and decision procedures
//!   for the coincidence and reverse-order laws that relate them.
//!
//! Entries are stored row-major over the concatenated index tuple
//! `(i1..iN, j1..jM)` with the last index varying fastest. This is a storage
//! convention of this crate; it makes [`unfold`] a reinterpretation of the
//! flat buffer.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod generalized;
pub mod matrix;
pub mod pinv;
pub mod shape;
mod svd;
pub mod tensor;

pub use error::{Error, Result};
pub use generalized::{Factorization, LawId, LawReport, Residual, Verdict, DEFAULT_LAW_TOLERANCE};
pub use matrix::{fold, unfold, Matrix};
pub use pinv::{mp_inverse, ordinary_inverse, verify_penrose, PenroseReport, RankPolicy};
pub use shape::GroupedShape;
pub use tensor::{chain, einstein_product, DenseTensor};

/// Scalar type of every tensor entry.
pub type Scalar = num_complex::Complex64;
