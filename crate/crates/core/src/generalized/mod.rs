//! Inverses attached to a three-factor factorization `A = R*S*T`.
//!
//! With `A† ` the Moore-Penrose inverse, the product Moore-Penrose inverse is
//!
//! ```text
//! A_pi = T† * (R† * A * T†)† * R†
//! ```
//!
//! the unique `X` with `A*X*A = A`, `X*A*X = X`, `R†*A*X*R` and
//! `T*X*A*T†` Hermitian, `X*R*R† = X` and `T†*T*X = X`. Two auxiliary
//! tensors link it with `A†`:
//!
//! ```text
//! B = T† * (A*T†)†        C = (R†*A)† * R†
//! A_pi = B*A*C            A† = C*A*B
//! ```
//!
//! The `check_*` functions decide the laws relating these objects and report
//! residuals for both sides of every equivalence they test.

mod factorization;
mod formulas;
mod laws;
mod report;

pub use factorization::{Derived, Factorization};
pub use formulas::{
    b_tensor, c_tensor, inner_inverse, inner_inverse_alternate, mp_from_factorization,
    mp_from_factorization_s_form, product_mp, product_mp_alternate, two_factor_corollary,
    two_factor_mp,
};
pub use laws::{
    check_b_c_cross, check_coincidence, check_corollary, check_law, check_two_factor,
    check_y_decomposition, product_mp_involution, triple_rol_check, verify_product_penrose,
};
pub use report::{ConditioningWarning, LawId, LawReport, Residual, Verdict};

/// Default relative tolerance of every law check.
pub const DEFAULT_LAW_TOLERANCE: f64 = 1e-8;
