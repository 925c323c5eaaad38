use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pinv::{mp_inverse_detailed, RankPolicy};
use crate::tensor::{chain, DenseTensor};

use super::report::ConditioningWarning;

/// Accepted gap between a supplied `A` and `R*S*T`.
const PRODUCT_TOLERANCE: f64 = 1e-10;

/// A chain-compatible triple `(R, S, T)` together with `A = R*S*T`.
#[derive(Clone, Debug)]
pub struct Factorization {
    r: DenseTensor,
    s: DenseTensor,
    t: DenseTensor,
    a: DenseTensor,
    policy: RankPolicy,
    r_pinv: DenseTensor,
    t_pinv: DenseTensor,
    warnings: Vec<ConditioningWarning>,
}

impl Factorization {
    pub fn new(r: DenseTensor, s: DenseTensor, t: DenseTensor) -> Result<Self> {
        Self::with_policy(r, s, t, RankPolicy::default())
    }

    pub fn with_policy(
        r: DenseTensor,
        s: DenseTensor,
        t: DenseTensor,
        policy: RankPolicy,
    ) -> Result<Self> {
        check_chain(&r, &s, &t)?;
        let a = chain(&[&r, &s, &t])?;
        Self::assemble(r, s, t, a, policy)
    }

    /// Takes `A` as given after checking `rel(R*S*T, A) <= 1e-10`.
    pub fn with_product(
        r: DenseTensor,
        s: DenseTensor,
        t: DenseTensor,
        a: DenseTensor,
        policy: RankPolicy,
    ) -> Result<Self> {
        check_chain(&r, &s, &t)?;
        let rst = chain(&[&r, &s, &t])?;
        if *rst.shape() != *a.shape() {
            return Err(Error::ShapeMismatch(format!(
                "R*S*T has shape {}, A has shape {}",
                rst.shape(),
                a.shape()
            )));
        }
        let gap = rst.rel_distance(&a)?;
        if gap > PRODUCT_TOLERANCE {
            return Err(Error::InconsistentFactorization(gap));
        }
        Self::assemble(r, s, t, a, policy)
    }

    fn assemble(
        r: DenseTensor,
        s: DenseTensor,
        t: DenseTensor,
        a: DenseTensor,
        policy: RankPolicy,
    ) -> Result<Self> {
        policy.validate()?;
        let mut warnings = Vec::new();
        let r_pinv = pinv_noting(&policy, "R", &r, &mut warnings)?;
        let t_pinv = pinv_noting(&policy, "T", &t, &mut warnings)?;
        Ok(Self {
            r,
            s,
            t,
            a,
            policy,
            r_pinv,
            t_pinv,
            warnings,
        })
    }

    pub fn r(&self) -> &DenseTensor {
        &self.r
    }

    pub fn s(&self) -> &DenseTensor {
        &self.s
    }

    pub fn t(&self) -> &DenseTensor {
        &self.t
    }

    pub fn a(&self) -> &DenseTensor {
        &self.a
    }

    pub fn policy(&self) -> &RankPolicy {
        &self.policy
    }

    pub fn r_pinv(&self) -> &DenseTensor {
        &self.r_pinv
    }

    pub fn t_pinv(&self) -> &DenseTensor {
        &self.t_pinv
    }

    /// Borderline rank decisions met while computing `R†` and `T†`.
    pub fn warnings(&self) -> &[ConditioningWarning] {
        &self.warnings
    }

    /// `(rel(R*R†*A, A), rel(A*T†*T, A))`; both vanish for an exact factorization.
    pub fn consistency_residuals(&self) -> Result<(f64, f64)> {
        let left = chain(&[&self.r, &self.r_pinv, &self.a])?.rel_distance(&self.a)?;
        let right = chain(&[&self.a, &self.t_pinv, &self.t])?.rel_distance(&self.a)?;
        Ok((left, right))
    }

    /// The tensors every law is stated in, computed once.
    pub fn derive(&self) -> Result<Derived> {
        let mut warnings = self.warnings.clone();
        let p = &self.policy;
        let a_pinv = pinv_noting(p, "A", &self.a, &mut warnings)?;
        let ra = self.r_pinv.einstein(&self.a)?;
        let at = self.a.einstein(&self.t_pinv)?;
        let inner = ra.einstein(&self.t_pinv)?;
        let inner_pinv = pinv_noting(p, "R†*A*T†", &inner, &mut warnings)?;
        let product_pinv = chain(&[&self.t_pinv, &inner_pinv, &self.r_pinv])?;
        let at_pinv = pinv_noting(p, "A*T†", &at, &mut warnings)?;
        let ra_pinv = pinv_noting(p, "R†*A", &ra, &mut warnings)?;
        let b = self.t_pinv.einstein(&at_pinv)?;
        let c = ra_pinv.einstein(&self.r_pinv)?;
        Ok(Derived {
            a_pinv,
            inner,
            inner_pinv,
            product_pinv,
            at_pinv,
            ra_pinv,
            b,
            c,
            warnings,
        })
    }

    pub(crate) fn pinv(
        &self,
        label: &'static str,
        x: &DenseTensor,
        warnings: &mut Vec<ConditioningWarning>,
    ) -> Result<DenseTensor> {
        pinv_noting(&self.policy, label, x, warnings)
    }
}

/// Tensors derived from a factorization.
#[derive(Clone, Debug)]
pub struct Derived {
    pub a_pinv: DenseTensor,
    /// `R†*A*T†`
    pub inner: DenseTensor,
    pub inner_pinv: DenseTensor,
    /// `A_pi = T†*(R†*A*T†)†*R†`
    pub product_pinv: DenseTensor,
    /// `(A*T†)†`
    pub at_pinv: DenseTensor,
    /// `(R†*A)†`
    pub ra_pinv: DenseTensor,
    pub b: DenseTensor,
    pub c: DenseTensor,
    pub warnings: Vec<ConditioningWarning>,
}

fn check_chain(r: &DenseTensor, s: &DenseTensor, t: &DenseTensor) -> Result<()> {
    if r.shape().col_dims() != s.shape().row_dims() {
        return Err(Error::ShapeMismatch(format!(
            "R columns {:?} do not match S rows {:?}",
            r.shape().col_dims(),
            s.shape().row_dims()
        )));
    }
    if s.shape().col_dims() != t.shape().row_dims() {
        return Err(Error::ShapeMismatch(format!(
            "S columns {:?} do not match T rows {:?}",
            s.shape().col_dims(),
            t.shape().row_dims()
        )));
    }
    Ok(())
}

pub(crate) fn pinv_noting(
    policy: &RankPolicy,
    label: &'static str,
    x: &DenseTensor,
    warnings: &mut Vec<ConditioningWarning>,
) -> Result<DenseTensor> {
    let out = mp_inverse_detailed(x, policy)?;
    if let (Some(sv), Some(cut)) = (out.nearest_to_cutoff(), out.cutoff) {
        warnings.push(ConditioningWarning {
            tensor: label,
            singular_value: sv,
            cutoff: cut,
        });
    }
    Ok(out.inverse)
}
