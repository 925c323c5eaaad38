//! Moore-Penrose inverse of a tensor and the four Penrose equations.
//!
//! `X = A†` is the unique tensor with
//!
//! 1. `A*X*A = A`
//! 2. `X*A*X = X`
//! 3. `(A*X)^H = A*X`
//! 4. `(X*A)^H = X*A`
//!
//! It is computed as the fold of the SVD pseudoinverse of the unfolding of
//! `A`, with singular values truncated according to a [`RankPolicy`].

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{fold, Matrix};
use crate::svd::svd;
use crate::tensor::DenseTensor;

/// How many singular values are kept when forming a pseudoinverse.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RankPolicy {
    /// Keep `sigma > rtol * sigma_max`. `None` uses
    /// `rtol = max(rows, cols) * f64::EPSILON`.
    Relative(Option<f64>),
    /// Keep `sigma > tol`.
    Absolute(f64),
    /// Keep exactly the leading `k` singular values (or all of them, if fewer).
    FixedRank(usize),
}

impl Default for RankPolicy {
    fn default() -> Self {
        RankPolicy::Relative(None)
    }
}

impl RankPolicy {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            RankPolicy::Relative(None) | RankPolicy::FixedRank(_) => true,
            RankPolicy::Relative(Some(t)) | RankPolicy::Absolute(t) => t.is_finite() && t > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidPolicy(format!("{self:?}")))
        }
    }

    /// Cutoff below which singular values are dropped, if the policy has one.
    pub fn cutoff(&self, rows: usize, cols: usize, sigma_max: f64) -> Option<f64> {
        match *self {
            RankPolicy::Relative(rtol) => {
                let rtol = rtol.unwrap_or(rows.max(cols) as f64 * f64::EPSILON);
                Some(rtol * sigma_max)
            }
            RankPolicy::Absolute(t) => Some(t),
            RankPolicy::FixedRank(_) => None,
        }
    }

    /// Number of kept values among descending `sigma`.
    fn rank(&self, rows: usize, cols: usize, sigma: &[f64]) -> usize {
        let sigma_max = sigma.first().copied().unwrap_or(0.0);
        match (self, self.cutoff(rows, cols, sigma_max)) {
            (RankPolicy::FixedRank(k), _) => (*k).min(sigma.len()),
            (_, Some(cut)) => sigma.iter().take_while(|&&s| s > cut).count(),
            (_, None) => unreachable!("only fixed rank lacks a cutoff"),
        }
    }
}

/// Pseudoinverse together with the data behind its rank decision.
#[derive(Clone, Debug)]
pub struct PinvOutcome {
    pub inverse: DenseTensor,
    pub rank: usize,
    /// Singular values of the unfolding, descending.
    pub singular_values: Vec<f64>,
    pub cutoff: Option<f64>,
}

impl PinvOutcome {
    /// A singular value lies within a factor 10 of the cutoff, so the rank
    /// decision may flip under small perturbations.
    pub fn is_borderline(&self) -> bool {
        match self.cutoff {
            Some(cut) if cut > 0.0 => self
                .singular_values
                .iter()
                .any(|&s| s > cut / 10.0 && s <= cut * 10.0),
            _ => false,
        }
    }

    /// The singular value closest to the cutoff (on a log scale) among those
    /// that make the decision borderline.
    pub fn nearest_to_cutoff(&self) -> Option<f64> {
        let cut = self.cutoff?;
        let distance = |s: f64| if s >= cut { s / cut } else { cut / s };
        self.singular_values
            .iter()
            .copied()
            .filter(|&s| s > cut / 10.0 && s <= cut * 10.0)
            .min_by(|a, b| distance(*a).total_cmp(&distance(*b)))
    }
}

/// Moore-Penrose inverse with the full rank-decision record.
pub fn mp_inverse_detailed(a: &DenseTensor, policy: &RankPolicy) -> Result<PinvOutcome> {
    policy.validate()?;
    let (m, n) = (a.shape().row_count(), a.shape().col_count());
    let dec = svd(&a.clone().into_matrix())?;
    let rank = policy.rank(m, n, &dec.sigma);
    let cutoff = policy.cutoff(m, n, dec.sigma.first().copied().unwrap_or(0.0));

    // X = V_r diag(1/sigma) U_r^H, an n x m matrix.
    let mut x = Matrix::zeros(n, m);
    for k in 0..rank {
        let inv = 1.0 / dec.sigma[k];
        for j in 0..n {
            let vj = dec.v.get(j, k) * inv;
            if vj.is_zero() {
                continue;
            }
            for i in 0..m {
                let cur = x.get(j, i);
                x.set(j, i, cur + vj * dec.u.get(i, k).conj());
            }
        }
    }
    Ok(PinvOutcome {
        inverse: fold(x, a.shape().transposed())?,
        rank,
        singular_values: dec.sigma,
        cutoff,
    })
}

/// Moore-Penrose inverse `A†`; shape `(J, I)` for `A` of shape `(I, J)`.
pub fn mp_inverse(a: &DenseTensor, policy: &RankPolicy) -> Result<DenseTensor> {
    mp_inverse_detailed(a, policy).map(|o| o.inverse)
}

/// Relative residuals of the four Penrose equations for a candidate `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct PenroseReport {
    /// `rel(A*X*A, A)`, `rel(X*A*X, X)`, `rel((A*X)^H, A*X)`, `rel((X*A)^H, X*A)`.
    pub residuals: [f64; 4],
    pub tolerance: f64,
    pub pass: bool,
}

impl PenroseReport {
    pub fn residual(&self, equation: usize) -> f64 {
        self.residuals[equation - 1]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

pub fn verify_penrose(a: &DenseTensor, x: &DenseTensor, tol: f64) -> Result<PenroseReport> {
    if *x.shape() != a.shape().transposed() {
        return Err(Error::ShapeMismatch(format!(
            "candidate inverse has shape {}, expected {}",
            x.shape(),
            a.shape().transposed()
        )));
    }
    let ax = a.einstein(x)?;
    let xa = x.einstein(a)?;
    let residuals = [
        ax.einstein(a)?.rel_distance(a)?,
        xa.einstein(x)?.rel_distance(x)?,
        ax.hermitian_residual()?,
        xa.hermitian_residual()?,
    ];
    Ok(PenroseReport {
        residuals,
        tolerance: tol,
        pass: residuals.iter().all(|&r| r <= tol),
    })
}

/// Ordinary inverse: `A*X = X*A = I` for a square grouped shape.
///
/// Fails with [`Error::Singular`] if the policy truncates any singular value.
pub fn ordinary_inverse(a: &DenseTensor, policy: &RankPolicy) -> Result<DenseTensor> {
    if !a.shape().is_square() {
        return Err(Error::NotSquare(format!("{}", a.shape())));
    }
    let out = mp_inverse_detailed(a, policy)?;
    let order = a.shape().row_count();
    if out.rank < order {
        return Err(Error::Singular {
            rank: out.rank,
            order,
        });
    }
    Ok(out.inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unfold;
    use crate::shape::GroupedShape;
    use num_complex::Complex64;

    fn real(row: &[usize], col: &[usize], v: &[f64]) -> DenseTensor {
        DenseTensor::from_real(GroupedShape::new(row, col).unwrap(), v).unwrap()
    }

    #[test]
    fn identity_is_its_own_inverse() {
        let id = DenseTensor::identity(&[2, 2]).unwrap();
        let p = RankPolicy::default();
        assert!(mp_inverse(&id, &p).unwrap().approx_eq(&id, 1e-15).unwrap());
        assert!(ordinary_inverse(&id, &p)
            .unwrap()
            .approx_eq(&id, 1e-15)
            .unwrap());
    }

    #[test]
    fn zero_tensor_maps_to_transposed_zero() {
        let z = DenseTensor::zeros(GroupedShape::new(vec![2, 3], vec![2]).unwrap());
        let x = mp_inverse(&z, &RankPolicy::default()).unwrap();
        assert_eq!(x, DenseTensor::zeros(z.shape().transposed()));
    }

    #[test]
    fn diagonal_ordinary_inverse() {
        let mut v = [0.0; 16];
        for (k, d) in [2.0, 4.0, 5.0, 10.0].iter().enumerate() {
            v[k * 4 + k] = *d;
        }
        let a = real(&[2, 2], &[2, 2], &v);
        let inv = ordinary_inverse(&a, &RankPolicy::default()).unwrap();
        let m = unfold(&inv);
        for (k, d) in [0.5, 0.25, 0.2, 0.1].iter().enumerate() {
            for j in 0..4 {
                let want = if j == k { *d } else { 0.0 };
                assert!((m.get(k, j) - Complex64::new(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn ordinary_inverse_errors() {
        let a = real(&[2], &[3], &[1.0; 6]);
        assert!(matches!(
            ordinary_inverse(&a, &RankPolicy::default()),
            Err(Error::NotSquare(_))
        ));
        let s = real(&[2], &[2], &[1.0, 2.0, 2.0, 4.0]);
        assert_eq!(
            ordinary_inverse(&s, &RankPolicy::default()),
            Err(Error::Singular { rank: 1, order: 2 })
        );
    }

    #[test]
    fn rank_policies() {
        // diag(3, 1e-9) in a 2 x 2 unfolding
        let a = real(&[2], &[2], &[3.0, 0.0, 0.0, 1e-9]);
        let full = mp_inverse_detailed(&a, &RankPolicy::default()).unwrap();
        assert_eq!(full.rank, 2);
        let rel = mp_inverse_detailed(&a, &RankPolicy::Relative(Some(1e-6))).unwrap();
        assert_eq!(rel.rank, 1);
        let abs = mp_inverse_detailed(&a, &RankPolicy::Absolute(1e-8)).unwrap();
        assert_eq!(abs.rank, 1);
        let fixed = mp_inverse_detailed(&a, &RankPolicy::FixedRank(1)).unwrap();
        assert_eq!(fixed.rank, 1);
        assert!((fixed.inverse.get(&[0, 0]).unwrap().re - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(
            fixed.inverse.get(&[1, 1]).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            mp_inverse_detailed(&a, &RankPolicy::FixedRank(9))
                .unwrap()
                .rank,
            2
        );
        assert!(RankPolicy::Absolute(-1.0).validate().is_err());
        assert!(RankPolicy::Relative(Some(f64::NAN)).validate().is_err());
        assert!(mp_inverse(&a, &RankPolicy::Absolute(0.0)).is_err());
    }

    #[test]
    fn borderline_detection() {
        let a = real(&[2], &[2], &[1.0, 0.0, 0.0, 1e-6]);
        let o = mp_inverse_detailed(&a, &RankPolicy::Absolute(2e-6)).unwrap();
        assert!(o.is_borderline());
        assert_eq!(o.nearest_to_cutoff(), Some(1e-6));
        let o = mp_inverse_detailed(&a, &RankPolicy::Absolute(1e-3)).unwrap();
        assert!(!o.is_borderline());
        let o = mp_inverse_detailed(&a, &RankPolicy::FixedRank(1)).unwrap();
        assert!(!o.is_borderline());
    }

    #[test]
    fn verify_penrose_rejects_zero_candidate() {
        let a = real(&[2], &[2], &[1.0, 2.0, 3.0, 4.0]);
        let z = DenseTensor::zeros(a.shape().transposed());
        let r = verify_penrose(&a, &z, 1e-10).unwrap();
        assert_eq!(r.residual(1), 1.0);
        assert!(!r.pass);
        let bad = DenseTensor::zeros(GroupedShape::new(vec![2], vec![3]).unwrap());
        assert!(matches!(
            verify_penrose(&a, &bad, 1e-10),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn complex_rank_one() {
        let u = [
            Complex64::new(1.0, 2.0),
            Complex64::new(-0.5, 0.25),
            Complex64::new(0.0, 1.0),
        ];
        let w = [Complex64::new(0.3, -1.0), Complex64::new(2.0, 0.5)];
        let entries = u
            .iter()
            .flat_map(|&a| w.iter().map(move |&b| a * b.conj()))
            .collect();
        let a = DenseTensor::new(GroupedShape::new(vec![3], vec![2]).unwrap(), entries).unwrap();
        let o = mp_inverse_detailed(&a, &RankPolicy::default()).unwrap();
        assert_eq!(o.rank, 1);
        assert!(verify_penrose(&a, &o.inverse, 1e-14).unwrap().pass);
    }
}
