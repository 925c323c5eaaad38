//! One-sided (Hestenes) Jacobi singular value decomposition.
//!
//! Columns of a working copy of `A` are rotated pairwise until they are
//! mutually orthogonal; the same rotations accumulated into `V` give
//! `A V = U diag(sigma)`. Small singular values come out with high relative
//! accuracy, which matters for the rank decisions made downstream.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

const MAX_SWEEPS: usize = 80;

/// Thin SVD `A = U diag(sigma) V^H` with `sigma` sorted descending.
pub(crate) struct Svd {
    /// `m x k`, columns with zero singular value are zero.
    pub u: Matrix,
    pub sigma: Vec<f64>,
    /// `n x k`.
    pub v: Matrix,
}

pub(crate) fn svd(a: &Matrix) -> Result<Svd> {
    if a.rows() >= a.cols() {
        jacobi(a)
    } else {
        let t = jacobi(&a.conj_transpose())?;
        Ok(Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        })
    }
}

fn column(a: &Matrix, j: usize) -> Vec<Complex64> {
    (0..a.rows()).map(|i| a.get(i, j)).collect()
}

fn dot_stats(x: &[Complex64], y: &[Complex64]) -> (f64, f64, Complex64) {
    let mut alpha = 0.0;
    let mut beta = 0.0;
    let mut gamma = Complex64::zero();
    for (&a, &b) in x.iter().zip(y) {
        alpha += a.norm_sqr();
        beta += b.norm_sqr();
        gamma += a.conj() * b;
    }
    (alpha, beta, gamma)
}

fn rotate(x: &mut [Complex64], y: &mut [Complex64], c: f64, s: f64, phase: Complex64) {
    for (a, b) in x.iter_mut().zip(y.iter_mut()) {
        let p = *a;
        let q = phase * *b;
        *a = p * c - q * s;
        *b = p * s + q * c;
    }
}

// Requires rows >= cols.
fn jacobi(a: &Matrix) -> Result<Svd> {
    let (m, n) = (a.rows(), a.cols());
    let mut g: Vec<Vec<Complex64>> = (0..n).map(|j| column(a, j)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut e = vec![Complex64::zero(); n];
            e[j] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let tol = f64::EPSILON * (m.max(1) as f64);
    // Columns below eps * ||A||_F are treated as converged zeros.
    let fro_sq: f64 = g.iter().flatten().map(|z| z.norm_sqr()).sum();
    let floor = f64::EPSILON * f64::EPSILON * fro_sq;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (alpha, beta, gamma) = dot_stats(&g[p], &g[q]);
                let off = gamma.norm();
                if off == 0.0 || alpha.min(beta) <= floor || off <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Rotating column q by the conjugate phase makes the
                // off-diagonal real; a real Jacobi rotation then annihilates it.
                let phase = (gamma / off).conj();
                let zeta = (beta - alpha) / (2.0 * off);
                let t = zeta.signum() / (zeta.abs() + zeta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = c * t;
                let (lo, hi) = g.split_at_mut(q);
                rotate(&mut lo[p], &mut hi[0], c, s, phase);
                let (lo, hi) = v.split_at_mut(q);
                rotate(&mut lo[p], &mut hi[0], c, s, phase);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NumericalFailure { sweeps: MAX_SWEEPS });
    }

    let norms: Vec<f64> = g
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]));

    let mut u = Matrix::zeros(m, n);
    let mut vm = Matrix::zeros(n, n);
    let mut sigma = Vec::with_capacity(n);
    for (k, &j) in order.iter().enumerate() {
        let s = norms[j];
        sigma.push(s);
        if s > 0.0 {
            for i in 0..m {
                u.set(i, k, g[j][i] / s);
            }
        }
        for i in 0..n {
            vm.set(i, k, v[j][i]);
        }
    }
    Ok(Svd { u, sigma, v: vm })
}
