use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pinv::{mp_inverse, RankPolicy};
use crate::tensor::{chain, DenseTensor};

use super::factorization::{pinv_noting, Factorization};
use super::formulas::{two_factor_corollary, two_factor_mp};
use super::report::{LawId, LawReport, ReportParts, Residual};

fn zero_like(x: &DenseTensor) -> DenseTensor {
    DenseTensor::zeros(x.shape().clone())
}

/// Residuals of the six equations characterizing `A_pi` for a candidate `x`.
///
/// The direct residual compares `x` with the computed `A_pi`.
pub fn verify_product_penrose(f: &Factorization, x: &DenseTensor, tol: f64) -> Result<LawReport> {
    let expected = f.a().shape().transposed();
    if *x.shape() != expected {
        return Err(Error::ShapeMismatch(format!(
            "candidate has shape {}, expected {}",
            x.shape(),
            expected
        )));
    }
    let d = f.derive()?;
    let (a, r, t) = (f.a(), f.r(), f.t());
    let (rp, tp) = (f.r_pinv(), f.t_pinv());
    let ax = a.einstein(x)?;
    let xa = x.einstein(a)?;
    let conditions = vec![
        Residual::new("A*X*A = A", ax.einstein(a)?.rel_distance(a)?),
        Residual::new("X*A*X = X", xa.einstein(x)?.rel_distance(x)?),
        Residual::new(
            "R†*A*X*R Hermitian",
            chain(&[rp, &ax, r])?.hermitian_residual()?,
        ),
        Residual::new(
            "T*X*A*T† Hermitian",
            chain(&[t, &xa, tp])?.hermitian_residual()?,
        ),
        Residual::new("X*R*R† = X", chain(&[x, r, rp])?.rel_distance(x)?),
        Residual::new("T†*T*X = X", chain(&[tp, t, x])?.rel_distance(x)?),
    ];
    let direct = Residual::new("X = A_pi", x.rel_distance(&d.product_pinv)?);
    Ok(LawReport::assemble(
        LawId::ProductPenrose,
        tol,
        ReportParts {
            conditions,
            direct: Some(direct),
            equivalents: vec![],
            paired: vec![],
            lhs: x.clone(),
            rhs: d.product_pinv,
            warnings: d.warnings,
        },
    ))
}

/// `A_pi = A†` iff `(R†*A*T†)† = T*A†*R`, iff `B = C`.
pub fn check_coincidence(f: &Factorization, tol: f64) -> Result<LawReport> {
    let d = f.derive()?;
    let tar = chain(&[f.t(), &d.a_pinv, f.r()])?;
    let criterion = Residual::new("(R†*A*T†)† = T*A†*R", d.inner_pinv.rel_distance(&tar)?);
    let direct = Residual::new("A_pi = A†", d.product_pinv.rel_distance(&d.a_pinv)?);
    let bc = Residual::new("B = C", d.b.rel_distance(&d.c)?);
    Ok(LawReport::assemble(
        LawId::Coincidence,
        tol,
        ReportParts {
            conditions: vec![criterion],
            direct: Some(direct),
            equivalents: vec![bc],
            paired: vec![],
            lhs: d.product_pinv,
            rhs: d.a_pinv,
            warnings: d.warnings,
        },
    ))
}

/// `B = A†` iff `C = A_pi`, and `B = A_pi` iff `C = A†`.
pub fn check_b_c_cross(f: &Factorization, tol: f64) -> Result<LawReport> {
    let d = f.derive()?;
    let b_adag = Residual::new("B = A†", d.b.rel_distance(&d.a_pinv)?);
    let c_api = Residual::new("C = A_pi", d.c.rel_distance(&d.product_pinv)?);
    let b_api = Residual::new("B = A_pi", d.b.rel_distance(&d.product_pinv)?);
    let c_adag = Residual::new("C = A†", d.c.rel_distance(&d.a_pinv)?);
    Ok(LawReport::assemble(
        LawId::BEqualsAdag,
        tol,
        ReportParts {
            conditions: vec![b_adag],
            direct: Some(c_api),
            equivalents: vec![],
            paired: vec![(b_api, c_adag)],
            lhs: d.b,
            rhs: d.a_pinv,
            warnings: d.warnings,
        },
    ))
}

/// `A_pi = T†*S†*R†` iff `Y = S† - (R†*A*T†)†` satisfies `T†*Y*R† = 0`.
pub fn check_y_decomposition(f: &Factorization, tol: f64) -> Result<LawReport> {
    let mut d = f.derive()?;
    let s_pinv = pinv_noting(f.policy(), "S", f.s(), &mut d.warnings)?;
    let y = s_pinv.sub(&d.inner_pinv)?;
    let tyr = chain(&[f.t_pinv(), &y, f.r_pinv()])?;
    let criterion = Residual::new("T†*Y*R† = 0", tyr.rel_distance(&zero_like(&tyr))?);
    let w = chain(&[f.t_pinv(), &s_pinv, f.r_pinv()])?;
    let direct = Residual::new("A_pi = T†*S†*R†", d.product_pinv.rel_distance(&w)?);
    Ok(LawReport::assemble(
        LawId::YDecomposition,
        tol,
        ReportParts {
            conditions: vec![criterion],
            direct: Some(direct),
            equivalents: vec![],
            paired: vec![],
            lhs: d.product_pinv,
            rhs: w,
            warnings: d.warnings,
        },
    ))
}

/// `(A_pi)_pi = A` for the induced factorization `(T†, (R†*A*T†)†, R†)`.
pub fn product_mp_involution(f: &Factorization, tol: f64) -> Result<LawReport> {
    let mut d = f.derive()?;
    let induced = Factorization::with_product(
        f.t_pinv().clone(),
        d.inner_pinv.clone(),
        f.r_pinv().clone(),
        d.product_pinv.clone(),
        *f.policy(),
    )?;
    let dd = induced.derive()?;
    d.warnings.extend(dd.warnings);
    let residual = Residual::new("(A_pi)_pi = A", dd.product_pinv.rel_distance(f.a())?);
    Ok(LawReport::assemble(
        LawId::Involution,
        tol,
        ReportParts {
            conditions: vec![residual],
            direct: None,
            equivalents: vec![],
            paired: vec![],
            lhs: dd.product_pinv,
            rhs: f.a().clone(),
            warnings: d.warnings,
        },
    ))
}

/// `A† = T†*S†*R†` iff conditions (i) to (iv) hold, with `W = T†*S†*R†`.
pub fn triple_rol_check(f: &Factorization, tol: f64) -> Result<LawReport> {
    let mut d = f.derive()?;
    let s_pinv = pinv_noting(f.policy(), "S", f.s(), &mut d.warnings)?;
    let (a, r, t) = (f.a(), f.r(), f.t());
    let (rp, tp) = (f.r_pinv(), f.t_pinv());
    let w = chain(&[tp, &s_pinv, rp])?;
    let rh = r.conj_transpose();
    let th = t.conj_transpose();
    let cond1 = chain(&[rp, a, &w, a, tp])?.rel_distance(&d.inner)?;
    let cond2 = chain(&[t, &w, a, &w, r])?.rel_distance(&chain(&[t, &w, r])?)?;
    let cond3 = chain(&[&rh, a, &w, r])?.hermitian_residual()?;
    let cond4 = chain(&[t, &w, a, &th])?.hermitian_residual()?;
    let conditions = vec![
        Residual::new("(i) R†*A*W*A*T† = R†*A*T†", cond1),
        Residual::new("(ii) T*W*A*W*R = T*W*R", cond2),
        Residual::new("(iii) R^H*A*W*R Hermitian", cond3),
        Residual::new("(iv) T*W*A*T^H Hermitian", cond4),
    ];
    let direct = Residual::new("A† = W", d.a_pinv.rel_distance(&w)?);
    Ok(LawReport::assemble(
        LawId::TripleRol,
        tol,
        ReportParts {
            conditions,
            direct: Some(direct),
            equivalents: vec![],
            paired: vec![],
            lhs: d.a_pinv,
            rhs: w,
            warnings: d.warnings,
        },
    ))
}

fn product_law(
    law: LawId,
    name: &'static str,
    formula: DenseTensor,
    product: &DenseTensor,
    policy: &RankPolicy,
    tol: f64,
) -> Result<LawReport> {
    let direct = mp_inverse(product, policy)?;
    let residual = Residual::new(name, formula.rel_distance(&direct)?);
    Ok(LawReport::assemble(
        law,
        tol,
        ReportParts {
            conditions: vec![residual],
            direct: None,
            equivalents: vec![],
            paired: vec![],
            lhs: formula,
            rhs: direct,
            warnings: Vec::new(),
        },
    ))
}

/// Compares [`two_factor_mp`] with the direct `(S*T)†`.
pub fn check_two_factor(
    s: &DenseTensor,
    t: &DenseTensor,
    policy: &RankPolicy,
    tol: f64,
) -> Result<LawReport> {
    let formula = two_factor_mp(s, t, policy)?;
    product_law(
        LawId::TwoFactor,
        "T1†*S1† = (S*T)†",
        formula,
        &s.einstein(t)?,
        policy,
        tol,
    )
}

/// Compares [`two_factor_corollary`] with the direct `(M*N)†`.
pub fn check_corollary(
    m: &DenseTensor,
    n: &DenseTensor,
    policy: &RankPolicy,
    tol: f64,
) -> Result<LawReport> {
    let formula = two_factor_corollary(m, n, policy)?;
    product_law(
        LawId::CorollaryMn,
        "(M†*M*N)†*(M*N*N†)† = (M*N)†",
        formula,
        &m.einstein(n)?,
        policy,
        tol,
    )
}

/// Runs `law` on `f`.
///
/// The two-factor laws use the pairs `(S, T)` and `(R, S*T)`; the product
/// Penrose check is applied to the computed `A_pi`.
pub fn check_law(law: LawId, f: &Factorization, tol: f64) -> Result<LawReport> {
    match law {
        LawId::TwoFactor => check_two_factor(f.s(), f.t(), f.policy(), tol),
        LawId::CorollaryMn => check_corollary(f.r(), &f.s().einstein(f.t())?, f.policy(), tol),
        LawId::ProductPenrose => verify_product_penrose(f, &f.derive()?.product_pinv, tol),
        LawId::Coincidence => check_coincidence(f, tol),
        LawId::BEqualsAdag => check_b_c_cross(f, tol),
        LawId::TripleRol => triple_rol_check(f, tol),
        LawId::YDecomposition => check_y_decomposition(f, tol),
        LawId::Involution => product_mp_involution(f, tol),
    }
}
