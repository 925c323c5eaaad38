use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pinv::{mp_inverse, RankPolicy};
use crate::tensor::{chain, DenseTensor};

use super::factorization::Factorization;

fn check_pair(left: &DenseTensor, right: &DenseTensor) -> Result<()> {
    if left.shape().col_dims() != right.shape().row_dims() {
        return Err(Error::ShapeMismatch(format!(
            "columns {:?} do not match rows {:?}",
            left.shape().col_dims(),
            right.shape().row_dims()
        )));
    }
    Ok(())
}

/// `(S*T)†` as `T1† * S1†` with `T1 = S†*S*T` and `S1 = S*T1*T1†`.
pub fn two_factor_mp(s: &DenseTensor, t: &DenseTensor, policy: &RankPolicy) -> Result<DenseTensor> {
    check_pair(s, t)?;
    let s_pinv = mp_inverse(s, policy)?;
    let t1 = chain(&[&s_pinv, s, t])?;
    let t1_pinv = mp_inverse(&t1, policy)?;
    let s1 = chain(&[s, &t1, &t1_pinv])?;
    let s1_pinv = mp_inverse(&s1, policy)?;
    t1_pinv.einstein(&s1_pinv)
}

/// `(M*N)† = (M†*M*N)† * (M*N*N†)†`.
pub fn two_factor_corollary(
    m: &DenseTensor,
    n: &DenseTensor,
    policy: &RankPolicy,
) -> Result<DenseTensor> {
    check_pair(m, n)?;
    let m_pinv = mp_inverse(m, policy)?;
    let n_pinv = mp_inverse(n, policy)?;
    let mn = m.einstein(n)?;
    let left = mp_inverse(&m_pinv.einstein(&mn)?, policy)?;
    let right = mp_inverse(&mn.einstein(&n_pinv)?, policy)?;
    left.einstein(&right)
}

/// `(R†*A*T†)†`.
pub fn inner_inverse(f: &Factorization) -> Result<DenseTensor> {
    let inner = chain(&[f.r_pinv(), f.a(), f.t_pinv()])?;
    f.pinv("R†*A*T†", &inner, &mut Vec::new())
}

/// `(A*T†)† * A * (R†*A)†`, equal to [`inner_inverse`].
pub fn inner_inverse_alternate(f: &Factorization) -> Result<DenseTensor> {
    let (at_pinv, ra_pinv) = side_inverses(f)?;
    chain(&[&at_pinv, f.a(), &ra_pinv])
}

/// Product Moore-Penrose inverse `A_pi = T† * (R†*A*T†)† * R†`.
pub fn product_mp(f: &Factorization) -> Result<DenseTensor> {
    chain(&[f.t_pinv(), &inner_inverse(f)?, f.r_pinv()])
}

/// `T† * (A*T†)† * A * (R†*A)† * R†`, equal to [`product_mp`].
pub fn product_mp_alternate(f: &Factorization) -> Result<DenseTensor> {
    chain(&[f.t_pinv(), &inner_inverse_alternate(f)?, f.r_pinv()])
}

/// `A† = (R†*A)† * R† * A * T† * (A*T†)†`.
pub fn mp_from_factorization(f: &Factorization) -> Result<DenseTensor> {
    let (at_pinv, ra_pinv) = side_inverses(f)?;
    chain(&[&ra_pinv, f.r_pinv(), f.a(), f.t_pinv(), &at_pinv])
}

/// `A† = (R†*A)† * S * (A*T†)†`.
pub fn mp_from_factorization_s_form(f: &Factorization) -> Result<DenseTensor> {
    let (at_pinv, ra_pinv) = side_inverses(f)?;
    chain(&[&ra_pinv, f.s(), &at_pinv])
}

/// `B = T† * (A*T†)†`.
pub fn b_tensor(f: &Factorization) -> Result<DenseTensor> {
    let at = f.a().einstein(f.t_pinv())?;
    f.t_pinv().einstein(&f.pinv("A*T†", &at, &mut Vec::new())?)
}

/// `C = (R†*A)† * R†`.
pub fn c_tensor(f: &Factorization) -> Result<DenseTensor> {
    let ra = f.r_pinv().einstein(f.a())?;
    f.pinv("R†*A", &ra, &mut Vec::new())?.einstein(f.r_pinv())
}

fn side_inverses(f: &Factorization) -> Result<(DenseTensor, DenseTensor)> {
    let at = f.a().einstein(f.t_pinv())?;
    let ra = f.r_pinv().einstein(f.a())?;
    let mut sink = Vec::new();
    Ok((
        f.pinv("A*T†", &at, &mut sink)?,
        f.pinv("R†*A", &ra, &mut sink)?,
    ))
}
