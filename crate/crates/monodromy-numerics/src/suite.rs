use crate::complex::Complex;
use crate::constants::{exponents, gamma_constants};
use crate::matrix::{ComplexMatrix2, IntMatrix2};
use crate::precision::Precision;
use crate::real::Real;
use crate::report::{NumericCheck, NumericReport};
use crate::NumericsError;

/// Local monodromies around the orbifold point, 0 and infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonodromyMatrices {
    pub level: u32,
    pub m_orb: IntMatrix2,
    pub m_zero: IntMatrix2,
    pub m_inf: IntMatrix2,
}

/// M_inf = T and M_0 = -S T^N S. At level 3 M_orb is the printed matrix; at
/// level 2 it is (M_0 M_inf)^{-1}, so only the conjugation check has content.
pub fn monodromy_matrices(level: u32) -> Result<MonodromyMatrices, NumericsError> {
    let s = IntMatrix2::S;
    let m_inf = IntMatrix2::T;
    let n = level as i64;
    let m_zero = (s * IntMatrix2::t_pow(n) * s).neg();
    let m_orb = match level {
        3 => IntMatrix2([[-2, -1], [3, 1]]),
        2 => (m_zero * m_inf).inverse().expect("unimodular"),
        _ => return Err(NumericsError::UnsupportedLevel(level)),
    };
    Ok(MonodromyMatrices { level, m_orb, m_zero, m_inf })
}

/// Order of the local orbifold monodromy: 3 at level 3, 4 at level 2.
fn orbifold_order(level: u32) -> u32 {
    if level == 3 {
        3
    } else {
        4
    }
}

pub fn monodromy_suite(level: u32) -> Result<NumericReport, NumericsError> {
    let m = monodromy_matrices(level)?;
    let prod = m.m_orb * m.m_zero * m.m_inf;
    let n = orbifold_order(level);
    let p = m.m_orb.pow(n);
    let mut checks = vec![
        NumericCheck::exact(&format!("M_orb M_0 M_inf = Id ({prod})"), prod == IntMatrix2::ID),
        NumericCheck::exact("det M_orb = det M_0 = det M_inf = 1", [m.m_orb, m.m_zero, m.m_inf].iter().all(|x| x.det() == 1)),
        NumericCheck::exact(&format!("M_orb^{n} = +-Id ({p})"), p == IntMatrix2::ID || p == IntMatrix2::ID.neg()),
        NumericCheck::exact("M_inf = T", m.m_inf == IntMatrix2::T),
    ];
    if level == 3 {
        checks.push(NumericCheck::exact("M_0 = [[1,0],[-3,1]]", m.m_zero == IntMatrix2([[1, 0], [-3, 1]])));
    }
    Ok(NumericReport { name: format!("monodromy, level {level}"), checks })
}

/// Q with Q^{-1} = [[g+, g+ e^{-i pi a}], [g-, g- e^{-i pi b}]], and the local
/// monodromy diag(e^{2 pi i a}, e^{2 pi i b}) carried to the basis (pi1, kappa pi2).
pub fn conjugated_local_monodromy(level: u32, prec: Precision) -> Result<ComplexMatrix2, NumericsError> {
    let c = gamma_constants(level, prec)?;
    let (a, b) = exponents(level)?;
    let bits = c.bits();
    let g = |x: &Real| Complex::from_real(x.clone());
    let q_inv = ComplexMatrix2([
        [g(&c.gamma_plus), g(&c.gamma_plus).mul(&Complex::exp_i_pi(&-a.clone(), bits))],
        [g(&c.gamma_minus), g(&c.gamma_minus).mul(&Complex::exp_i_pi(&-b.clone(), bits))],
    ]);
    let q = q_inv.inverse();
    let two = series_core::rat(2, 1);
    let local = ComplexMatrix2::diag(Complex::exp_i_pi(&(&two * &a), bits), Complex::exp_i_pi(&(&two * &b), bits));
    let d = ComplexMatrix2::diag(Complex::one(bits), c.kappa.clone());
    let d_inv = ComplexMatrix2::diag(Complex::one(bits), Complex::one(bits).div(&c.kappa));
    Ok(d_inv.mul(&q).mul(&local).mul(&q_inv).mul(&d))
}

pub fn conjugation_check(level: u32, prec: Precision) -> Result<NumericReport, NumericsError> {
    let m = monodromy_matrices(level)?;
    let n = conjugated_local_monodromy(level, prec)?;
    let bits = prec.work_bits();
    let err = n.max_distance(&ComplexMatrix2::from_int(&m.m_orb, bits));
    Ok(NumericReport {
        name: format!("connection matrix, level {level}"),
        checks: vec![NumericCheck::new(&format!("Q M_orb^local Q^-1 = {}", m.m_orb), &err, &prec.tolerance())],
    })
}
