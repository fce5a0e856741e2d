use series_core::{rat, FracSeries, PowerSeries, Rational, Scalar};

use crate::QFormError;

/// eta(m tau) = q^{m/24} prod_{n >= 1} (1 - q^{m n}), body known through q^T.
pub fn eta_series(m: u32, order: usize) -> Result<FracSeries<Rational>, QFormError> {
    if m == 0 {
        return Err(QFormError::ZeroMultiplier);
    }
    let m = m as usize;
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    // multiply in (1 - q^{mn}) one factor at a time, in place
    let mut step = m;
    while step <= order {
        for k in (step..=order).rev() {
            let t = coeffs[k - step].clone();
            coeffs[k] -= t;
        }
        step += m;
    }
    Ok(FracSeries::new(rat(m as i64, 24), PowerSeries::new("q", coeffs, order)))
}

/// scale * prod eta(m tau)^r
#[derive(Clone, Debug, PartialEq)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u32, i32)>,
    pub scale: Rational,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u32, i32)], scale: Rational) -> Self {
        EtaQuotientSpec { factors: factors.to_vec(), scale }
    }

    /// The leading exponent sum m r / 24.
    pub fn offset(&self) -> Rational {
        self.factors.iter().fold(Rational::zero(), |acc, &(m, r)| acc + rat(m as i64 * r as i64, 24))
    }
}

pub fn eta_quotient(spec: &EtaQuotientSpec, order: usize) -> Result<FracSeries<Rational>, QFormError> {
    let mut body = PowerSeries::one("q", order);
    for &(m, r) in &spec.factors {
        let e = eta_series(m, order)?;
        let p = e.body().pow(r.unsigned_abs());
        body = if r >= 0 { &body * &p } else { body.checked_div(&p)? };
    }
    Ok(FracSeries::new(spec.offset(), body.scale(&spec.scale)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    Theta2,
    Theta3,
}

/// theta3(m tau) = sum q^{m n^2 / 2} and theta2(m tau) = sum q^{m (n + 1/2)^2 / 2}.
pub fn theta_series(which: Theta, m: u32, order: usize) -> Result<FracSeries<Rational>, QFormError> {
    if m == 0 {
        return Err(QFormError::ZeroMultiplier);
    }
    if m % 2 != 0 {
        return Err(QFormError::OddMultiplier(m));
    }
    let h = (m / 2) as usize;
    let mut coeffs = vec![Rational::zero(); order + 1];
    match which {
        Theta::Theta3 => {
            coeffs[0] = Rational::one();
            let mut n = 1;
            while h * n * n <= order {
                coeffs[h * n * n] += rat(2, 1);
                n += 1;
            }
            Ok(FracSeries::from_series(PowerSeries::new("q", coeffs, order)))
        }
        Theta::Theta2 => {
            // q^{m/8} * 2 sum_{n >= 0} q^{m n (n + 1) / 2}
            let mut n = 0;
            while h * n * (n + 1) <= order {
                coeffs[h * n * (n + 1)] += rat(2, 1);
                n += 1;
            }
            Ok(FracSeries::new(rat(m as i64, 8), PowerSeries::new("q", coeffs, order)))
        }
    }
}

fn sigma1(n: usize) -> i64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d as i64).sum()
}

/// E2(m tau) = 1 - 24 sum sigma_1(n) q^{m n}
pub fn eisenstein_e2(m: u32, order: usize) -> Result<PowerSeries<Rational>, QFormError> {
    if m == 0 {
        return Err(QFormError::ZeroMultiplier);
    }
    let m = m as usize;
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    let mut n = 1;
    while m * n <= order {
        coeffs[m * n] = rat(-24 * sigma1(n), 1);
        n += 1;
    }
    Ok(PowerSeries::new("q", coeffs, order))
}
