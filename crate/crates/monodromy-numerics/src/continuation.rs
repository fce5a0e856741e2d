//! Analytic continuation cross-check: the q-expansion of a weight-k form at
//! tau(s), times j^k, against its elliptic v-expansion at v = 2 pi i M s.
//!
//! tau(s) = (tau* D - s conj(tau*))/(D - s), j = D/(D - s), D = -K.

use serde_json::{json, Value};
use series_core::{rat, Rational};

use hypergeom_cayley::cayley_expansions;
use q_forms::generators;

use crate::complex::Complex;
use crate::constants::{gamma_constants, GammaConstants};
use crate::precision::Precision;
use crate::real::Real;
use crate::report::{NumericCheck, NumericReport};
use crate::NumericsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuationForm {
    A3,
    C3,
}

impl ContinuationForm {
    pub fn parse(s: &str) -> Result<Self, NumericsError> {
        match s {
            "A3" => Ok(ContinuationForm::A3),
            "C3" => Ok(ContinuationForm::C3),
            // quasi-modular E3 has no continuation statement
            other => Err(NumericsError::NotModular(other.into())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ContinuationForm::A3 => "A3",
            ContinuationForm::C3 => "C3",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ContinuationReport {
    pub form: ContinuationForm,
    pub order: usize,
    pub q_side: Complex,
    pub v_side: Complex,
    pub error: Real,
    pub tail_bound: f64,
    pub check: NumericCheck,
}

impl ContinuationReport {
    pub fn pass(&self) -> bool {
        self.check.pass
    }

    /// Number of agreeing significant digits.
    pub fn digits(&self) -> f64 {
        self.q_side.abs().log10_abs() - self.error.log10_abs()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "form": self.form.name(),
            "order": self.order,
            "q_side": {"re": self.q_side.re.to_sci(30), "im": self.q_side.im.to_sci(30)},
            "v_side": {"re": self.v_side.re.to_sci(30), "im": self.v_side.im.to_sci(30)},
            "tail_bound": format!("{:e}", self.tail_bound),
            "digits": self.digits(),
            "check": self.check.to_json(),
        })
    }
}

fn real_from_f64(x: f64, bits: u32) -> Real {
    Rational::from_float(x).map(|r| Real::from_rational(&r, bits)).unwrap_or_else(|| Real::zero(bits))
}

/// Sample s = sr + i si.
pub fn numeric_continuation_check(
    form: ContinuationForm,
    s: (&Rational, &Rational),
    order: usize,
    prec: Precision,
) -> Result<ContinuationReport, NumericsError> {
    let c = gamma_constants(3, prec)?;
    let bits = c.bits();
    let s = Complex::new(Real::from_rational(s.0, bits), Real::from_rational(s.1, bits));
    if s.abs() > c.k.abs().div_int(20) {
        return Err(NumericsError::SampleTooLarge(s.abs().to_sci(6)));
    }
    let (tau, j) = cayley_point(&c, &s);
    let two_pi_i = Complex::new(Real::zero(bits), Real::pi(bits).mul_int(2));

    // q side
    let g = generators(3, order)?;
    let f = match form {
        ContinuationForm::A3 => &g.a,
        ContinuationForm::C3 => &g.c,
    };
    let q = two_pi_i.mul(&tau).exp();
    let offset = Real::from_rational(f.series.offset(), bits);
    let lead = two_pi_i.mul(&tau).scale(&offset).exp();
    let body = f.series.body();
    let q_side = j.mul(&lead).mul(&Complex::eval_series(&body.coeffs()[..=body.trunc().min(order)], &q));
    // coefficients of A3 and of C3/(3 q^{1/3}) are bounded by 6 (3n+1)^2
    let qa = q.abs().to_f64();
    let pref = j.abs().to_f64() * lead.abs().to_f64();
    let tail_q: f64 = pref * (order + 1..order + 400).map(|n| 6.0 * ((3 * n + 1) as f64).powi(2) * qa.powi(n as i32)).sum::<f64>();

    // v side
    let ell = cayley_expansions(3, order)?;
    let vs = match form {
        ContinuationForm::A3 => ell.a_series(),
        ContinuationForm::C3 => ell.c_series(),
    };
    let v = two_pi_i.mul(&c.m).mul(&s);
    let mut v_side = c.m_half.mul(&Complex::eval_series(&vs.coeffs()[..=vs.trunc().min(order)], &v));
    if form == ContinuationForm::C3 {
        // branch of q^{1/3} at Re tau* = 1/2 against e^{-i pi a} on the period side
        v_side = v_side.mul(&Complex::exp_i_pi(&rat(2, 3), bits));
    }
    // growth rate of the v-coefficients from the upper half of the available ones
    let rate = (order / 2..=order)
        .filter_map(|n| {
            let x = Real::from_rational(vs.coeff(n), bits);
            (!x.is_zero()).then(|| 10f64.powf(x.log10_abs() / n as f64))
        })
        .fold(0.0f64, f64::max)
        * 1.5;
    let x = rate * v.abs().to_f64();
    let tail_v = if x < 1.0 { c.m_half.abs().to_f64() * x.powi(order as i32 + 1) / (1.0 - x) } else { f64::INFINITY };

    let tail = tail_q + tail_v;
    let error = q_side.sub(&v_side).abs();
    let tol = real_from_f64(10.0 * tail, bits).add(&prec.tolerance().mul_int(10));
    let check = NumericCheck::new(&format!("j {} (tau(s)) = continuation in v", form.name()), &error, &tol);
    Ok(ContinuationReport { form, order, q_side, v_side, error, tail_bound: tail, check })
}

fn cayley_point(c: &GammaConstants, s: &Complex) -> (Complex, Complex) {
    let d = c.k.neg();
    let den = d.sub(s);
    let tau = c.tau_star.mul(&d).sub(&s.mul(&c.tau_star.conj())).div(&den);
    (tau, d.div(&den))
}

/// C(Y)(s, sbar) = 2i (sbar/K^2) / (1 + s sbar/K^2).
pub fn cayley_y(s: &Complex, sbar: &Complex, k: &Complex) -> Complex {
    let bits = s.bits();
    let k2 = k.mul(k);
    let x = sbar.div(&k2);
    Complex::i(bits).mul(&x).scale(&Real::from_int(2, bits)).div(&Complex::one(bits).add(&s.mul(&x)))
}

/// Holomorphic limits: sbar -> 0 gives 0, sbar -> K gives 2i(1/K)/(1 + s/K).
pub fn cayley_y_limits(level: u32, s: (&Rational, &Rational), prec: Precision) -> Result<NumericReport, NumericsError> {
    let c = gamma_constants(level, prec)?;
    let bits = c.bits();
    let s = Complex::new(Real::from_rational(s.0, bits), Real::from_rational(s.1, bits));
    let tol = prec.tolerance();
    let at_zero = cayley_y(&s, &Complex::zero(bits), &c.k).abs();
    let at_k = cayley_y(&s, &c.k, &c.k);
    let one = Complex::one(bits);
    let expected = Complex::i(bits).scale(&Real::from_int(2, bits)).div(&c.k).div(&one.add(&s.div(&c.k)));
    Ok(NumericReport {
        name: format!("C(Y) limits, level {level}"),
        checks: vec![
            NumericCheck::new("C(Y)(s, 0) = 0", &at_zero, &tol),
            NumericCheck::new("C(Y)(s, K) = 2i(1/K)/(1+s/K)", &at_k.sub(&expected).abs(), &tol),
        ],
    })
}
