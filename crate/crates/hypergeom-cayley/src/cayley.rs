use q_forms::{FormDescriptor, Residual};
use series_core::{rat, CycScalar, FracSeries, PowerSeries, Rational, Scalar};

use crate::chart::{normalized_coordinate, OrbifoldChart};
use crate::CayleyError;

/// Elliptic-point expansions in v of the generators. At level 2 these are the
/// squared forms, as on the q side.
#[derive(Clone, Debug)]
pub struct CayleyForms {
    pub chart: OrbifoldChart,
    pub a: FormDescriptor,
    pub c: FormDescriptor,
    pub e_hol: FormDescriptor,
}

impl CayleyForms {
    pub fn a_series(&self) -> &PowerSeries<Rational> {
        self.a.series.body()
    }
    pub fn c_series(&self) -> &PowerSeries<Rational> {
        self.c.series.body()
    }
    pub fn e_series(&self) -> &PowerSeries<Rational> {
        self.e_hol.series.body()
    }

    /// The log-derivative factor 2r / (power of C): 6 at level 3 and 4 for the
    /// squared level-2 forms.
    pub fn e_factor(level: u32) -> Rational {
        if level == 3 {
            rat(6, 1)
        } else {
            rat(4, 1)
        }
    }
}

pub fn cayley_expansions(level: u32, order: usize) -> Result<CayleyForms, CayleyError> {
    // one extra degree so that E, which needs a derivative, reaches `order`
    let chart = normalized_coordinate(level, order + 1)?;
    let x = chart.x_of_v();
    let f3x = chart.f3.renamed("v").compose(&x)?;
    let c = f3x.pow(chart.c_power);
    let a = &chart.y_of_v * &c;
    // at level 2 the image of A is already the square
    let a_sq = if level == 3 { (&a * &a).with_trunc(order) } else { a.with_trunc(order) };
    let e = c.log()?.derive()?.scale_rat(&CayleyForms::e_factor(level)) - &a_sq;
    let (names, weight) = if level == 3 { (["A3", "C3", "E3"], [1, 1, 2]) } else { (["A2sq", "C2sq", "E2gen"], [2, 2, 2]) };
    let desc = |i: usize, s: PowerSeries<Rational>| {
        FormDescriptor::elliptic(names[i], level, rat(weight[i], 1), FracSeries::from_series(s.with_trunc(order)))
    };
    Ok(CayleyForms { a: desc(0, a), c: desc(1, c), e_hol: desc(2, e), chart })
}

fn residual(name: &str, s: &PowerSeries<Rational>) -> Residual {
    Residual::of(name, &FracSeries::from_series(s.clone()))
}

fn cyc_residual(name: &str, s: &PowerSeries<CycScalar>) -> Residual {
    // the series is zero iff every coordinate series is zero
    let mut first = None;
    for (n, c) in s.coeffs().iter().enumerate() {
        if !c.is_zero() {
            first = Some((rat(n as i64, 1), c.coeffs().iter().find(|x| !x.is_zero()).cloned().unwrap()));
            break;
        }
    }
    Residual { identity: name.to_string(), checked_through: rat(s.trunc() as i64, 1), first_nonzero: first }
}

/// The Ramanujan system with d = d/dv for the elliptic expansions, plus the
/// chart consistency y = C(A)/C(C), the alternative formula for E, and the
/// reconstructed B generator.
pub fn verify_elliptic_ramanujan(level: u32, order: usize) -> Result<Vec<Residual>, CayleyError> {
    let f = cayley_expansions(level, order + 1)?;
    let (a, c, e) = (f.a_series(), f.c_series(), f.e_series());
    let d = |s: &PowerSeries<Rational>| s.derive();
    let mut out = Vec::new();
    let y = a.checked_div(c)?;
    out.push(residual("y - C(A)/C(C)", &(&y - &f.chart.y_of_v)));
    // E = factor (1 - x) A dlog F3(x) / dx * (power of C) - A, written without v-derivatives
    let x = f.chart.x_of_v();
    let dlog_f3 = f.chart.f3.derive()?.checked_div(&f.chart.f3)?.renamed("v").compose(&x)?;
    let one_minus_x = (-&x).add_constant(&Rational::one());
    let power = Rational::from_integer(f.chart.c_power.into());
    let a_sq_like = if level == 3 { a * a } else { a.clone() };
    let e_alt = (&(&one_minus_x * &a_sq_like) * &dlog_f3).scale_rat(&(CayleyForms::e_factor(level) * power)) - &a_sq_like;
    out.push(residual("E - alternative formula", &(e - &e_alt)));
    match level {
        3 => {
            let k = rat(1, 6);
            let a2 = a * a;
            out.push(residual("dA - (1/6)(A E + 2C^3 - A^3)", &(d(a)? - (&(a * e) + &c.pow(3).scale_rat(&rat(2, 1)) - a.pow(3)).scale_rat(&k))));
            out.push(residual("dC - (1/6) C (E + A^2)", &(d(c)? - (c * &(e + &a2)).scale_rat(&k))));
            out.push(residual("dE - (1/6)(E^2 - A^4)", &(d(e)? - (e * e - a2.pow(2)).scale_rat(&k))));
            // B^3 = A^3 - C^3 and C^3 - A^3 = 1 + ..., so B = -(C^3 - A^3)^{1/3}
            let b = -(c.pow(3) - a.pow(3)).nth_root(3)?;
            out.push(residual("dB - (1/6) B (E - A^2)", &(d(&b)? - (&b * &(e - &a2)).scale_rat(&k))));
        }
        _ => {
            let k = rat(1, 4);
            out.push(residual("d(A^2) - (1/4)(A^2 E + 2C^4 - A^4)", &(d(a)? - (&(a * e) + &c.pow(2).scale_rat(&rat(2, 1)) - a.pow(2)).scale_rat(&k))));
            out.push(residual("d(C^2) - (1/4) C^2 (E + A^2)", &(d(c)? - (c * &(e + a)).scale_rat(&k))));
            out.push(residual("dE - (1/8)(E^2 - A^4)", &(d(e)? - (e * e - a.pow(2)).scale_rat(&rat(1, 8)))));
            // B^4 = A^4 - C^4 = -(C^4 - A^4), so B^2 = i sqrt(C^4 - A^4)
            let root = (c.pow(2) - a.pow(2)).nth_root(2)?.to_cyclotomic().scale(&CycScalar::i());
            let (ac, ec) = (a.to_cyclotomic(), e.to_cyclotomic());
            let lhs = root.derive()? - (&root * &(&ec - &ac)).scale_rat(&k);
            out.push(cyc_residual("d(B^2) - (1/4) B^2 (E - A^2)", &lhs));
        }
    }
    Ok(out)
}

/// True when every nonzero exponent of `s` is congruent to `residue` mod `m`.
pub fn graded(s: &PowerSeries<Rational>, m: usize, residue: usize) -> bool {
    s.coeffs().iter().enumerate().all(|(n, c)| c.is_zero() || n % m == residue)
}
