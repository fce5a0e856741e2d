use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use series_core::{rat, FracSeries, PowerSeries, Rational};

use crate::descriptor::FormDescriptor;
use crate::eta::{eisenstein_e2, eta_quotient, theta_series, EtaQuotientSpec, Theta};
use crate::QFormError;

/// Normalization knobs. Only the E3 denominator is adjustable, and only so
/// that a deliberately wrong value can be shown to break the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Normalization {
    pub e3_denominator: i64,
}

impl Default for Normalization {
    fn default() -> Self {
        Normalization { e3_denominator: 4 }
    }
}

/// A, B, C, E for level 3; the squared forms A^2, B^2, C^2 and E for level 2.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub level: u32,
    pub order: usize,
    pub a: FormDescriptor,
    pub b: FormDescriptor,
    pub c: FormDescriptor,
    pub e: FormDescriptor,
}

impl Generators {
    pub fn all(&self) -> [&FormDescriptor; 4] {
        [&self.a, &self.b, &self.c, &self.e]
    }

    fn truncated(&self, order: usize) -> Generators {
        let cut = |f: &FormDescriptor| FormDescriptor { series: f.series.with_body_trunc(order), ..f.clone() };
        Generators { level: self.level, order, a: cut(&self.a), b: cut(&self.b), c: cut(&self.c), e: cut(&self.e) }
    }
}

type CacheKey = (u32, i64);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<Generators>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<Generators>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn generators(level: u32, order: usize) -> Result<Arc<Generators>, QFormError> {
    generators_with(level, order, Normalization::default())
}

/// Cached by (level, normalization); a cached entry of higher order is reused
/// by truncation.
pub fn generators_with(level: u32, order: usize, norm: Normalization) -> Result<Arc<Generators>, QFormError> {
    let key = (level, norm.e3_denominator);
    if let Some(g) = cache().read().expect("generator cache poisoned").get(&key) {
        if g.order == order {
            return Ok(g.clone());
        }
        if g.order > order {
            return Ok(Arc::new(g.truncated(order)));
        }
    }
    let g = Arc::new(match level {
        3 => level3(order, norm)?,
        2 => level2(order)?,
        other => return Err(QFormError::UnsupportedLevel(other)),
    });
    let mut w = cache().write().expect("generator cache poisoned");
    let keep = w.get(&key).map_or(true, |old| old.order < order);
    if keep {
        w.insert(key, g.clone());
    }
    Ok(g)
}

fn level3(order: usize, norm: Normalization) -> Result<Generators, QFormError> {
    let t2 = |m| theta_series(Theta::Theta2, m, order);
    let t3 = |m| theta_series(Theta::Theta3, m, order);
    let a = (&t2(2)? * &t2(6)?).add(&(&t3(2)? * &t3(6)?));
    let b = eta_quotient(&EtaQuotientSpec::new(&[(1, 3), (3, -1)], rat(1, 1)), order)?;
    let c = eta_quotient(&EtaQuotientSpec::new(&[(3, 3), (1, -1)], rat(3, 1)), order)?;
    let e = (eisenstein_e2(3, order)?.scale_rat(&rat(3, 1)) + eisenstein_e2(1, order)?)
        .scale_rat(&rat(1, norm.e3_denominator));
    Ok(Generators {
        level: 3,
        order,
        a: FormDescriptor::cusp("A3", 3, rat(1, 1), a),
        b: FormDescriptor::cusp("B3", 3, rat(1, 1), b),
        c: FormDescriptor::cusp("C3", 3, rat(1, 1), c),
        e: FormDescriptor::cusp("E3", 3, rat(2, 1), FracSeries::from_series(e)),
    })
}

fn level2(order: usize) -> Result<Generators, QFormError> {
    let b2 = eta_quotient(&EtaQuotientSpec::new(&[(1, 8), (2, -4)], rat(1, 1)), order)?;
    let c2 = eta_quotient(&EtaQuotientSpec::new(&[(2, 8), (1, -4)], rat(8, 1)), order)?;
    let sum = b2.pow(2).to_power_series()? + c2.pow(2).to_power_series()?;
    let a2 = sum.nth_root(2)?;
    let e = (eisenstein_e2(2, order)?.scale_rat(&rat(2, 1)) + eisenstein_e2(1, order)?).scale_rat(&rat(1, 3));
    Ok(Generators {
        level: 2,
        order,
        a: FormDescriptor::cusp("A2sq", 2, rat(2, 1), FracSeries::from_series(a2)),
        b: FormDescriptor::cusp("B2sq", 2, rat(2, 1), b2),
        c: FormDescriptor::cusp("C2sq", 2, rat(2, 1), c2),
        e: FormDescriptor::cusp("E2gen", 2, rat(2, 1), FracSeries::from_series(e)),
    })
}

pub fn hauptmodul(level: u32, order: usize) -> Result<PowerSeries<Rational>, QFormError> {
    hauptmodul_with(level, order, Normalization::default())
}

/// alpha = C^3 / A^3 at level 3 and C^4 / A^4 at level 2 (squared generators).
pub fn hauptmodul_with(level: u32, order: usize, norm: Normalization) -> Result<PowerSeries<Rational>, QFormError> {
    let g = generators_with(level, order, norm)?;
    let (num, den) = match level {
        3 => (g.c.series.pow(3), g.a.series.pow(3)),
        _ => (g.c.series.pow(2), g.a.series.pow(2)),
    };
    let alpha = num.checked_div(&den)?.to_power_series()?;
    Ok(alpha.with_trunc(order))
}
