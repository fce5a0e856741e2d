//! JSON encoding: rationals as [num, den] with exact big integers, series as
//! {"variable", "offset"?, "trunc", "coeffs"}.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::cyclotomic::{CycScalar, DEGREE};
use crate::error::SeriesError;
use crate::frac::FracSeries;
use crate::poly::{PolyCoeff, Polynomial};
use crate::scalar::{Rational, Scalar};
use crate::series::PowerSeries;

fn bad(msg: &str) -> SeriesError {
    SeriesError::Json(msg.to_string())
}

fn int_to_json(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn int_from_json(v: &Value) -> Result<BigInt, SeriesError> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad("expected an integer")),
        Value::String(s) => BigInt::from_str(s).map_err(|_| bad("expected an integer")),
        _ => Err(bad("expected an integer")),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::Array(vec![int_to_json(r.numer()), int_to_json(r.denom())])
}

pub fn rational_from_json(v: &Value) -> Result<Rational, SeriesError> {
    let arr = v.as_array().ok_or_else(|| bad("rational must be [num, den]"))?;
    if arr.len() != 2 {
        return Err(bad("rational must be [num, den]"));
    }
    let d = int_from_json(&arr[1])?;
    if d == BigInt::from(0) {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(int_from_json(&arr[0])?, d))
}

pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, SeriesError>;
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        rational_to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self, SeriesError> {
        rational_from_json(v)
    }
}

impl JsonScalar for CycScalar {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(rational_to_json).collect())
    }
    fn from_json(v: &Value) -> Result<Self, SeriesError> {
        let arr = v.as_array().ok_or_else(|| bad("cyclotomic scalar must be 8 rationals"))?;
        if arr.len() != DEGREE {
            return Err(bad("cyclotomic scalar must be 8 rationals"));
        }
        let mut c: [Rational; DEGREE] = Default::default();
        for (slot, x) in c.iter_mut().zip(arr) {
            *slot = rational_from_json(x)?;
        }
        Ok(CycScalar::from_coeffs(c))
    }
}

pub fn series_to_json<S: JsonScalar>(s: &PowerSeries<S>) -> Value {
    json!({
        "variable": s.var(),
        "trunc": s.trunc(),
        "coeffs": s.coeffs().iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    })
}

pub fn frac_to_json<S: JsonScalar>(s: &FracSeries<S>) -> Value {
    let mut v = series_to_json(s.body());
    v.as_object_mut()
        .expect("object")
        .insert("offset".to_string(), rational_to_json(s.offset()));
    v
}

pub fn series_from_json<S: JsonScalar>(v: &Value) -> Result<PowerSeries<S>, SeriesError> {
    let f = frac_from_json::<S>(v)?;
    f.to_power_series()
}

pub fn frac_from_json<S: JsonScalar>(v: &Value) -> Result<FracSeries<S>, SeriesError> {
    let obj: &Map<String, Value> = v.as_object().ok_or_else(|| bad("series must be an object"))?;
    let var = obj.get("variable").and_then(Value::as_str).ok_or_else(|| bad("missing variable"))?;
    let trunc = obj.get("trunc").and_then(Value::as_u64).ok_or_else(|| bad("missing trunc"))? as usize;
    let coeffs = obj.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing coeffs"))?;
    if coeffs.len() != trunc + 1 {
        return Err(bad("coefficient count does not match trunc"));
    }
    let cs = coeffs.iter().map(S::from_json).collect::<Result<Vec<_>, _>>()?;
    let offset = match obj.get("offset") {
        Some(o) => rational_from_json(o)?,
        None => Rational::from_integer(0.into()),
    };
    Ok(FracSeries::new(offset, PowerSeries::new(var, cs, trunc)))
}

pub fn polynomial_to_json<C: PolyCoeff>(p: &Polynomial<C>, coeff: impl Fn(&C) -> Value) -> Value {
    json!({
        "coordinates": p.coordinates(),
        "monomials": p.terms().map(|(e, c)| json!({"exponents": e, "series": coeff(c)})).collect::<Vec<_>>(),
    })
}

pub fn polynomial_from_json<S: JsonScalar>(v: &Value) -> Result<Polynomial<PowerSeries<S>>, SeriesError> {
    let coords: Vec<String> = v
        .get("coordinates")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing coordinates"))?
        .iter()
        .map(|c| c.as_str().map(str::to_string).ok_or_else(|| bad("coordinate must be a string")))
        .collect::<Result<_, _>>()?;
    let mut p = Polynomial::with_coordinates(coords);
    for m in v.get("monomials").and_then(Value::as_array).ok_or_else(|| bad("missing monomials"))? {
        let e: Vec<u32> = m
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing exponents"))?
            .iter()
            .map(|x| x.as_u64().map(|k| k as u32).ok_or_else(|| bad("exponent must be an integer")))
            .collect::<Result<_, _>>()?;
        if e.len() != p.coordinates().len() {
            return Err(bad("exponent vector has the wrong length"));
        }
        p.add_term(e, series_from_json(m.get("series").ok_or_else(|| bad("missing series"))?)?);
    }
    Ok(p)
}
