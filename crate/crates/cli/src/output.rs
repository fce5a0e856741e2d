use serde_json::{json, Value};
use series_core::json::frac_to_json;
use series_core::{FracSeries, Rational};
use num_traits::{One, Signed, Zero};

use crate::Format;

fn exponent(s: &FracSeries<Rational>, n: usize) -> Rational {
    s.offset() + Rational::from_integer(n.into())
}

pub fn series_json(name: &str, order: usize, s: &FracSeries<Rational>) -> Value {
    let mut v = frac_to_json(s);
    let o = v.as_object_mut().expect("object");
    o.insert("name".into(), json!(name));
    o.insert("order".into(), json!(order));
    v
}

pub fn series_csv(s: &FracSeries<Rational>) -> String {
    let mut out = String::from("exponent,numerator,denominator\n");
    for (n, c) in s.body().coeffs().iter().enumerate() {
        out.push_str(&format!("{},{},{}\n", exponent(s, n), c.numer(), c.denom()));
    }
    out
}

fn power(var: &str, e: &Rational) -> String {
    if e.is_zero() {
        String::new()
    } else if e.is_one() {
        var.to_string()
    } else if e.is_integer() {
        format!("{var}^{e}")
    } else {
        format!("{var}^({e})")
    }
}

pub fn series_pretty(name: &str, s: &FracSeries<Rational>) -> String {
    let var = s.var();
    let mut terms = String::new();
    for (n, c) in s.body().coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = exponent(s, n);
        let p = power(var, &e);
        let mag = c.abs();
        let body = match (mag.is_one(), p.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => p,
            (false, true) => mag.to_string(),
            (false, false) => format!("{mag} {p}"),
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        if terms.is_empty() {
            terms = if c.is_negative() { format!("-{body}") } else { body };
        } else {
            terms.push_str(&format!(" {sign} {body}"));
        }
    }
    if terms.is_empty() {
        terms.push('0');
    }
    let big_o = exponent(s, s.body().trunc() + 1);
    format!("{name} = {terms} + O({})", if big_o.is_one() { var.to_string() } else { power(var, &big_o) })
}

pub fn render_series(name: &str, order: usize, s: &FracSeries<Rational>, fmt: Format) -> String {
    match fmt {
        Format::Json => series_json(name, order, s).to_string(),
        Format::Csv => series_csv(s).trim_end().to_string(),
        Format::Pretty => series_pretty(name, s),
    }
}
