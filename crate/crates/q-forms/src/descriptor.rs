use serde_json::{json, Value};
use series_core::json::{frac_to_json, rational_to_json};
use series_core::{FracSeries, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionPoint {
    InfinityCusp,
    EllipticPoint,
}

impl ExpansionPoint {
    pub fn tag(self) -> &'static str {
        match self {
            ExpansionPoint::InfinityCusp => "infinity_cusp",
            ExpansionPoint::EllipticPoint => "elliptic_point",
        }
    }
}

/// A named modular object together with its expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct FormDescriptor {
    pub name: String,
    pub level: u32,
    pub weight: Rational,
    pub expansion_point: ExpansionPoint,
    pub series: FracSeries<Rational>,
}

impl FormDescriptor {
    pub fn cusp(name: &str, level: u32, weight: Rational, series: FracSeries<Rational>) -> Self {
        FormDescriptor { name: name.to_string(), level, weight, expansion_point: ExpansionPoint::InfinityCusp, series }
    }

    pub fn elliptic(name: &str, level: u32, weight: Rational, series: FracSeries<Rational>) -> Self {
        FormDescriptor { name: name.to_string(), level, weight, expansion_point: ExpansionPoint::EllipticPoint, series }
    }

    pub fn to_json(&self) -> Value {
        let mut v = frac_to_json(&self.series);
        let obj = v.as_object_mut().expect("object");
        obj.insert("name".into(), json!(self.name));
        obj.insert("level".into(), json!(self.level));
        obj.insert("weight".into(), rational_to_json(&self.weight));
        obj.insert("expansion_point".into(), json!(self.expansion_point.tag()));
        v
    }
}
