//! Versioned JSON reports. Exact rationals are always `"num/den"` strings
//! and object keys are sorted, so output is byte-stable.

use potts_core::localview::LocalView;
use potts_core::rational::to_fraction_string;
use potts_core::{Monomial, Polynomial, Rational, Var};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "potts-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Data,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Data => "DATA",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Fail => 1,
            Verdict::Pass | Verdict::Data => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub subcommand: &'static str,
    pub parameters: Map<String, Value>,
    pub payload: Value,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(subcommand: &'static str, parameters: Map<String, Value>, payload: Value, verdict: Verdict) -> Self {
        Report {
            subcommand,
            parameters,
            payload,
            verdict,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": {
                "subcommand": self.subcommand,
                "parameters": self.parameters,
                "version": env!("CARGO_PKG_VERSION"),
            },
            "payload": self.payload,
            "verdict": self.verdict.as_str(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn frac(x: &Rational) -> Value {
    Value::String(to_fraction_string(x))
}

pub fn monomial_text(m: &Monomial) -> String {
    let parts: Vec<String> = Var::ALL
        .iter()
        .filter(|v| m.exponent(**v) > 0)
        .map(|v| match m.exponent(*v) {
            1 => v.name().to_string(),
            e => format!("{}^{e}", v.name()),
        })
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join("*")
    }
}

pub fn poly_value(p: &Polynomial) -> Value {
    Value::String(p.to_text())
}

pub fn view_value(ordinal: usize, view: &LocalView) -> Value {
    let inner: Vec<Value> = view
        .inner_edges()
        .into_iter()
        .map(|(i, j)| json!([i, j]))
        .collect();
    let boundary: Vec<Value> = (0..view.degree()).map(|i| json!(view.boundary(i))).collect();
    json!({
        "ordinal": ordinal,
        "inner_edges": inner,
        "boundary": boundary,
        "q_c": view.q_c(),
        "text": view.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use potts_core::rational::{int, ratio};

    #[test]
    fn rationals_are_fraction_strings() {
        assert_eq!(frac(&ratio(2, 4)), Value::String("1/2".into()));
        assert_eq!(frac(&int(3)), Value::String("3/1".into()));
    }

    #[test]
    fn envelope_is_stable() {
        let mut p = Map::new();
        p.insert("z".into(), json!(1));
        p.insert("a".into(), json!(2));
        let r = Report::new("views", p, json!({"b": 1, "a": 2}), Verdict::Data);
        let text = r.to_json();
        assert_eq!(text, r.clone().to_json());
        assert!(text.find("\"a\"").unwrap() < text.find("\"z\"").unwrap());
        assert!(text.contains("\"schema\": \"potts-report/1\""));
        assert!(text.contains("\"verdict\": \"DATA\""));
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial_text(&Monomial::new([0, 2, 0, 1, 0])), "t^2*r");
        assert_eq!(monomial_text(&Monomial::ONE), "1");
    }
}
