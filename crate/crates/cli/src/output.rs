use std::fmt::Write;

use fliess_core::{
    json, CommutativePolynomial, Factorization, NullabilityReport, Series, ShuffleAnalysis,
    ShuffleFactorization,
};
use num_traits::One;
use serde_json::Value;

use crate::Format;

/// A result with its text rendering and its JSON payload.
pub struct Out {
    kind: &'static str,
    text: String,
    payload: Value,
}

impl Out {
    pub fn new(kind: &'static str, text: String, payload: Value) -> Self {
        Out { kind, text, payload }
    }

    pub fn series(kind: &'static str, s: &Series) -> Self {
        Out::new(kind, s.to_string(), json::series(s))
    }

    pub fn polynomial(kind: &'static str, p: &CommutativePolynomial) -> Self {
        Out::new(kind, p.to_string(), json::polynomial(p))
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Text => println!("{}", self.text),
            Format::Json => println!("{}", json::document(self.kind, self.payload.clone())),
        }
    }
}

fn power(body: String, m: usize) -> String {
    if m == 1 {
        body
    } else {
        format!("{body}^{m}")
    }
}

pub fn factorization_text(f: &Factorization) -> String {
    let mut parts = Vec::new();
    if !f.unit.is_one() || f.factors.is_empty() {
        parts.push(f.unit.to_string());
    }
    for (p, m) in &f.factors {
        parts.push(power(format!("({p})"), *m));
    }
    parts.join(" ")
}

pub fn shuffle_factorization_text(f: &ShuffleFactorization) -> String {
    let mut out = format!("unit: {}", f.unit);
    for (s, m) in &f.factors {
        write!(out, "\nfactor: {s}").unwrap();
        if *m > 1 {
            write!(out, "  (multiplicity {m})").unwrap();
        }
    }
    out
}

pub fn report_text(r: &NullabilityReport) -> String {
    let mut out = format!("verdict: {}\nrelative degree: {}", r.verdict, r.relative_degree);
    if let Some(jet) = &r.nulling_series {
        write!(out, "\nnulling series: {jet}").unwrap();
    }
    if let Some(k) = r.residual_order {
        write!(out, "\nresidual order: {k}").unwrap();
    }
    out
}

pub fn analysis_text(a: &ShuffleAnalysis) -> String {
    let mut out = format!("unit: {}", a.unit);
    for f in &a.factors {
        write!(out, "\n\nfactor: {}", f.series).unwrap();
        if f.multiplicity > 1 {
            write!(out, "\nmultiplicity: {}", f.multiplicity).unwrap();
        }
        write!(out, "\n{}", report_text(&f.report)).unwrap();
    }
    out
}
