//! JSON encodings of the toolkit's objects.
//!
//! Rationals are strings `"p/q"` (or `"n"`), words are arrays of letter
//! indices, and monomials map variable indices (as strings) to exponents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commutative::{CommutativePolynomial, Family, Monomial};
use crate::error::{Error, Result};
use crate::nullability::{NullabilityReport, RelativeDegree};
use crate::parse::{parse_commutative, parse_rational};
use crate::realization::{Realization, TimePolynomial};
use crate::series::{Horizon, Rational, Series};
use crate::shuffle_factor::{ShuffleAnalysis, ShuffleFactorization};
use crate::polyfactor::Factorization;
use crate::words::Word;

/// Version tag carried by every top-level document.
pub const SCHEMA: &str = "1";

#[derive(Debug, Serialize, Deserialize)]
struct SeriesTerm {
    coeff: String,
    word: Vec<u8>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SeriesDoc {
    terms: Vec<SeriesTerm>,
    #[serde(default)]
    horizon: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PolyTerm {
    coeff: String,
    monomial: BTreeMap<String, u32>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PolyDoc {
    terms: Vec<PolyTerm>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: msg.into(),
    }
}

fn decode<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| bad(e.to_string()))
}

pub fn rational(c: &Rational) -> Value {
    Value::String(c.to_string())
}

fn rational_from(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(bad(format!("expected a rational, found {v}"))),
    }
}

pub fn series(s: &Series) -> Value {
    let doc = SeriesDoc {
        terms: s
            .iter_graded()
            .map(|(w, c)| SeriesTerm {
                coeff: c.to_string(),
                word: w.iter().map(|l| l.0).collect(),
            })
            .collect(),
        horizon: s.horizon().bound(),
    };
    serde_json::to_value(doc).expect("series serializes")
}

pub fn series_from(v: &Value) -> Result<Series> {
    let doc: SeriesDoc = decode(v)?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in doc.terms {
        terms.push((Word::from_indices(t.word), parse_rational(&t.coeff)?));
    }
    let horizon = doc.horizon.map_or(Horizon::Exact, Horizon::TruncatedAt);
    Ok(Series::from_terms(terms).with_horizon(horizon))
}

pub fn polynomial(p: &CommutativePolynomial) -> Value {
    let doc = PolyDoc {
        terms: p
            .iter_display()
            .into_iter()
            .map(|(m, c)| PolyTerm {
                coeff: c.to_string(),
                monomial: m.pairs().iter().map(|&(v, e)| (v.to_string(), e)).collect(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("polynomial serializes")
}

/// Reads a polynomial object, or for convenience a string in the text
/// syntax or an array of such strings to be summed.
pub fn polynomial_from(v: &Value, family: Family) -> Result<CommutativePolynomial> {
    let p = match v {
        Value::String(s) => parse_commutative(s)?,
        Value::Array(items) => {
            let mut acc = CommutativePolynomial::zero();
            for item in items {
                acc = acc.add(&polynomial_from(item, family)?);
            }
            acc
        }
        _ => {
            let doc: PolyDoc = decode(v)?;
            let mut terms = Vec::with_capacity(doc.terms.len());
            for t in doc.terms {
                let mut pairs = Vec::with_capacity(t.monomial.len());
                for (var, e) in t.monomial {
                    let var: u32 = var.parse().map_err(|_| bad(format!("bad variable index '{var}'")))?;
                    pairs.push((var, e));
                }
                terms.push((Monomial::from_pairs(pairs), parse_rational(&t.coeff)?));
            }
            CommutativePolynomial::from_terms(terms)
        }
    };
    if !p.is_constant() && p.family() != family && v.is_string() {
        return Err(bad(format!("expected {} variables in {v}", family.symbol())));
    }
    Ok(p.with_family(family))
}

pub fn time_polynomial(u: &TimePolynomial) -> Value {
    json!({ "coeffs": u.coeffs().iter().map(rational).collect::<Vec<_>>(), "text": u.to_string() })
}

pub fn report(r: &NullabilityReport) -> Value {
    let (rd, k) = match &r.relative_degree {
        RelativeDegree::Defined { r, k } => (json!(r), rational(k)),
        RelativeDegree::Undefined(_) => (Value::Null, Value::Null),
    };
    json!({
        "verdict": r.verdict.as_str(),
        "relative_degree": rd,
        "K": k,
        "nulling_series": r.nulling_series.as_ref().map_or(Value::Null, |j| series(j)),
        "residual_order": r.residual_order.map_or(Value::Null, |o| json!(o)),
    })
}

pub fn factorization(f: &Factorization) -> Value {
    json!({
        "unit": rational(&f.unit),
        "factors": f.factors.iter().map(|(p, m)| json!({
            "polynomial": polynomial(p),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })
}

pub fn shuffle_factorization(f: &ShuffleFactorization) -> Value {
    json!({
        "unit": rational(&f.unit),
        "factors": f.factors.iter().map(|(s, m)| json!({
            "series": series(s),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })
}

pub fn shuffle_analysis(a: &ShuffleAnalysis) -> Value {
    json!({
        "unit": rational(&a.unit),
        "factors": a.factors.iter().map(|f| json!({
            "series": series(&f.series),
            "multiplicity": f.multiplicity,
            "report": report(&f.report),
        })).collect::<Vec<_>>(),
    })
}

pub fn realization(r: &Realization) -> Value {
    json!({
        "n": r.dim(),
        "z0": r.z0().iter().map(rational).collect::<Vec<_>>(),
        "g0": r.g0().iter().map(polynomial).collect::<Vec<_>>(),
        "g1": r.g1().iter().map(polynomial).collect::<Vec<_>>(),
        "h": polynomial(r.h()),
    })
}

pub fn realization_from(v: &Value) -> Result<Realization> {
    let field = |name: &str| v.get(name).ok_or_else(|| bad(format!("missing field \"{name}\"")));
    let list = |name: &str| -> Result<Vec<Value>> {
        match field(name)? {
            Value::Array(items) => Ok(items.clone()),
            _ => Err(bad(format!("\"{name}\" must be an array"))),
        }
    };
    let z0 = list("z0")?.iter().map(rational_from).collect::<Result<Vec<_>>>()?;
    let g0 = list("g0")?
        .iter()
        .map(|p| polynomial_from(p, Family::State))
        .collect::<Result<Vec<_>>>()?;
    let g1 = list("g1")?
        .iter()
        .map(|p| polynomial_from(p, Family::State))
        .collect::<Result<Vec<_>>>()?;
    let h = polynomial_from(field("h")?, Family::State)?;
    if let Some(n) = v.get("n") {
        if n.as_u64() != Some(z0.len() as u64) {
            return Err(Error::domain(format!("\"n\" is {n} but z0 has {} entries", z0.len())));
        }
    }
    Realization::new(z0, g0, g1, h)
}

/// Wraps a payload as a versioned document: `{"schema": "1", ...}`.
pub fn document(kind: &str, payload: Value) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("schema".into(), Value::String(SCHEMA.into()));
    obj.insert("kind".into(), Value::String(kind.into()));
    match payload {
        Value::Object(fields) => obj.extend(fields),
        other => {
            obj.insert("value".into(), other);
        }
    }
    Value::Object(obj)
}
