use fliess_core::{
    json, parse_series, parse_time_polynomial, CommutativePolynomial, Error,
    Family, Realization, Result, Series, TimePolynomial,
};
use serde_json::Value;

/// A command-line operand after `@file` expansion.
pub enum Operand {
    Text(String),
    Json(Value),
}

fn io_error(path: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: format!("{path}: {e}"),
    }
}

impl Operand {
    pub fn read(arg: &str) -> Result<Operand> {
        let Some(path) = arg.strip_prefix('@') else {
            return Ok(Operand::Text(arg.to_string()));
        };
        let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        if text.trim_start().starts_with('{') {
            let v = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: format!("{path}: {e}"),
            })?;
            Ok(Operand::Json(v))
        } else {
            Ok(Operand::Text(text))
        }
    }

    pub fn series(&self) -> Result<Series> {
        match self {
            Operand::Text(t) => parse_series(t),
            Operand::Json(v) => json::series_from(v),
        }
    }

    pub fn polynomial(&self, family: Family) -> Result<CommutativePolynomial> {
        match self {
            Operand::Text(t) => json::polynomial_from(&Value::String(t.clone()), family),
            Operand::Json(v) => json::polynomial_from(v, family),
        }
    }

    pub fn time_polynomial(&self) -> Result<TimePolynomial> {
        match self {
            Operand::Text(t) => parse_time_polynomial(t),
            Operand::Json(v) => {
                let coeffs = v
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(|| io_error("input", "expected {\"coeffs\": [...]}"))?;
                let coeffs = coeffs
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => fliess_core::parse_rational(s),
                        other => fliess_core::parse_rational(&other.to_string()),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(TimePolynomial::new(coeffs))
            }
        }
    }

    pub fn realization(&self) -> Result<Realization> {
        match self {
            Operand::Json(v) => json::realization_from(v),
            Operand::Text(_) => Err(io_error("system file", "expected a JSON object")),
        }
    }
}
