//! Relative degree, nullability classification and nulling series.
//!
//! A proper series `c` is nullable when some jet `c_u` gives `c ∘ c_u = 0`.
//! When `c` has relative degree `r` and its natural part starts at `x0^r`,
//! the nulling jet is unique and solves the fixed point
//! `c_u = -(e ∘ c_u)` with `e = x0^{-r}(c) / (x0^{r-1} x1)^{-1}(c)`.

use std::fmt;

use num_traits::Zero;

use crate::composition::{compose, shuffle_quotient, Jet};
use crate::error::{Error, Result};
use crate::series::{Horizon, Rational, Series};
use crate::words::{Letter, Word};

/// Why a series has no relative degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndefinedReason {
    /// The forced part has no linear word `x0^p x1` at its common prefix.
    NoLinearWord,
    /// A linear word exists but some forced word has a shorter `x0` prefix.
    PrefixViolation,
    /// `c_F = 0`.
    ZeroForcedPart,
}

impl UndefinedReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UndefinedReason::NoLinearWord => "no linear word",
            UndefinedReason::PrefixViolation => "prefix violation",
            UndefinedReason::ZeroForcedPart => "zero forced part",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelativeDegree {
    /// `c = c_N + K x0^{r-1} x1 + x0^{r-1} e`.
    Defined { r: usize, k: Rational },
    Undefined(UndefinedReason),
}

impl RelativeDegree {
    pub fn r(&self) -> Option<usize> {
        match self {
            RelativeDegree::Defined { r, .. } => Some(*r),
            RelativeDegree::Undefined(_) => None,
        }
    }

    pub fn gain(&self) -> Option<&Rational> {
        match self {
            RelativeDegree::Defined { k, .. } => Some(k),
            RelativeDegree::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, RelativeDegree::Defined { .. })
    }
}

impl fmt::Display for RelativeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelativeDegree::Defined { r, k } => write!(f, "r = {r}, K = {k}"),
            RelativeDegree::Undefined(why) => write!(f, "undefined ({})", why.as_str()),
        }
    }
}

/// The `x0^{r-1} x1` linear word.
pub fn linear_word(r: usize) -> Word {
    let mut w = Word::power(Letter::X0, r - 1);
    w.push(Letter::X1);
    w
}

fn is_linear_word(w: &Word) -> bool {
    w.last() == Some(&Letter::X1) && w.x0_prefix_len() + 1 == w.len()
}

/// Relative degree of `c` over `{x0, x1}`.
///
/// For a truncated series the horizon must reach the linear word at the
/// common `x0` prefix of the forced part.
pub fn relative_degree(c: &Series) -> Result<RelativeDegree> {
    let forced = c.forced_part();
    let prefix = match forced.support().map(|w| w.x0_prefix_len()).min() {
        Some(p) => p,
        None => {
            return match c.horizon() {
                Horizon::Exact => Ok(RelativeDegree::Undefined(UndefinedReason::ZeroForcedPart)),
                Horizon::TruncatedAt(n) => Err(Error::InsufficientHorizon {
                    needed: n + 1,
                    horizon: n,
                }),
            }
        }
    };
    if let Horizon::TruncatedAt(n) = c.horizon() {
        if n < prefix + 1 {
            return Err(Error::InsufficientHorizon {
                needed: prefix + 1,
                horizon: n,
            });
        }
    }
    let lw = linear_word(prefix + 1);
    let k = c.get(&lw);
    if !k.is_zero() {
        return Ok(RelativeDegree::Defined { r: prefix + 1, k });
    }
    let has_other_linear = forced.support().any(is_linear_word);
    Ok(RelativeDegree::Undefined(if has_other_linear {
        UndefinedReason::PrefixViolation
    } else {
        UndefinedReason::NoLinearWord
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `(c, ∅) ≠ 0`; no jet can null `c`.
    NotProper,
    /// `c_N = 0`, so the zero jet nulls `c`.
    NullableByZeroInput,
    /// Relative degree `r` with `supp(c_N) ⊆ x0^r X0*`: a unique nonzero nulling jet.
    LinearlyNullable,
    /// Relative degree `r` but some `(c, x0^k) ≠ 0` with `k < r`.
    NotNullable,
    /// No relative degree and `c_N ≠ 0`; no direct test applies.
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotProper => "NotProper",
            Verdict::NullableByZeroInput => "NullableByZeroInput",
            Verdict::LinearlyNullable => "LinearlyNullable",
            Verdict::NotNullable => "NotNullable",
            Verdict::Indeterminate => "Indeterminate",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        [
            Verdict::NotProper,
            Verdict::NullableByZeroInput,
            Verdict::LinearlyNullable,
            Verdict::NotNullable,
            Verdict::Indeterminate,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullabilityReport {
    pub verdict: Verdict,
    pub relative_degree: RelativeDegree,
    pub nulling_series: Option<Jet>,
    /// Lower bound on the order of `c ∘ nulling_series`: its true order when
    /// a nonzero coefficient was found, otherwise one past the checked length.
    pub residual_order: Option<usize>,
}

/// Classifies `c` and, when a nulling jet exists, computes it through
/// length `n` and checks it.
pub fn classify(c: &Series, n: usize) -> Result<NullabilityReport> {
    let rd = relative_degree(c).or_else(|e| match e {
        // Non-proper series are decided without looking at the forced part.
        _ if !c.is_proper() => Ok(RelativeDegree::Undefined(UndefinedReason::NoLinearWord)),
        e => Err(e),
    })?;
    let report = |verdict, jet: Option<Jet>, residual_order| NullabilityReport {
        verdict,
        relative_degree: rd.clone(),
        nulling_series: jet,
        residual_order,
    };
    if !c.is_proper() {
        return Ok(report(Verdict::NotProper, None, None));
    }
    if c.natural_part().is_zero() {
        let residual = verify_null(c, &Jet::zero(), n)?;
        return Ok(report(
            Verdict::NullableByZeroInput,
            Some(Jet::zero()),
            Some(residual_order(&residual)),
        ));
    }
    match &rd {
        RelativeDegree::Defined { r, .. } => {
            if natural_prefix_vanishes(c, *r) {
                let jet = fixed_point(c, *r, n, Jet::zero())?;
                let residual = verify_null(c, &jet, n + r)?;
                Ok(report(
                    Verdict::LinearlyNullable,
                    Some(jet),
                    Some(residual_order(&residual)),
                ))
            } else {
                Ok(report(Verdict::NotNullable, None, None))
            }
        }
        RelativeDegree::Undefined(_) => Ok(report(Verdict::Indeterminate, None, None)),
    }
}

fn natural_prefix_vanishes(c: &Series, r: usize) -> bool {
    (0..r).all(|k| c.get(&Word::power(Letter::X0, k)).is_zero())
}

fn residual_order(residual: &Series) -> usize {
    match (residual.order(), residual.horizon()) {
        (Some(k), _) => k,
        (None, Horizon::TruncatedAt(n)) => n + 1,
        (None, Horizon::Exact) => usize::MAX,
    }
}

/// The unique nulling jet of a linearly nullable series, through `x0^n`.
pub fn nulling_series(c: &Series, n: usize) -> Result<Jet> {
    nulling_series_from(c, n, Jet::zero())
}

/// As [`nulling_series`], starting the fixed-point iteration at `start`.
pub fn nulling_series_from(c: &Series, n: usize, start: Jet) -> Result<Jet> {
    let rd = relative_degree(c)?;
    let verdict = if !c.is_proper() {
        Verdict::NotProper
    } else if c.natural_part().is_zero() {
        Verdict::NullableByZeroInput
    } else {
        match rd {
            RelativeDegree::Defined { r, .. } if natural_prefix_vanishes(c, r) => {
                return fixed_point(c, r, n, start)
            }
            RelativeDegree::Defined { .. } => Verdict::NotNullable,
            RelativeDegree::Undefined(_) => Verdict::Indeterminate,
        }
    };
    Err(Error::Classification(verdict.to_string()))
}

/// `c_u ← -(e ∘ c_u)`, `n + 1` rounds. Each round fixes one more coefficient
/// because perturbing `c_u` at order `k` moves `e ∘ c_u` only at order `> k`.
fn fixed_point(c: &Series, r: usize, n: usize, start: Jet) -> Result<Jet> {
    let num = c.left_shift(&Word::power(Letter::X0, r))?;
    let den = c.left_shift(&linear_word(r))?;
    let e = shuffle_quotient(&num, &den, n)?;
    let mut cu = start.truncate(n).into_series();
    for _ in 0..=n {
        cu = compose(&e, &cu, n)?.neg();
    }
    Jet::new(cu.with_horizon(Horizon::TruncatedAt(n)))
}

/// `c ∘ c_u` through length `n`; the caller inspects its order.
pub fn verify_null(c: &Series, cu: &Series, n: usize) -> Result<Series> {
    compose(c, cu, n)
}
