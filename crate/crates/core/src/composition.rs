//! Composition product, shuffle inverse and shuffle quotient for the
//! single-input alphabet `{x0, x1}`, plus jets.
//!
//! `c ∘ d = Σ (c,η) ψ_d(η)(1)` where `ψ_d(x0)(e) = x0 e` and
//! `ψ_d(x1)(e) = x0 (d ⧢ e)`. Each application of `ψ_d` prepends a letter,
//! so `ψ_d(η)(1)` has order at least `|η|` and only words of `c` up to the
//! requested length contribute.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{Horizon, Rational, Series};
use crate::words::{Letter, Word};

/// A series supported on `{x0^k}`: the Taylor data of an input or output
/// function, with `(c_u, x0^k) = u^(k)(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet(Series);

impl Jet {
    pub fn new(s: Series) -> Result<Jet> {
        if !s.is_natural() {
            return Err(Error::domain(format!("{s} is not supported on powers of x0")));
        }
        Ok(Jet(s))
    }

    pub fn zero() -> Jet {
        Jet(Series::zero())
    }

    /// Jet with `coeffs[k]` on `x0^k`.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Jet {
        Jet(Series::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (Word::power(Letter::X0, k), c)),
        ))
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(&Word::power(Letter::X0, k))
    }

    /// Coefficients of `x0^0 ..= x0^n`.
    pub fn coeffs_through(&self, n: usize) -> Vec<Rational> {
        (0..=n).map(|k| self.coeff(k)).collect()
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    pub fn into_series(self) -> Series {
        self.0
    }

    pub fn truncate(&self, n: usize) -> Jet {
        Jet(self.0.truncate(n))
    }
}

impl Deref for Jet {
    type Target = Series;

    fn deref(&self) -> &Series {
        &self.0
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_single_input(c: &Series) -> Result<()> {
    match c.max_letter() {
        Some(l) if l.0 > 1 => Err(Error::domain(format!(
            "composition supports the alphabet {{x0, x1}} only, found {l}"
        ))),
        _ => Ok(()),
    }
}

/// Prepends `l` to every word, keeping words of length `<= cap`.
fn prepend(s: &Series, l: Letter, cap: usize) -> Series {
    Series::from_terms(
        s.iter()
            .filter(|(w, _)| w.len() < cap)
            .map(|(w, c)| (w.prepend(l), c.clone())),
    )
}

/// Memoized `ψ_d(suffix)(1)` values for one composition.
struct PsiTable {
    d: Series,
    cap: usize,
    memo: HashMap<Vec<Letter>, Series>,
}

impl PsiTable {
    fn eval(&mut self, word: &[Letter]) -> Series {
        if word.len() > self.cap {
            return Series::zero();
        }
        if word.is_empty() {
            return Series::one();
        }
        if let Some(s) = self.memo.get(word) {
            return s.clone();
        }
        let inner = self.eval(&word[1..]);
        let out = if word[0] == Letter::X0 {
            prepend(&inner, Letter::X0, self.cap)
        } else {
            let sh = self.d.shuffle_to(&inner, self.cap - 1);
            prepend(&sh.into_exact(), Letter::X0, self.cap)
        };
        self.memo.insert(word.to_vec(), out.clone());
        out
    }
}

/// The composition product `c ∘ d` through words of length `n`.
///
/// The result is truncated at `min(n, horizon(c), horizon(d) + 1)`: unknown
/// coefficients of `c` feed words of the same length, while unknown
/// coefficients of `d` are always preceded by an extra `x0`.
pub fn compose(c: &Series, d: &Series, n: usize) -> Result<Series> {
    check_single_input(c)?;
    let mut horizon = Horizon::TruncatedAt(n).min(c.horizon());
    if let Horizon::TruncatedAt(nd) = d.horizon() {
        horizon = horizon.min(Horizon::TruncatedAt(nd.saturating_add(1)));
    }
    let cap = horizon.bound().expect("composition horizon is finite");
    let mut table = PsiTable {
        d: d.clone().into_exact(),
        cap,
        memo: HashMap::new(),
    };
    let mut acc = Series::zero();
    for (w, coeff) in c.iter() {
        if w.len() > cap {
            continue;
        }
        let psi = table.eval(w);
        acc = acc.add(&psi.scalar_mul(coeff));
    }
    Ok(acc.with_horizon(horizon))
}

/// `d^{⧢-1}` through words of length `n`, via the geometric series in the
/// proper part `d' = 1 - d/(d,∅)`.
pub fn shuffle_inverse(d: &Series, n: usize) -> Result<Series> {
    let d0 = d.constant_term();
    if d0.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv0 = Rational::one() / &d0;
    let proper = Series::one().sub(&d.scalar_mul(&inv0));
    if proper.is_zero() && proper.is_exact() {
        return Ok(Series::constant(inv0));
    }
    let horizon = Horizon::TruncatedAt(n).min(d.horizon());
    let cap = horizon.bound().unwrap();
    let proper = proper.into_exact();
    let mut acc = Series::one();
    let mut power = Series::one();
    // d' is proper, so its k-th shuffle power has order >= k.
    for _ in 1..=cap {
        power = power.shuffle_to(&proper, cap).into_exact();
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power);
    }
    Ok(acc.scalar_mul(&inv0).with_horizon(horizon))
}

/// `c / d = c ⧢ d^{⧢-1}` through words of length `n`.
pub fn shuffle_quotient(c: &Series, d: &Series, n: usize) -> Result<Series> {
    let inv = shuffle_inverse(d, n)?;
    Ok(c.shuffle_to(&inv, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, ratio};
    use crate::words::parse_word;

    fn s(terms: &[(i64, &str)]) -> Series {
        Series::from_terms(terms.iter().map(|(c, x)| (parse_word(x).unwrap(), rat(*c))))
    }

    #[test]
    fn compose_examples() {
        let c = s(&[(1, "x0x0"), (-1, "x1x0")]);
        assert!(compose(&c, &Series::one(), 8).unwrap().is_zero());
        let c = s(&[(1, "x0"), (1, "x1")]);
        assert!(compose(&c, &s(&[(-1, "1")]), 8).unwrap().is_zero());
        let c = s(&[(1, "x0x0"), (-1, "x1")]);
        assert!(compose(&c, &s(&[(1, "x0")]), 8).unwrap().is_zero());
    }

    #[test]
    fn compose_with_zero_gives_natural_part() {
        let c = s(&[(1, "x0"), (2, "x0x0x0"), (1, "x1"), (5, "x0x1x0")]);
        let out = compose(&c, &Series::zero(), 6).unwrap();
        assert!(out.agrees_through(&c.natural_part(), 6));
    }

    #[test]
    fn compose_rejects_larger_alphabets() {
        assert!(compose(&s(&[(1, "x2")]), &Series::one(), 3).is_err());
    }

    #[test]
    fn compose_horizon() {
        let c = s(&[(1, "x1")]);
        let d = s(&[(1, "1"), (1, "x0")]).truncate(1);
        let out = compose(&c, &d, 10).unwrap();
        assert_eq!(out.horizon(), Horizon::TruncatedAt(2));
        assert_eq!(out, s(&[(1, "x0"), (1, "x0x0")]).truncate(2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(shuffle_inverse(&Series::one(), 5).unwrap(), Series::one());
        let d = s(&[(2, "1"), (-2, "x0")]);
        let inv = shuffle_inverse(&d, 3).unwrap();
        let expected = Series::from_terms([
            (parse_word("1").unwrap(), ratio(1, 2)),
            (parse_word("x0").unwrap(), ratio(1, 2)),
            (parse_word("x0x0").unwrap(), rat(1)),
            (parse_word("x0x0x0").unwrap(), rat(3)),
        ])
        .with_horizon(Horizon::TruncatedAt(3));
        assert_eq!(inv, expected);
        let d = s(&[(-1, "1"), (1, "x0x1")]);
        let inv = shuffle_inverse(&d, 8).unwrap();
        assert!(d.shuffle_to(&inv, 8).agrees_through(&Series::one(), 8));
        assert_eq!(inv.coefficient(&parse_word("x0x1").unwrap()).unwrap(), rat(-1));
        assert!(matches!(shuffle_inverse(&s(&[(1, "x0")]), 3), Err(Error::NotInvertible)));
    }

    #[test]
    fn quotient_examples() {
        let x0 = s(&[(1, "x0")]);
        assert!(shuffle_quotient(&x0, &Series::one(), 4).unwrap().agrees_through(&x0, 4));
        let c = s(&[(1, "1"), (1, "x1x0")]);
        assert!(shuffle_quotient(&c, &Series::one(), 4).unwrap().agrees_through(&c, 4));
        let c = s(&[(1, "x0"), (1, "x1")]);
        let num = c.shift_letter(Letter::X0).unwrap();
        let den = c.shift_letter(Letter::X1).unwrap();
        assert!(shuffle_quotient(&num, &den, 4).unwrap().agrees_through(&Series::one(), 4));
    }

    #[test]
    fn jets() {
        let j = Jet::from_coeffs([rat(-1), rat(0), rat(1)]);
        assert_eq!(j.coeff(2), rat(1));
        assert_eq!(j.coeff(7), rat(0));
        assert!(Jet::new(s(&[(1, "x1")])).is_err());
    }
}
