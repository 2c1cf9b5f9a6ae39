//! Shuffle factorization of polynomials and per-factor nullability.
//!
//! The shuffle algebra is isomorphic to a polynomial ring through `𝓛`, so a
//! polynomial factors by mapping it over, factoring there and mapping each
//! factor back. A jet nulls a shuffle product exactly when it nulls one of
//! the factors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lyndon_iso::{alphabet_for, LyndonMap};
use crate::nullability::{classify, verify_null, NullabilityReport, Verdict};
use crate::polyfactor::factor;
use crate::series::{Horizon, Rational, Series};

/// `unit · ⧢ factor^{⧢ multiplicity}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleFactorization {
    pub unit: Rational,
    pub factors: Vec<(Series, usize)>,
}

impl ShuffleFactorization {
    /// The shuffle product of the factors, scaled by the unit.
    pub fn expand(&self) -> Series {
        let mut acc = Series::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.shuffle(&f.shuffle_pow(*m));
        }
        acc
    }
}

/// Factors a nonzero polynomial into shuffle-irreducibles. Each factor is
/// scaled so that its `𝓛` image has coprime integer coefficients and a
/// positive graded-lex leading coefficient.
pub fn factor_shuffle(c: &Series) -> Result<ShuffleFactorization> {
    if !c.is_exact() {
        return Err(Error::domain("shuffle factorization needs a polynomial, not a truncated series"));
    }
    if c.is_zero() {
        return Err(Error::domain("cannot factor the zero series"));
    }
    let mut map = LyndonMap::new(alphabet_for(c));
    let image = map.to_lyndon(c)?;
    let fz = factor(&image)?;
    let mut factors = Vec::with_capacity(fz.factors.len());
    for (p, m) in &fz.factors {
        factors.push((map.from_lyndon(p)?, *m));
    }
    let out = ShuffleFactorization {
        unit: fz.unit,
        factors,
    };
    assert_eq!(&out.expand(), c, "shuffle factorization does not reproduce its input");
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorAnalysis {
    pub series: Series,
    pub multiplicity: usize,
    pub report: NullabilityReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleAnalysis {
    pub unit: Rational,
    pub factors: Vec<FactorAnalysis>,
}

impl ShuffleAnalysis {
    /// Nulling jets of the linearly nullable factors, in factor order.
    pub fn nulling_jets(&self) -> impl Iterator<Item = &crate::composition::Jet> {
        self.factors.iter().filter_map(|f| f.report.nulling_series.as_ref())
    }
}

/// Factors `c` and classifies every factor through length `n`. For a
/// linearly nullable factor the residual order is measured against the
/// whole of `c`.
pub fn nullable_analysis(c: &Series, n: usize) -> Result<ShuffleAnalysis> {
    if !c.constant_term().is_zero() {
        return Err(Error::domain(format!("{c} is not proper")));
    }
    let fz = factor_shuffle(c)?;
    let mut factors = Vec::with_capacity(fz.factors.len());
    for (series, multiplicity) in fz.factors {
        let mut report = classify(&series, n)?;
        if report.verdict == Verdict::LinearlyNullable {
            let jet = report.nulling_series.as_ref().expect("linearly nullable factors carry a jet");
            let r = report.relative_degree.r().expect("linearly nullable factors have relative degree");
            let residual = verify_null(c, jet, n + r)?;
            report.residual_order = Some(match residual.order() {
                Some(k) => k,
                None => match residual.horizon() {
                    Horizon::TruncatedAt(h) => h + 1,
                    Horizon::Exact => usize::MAX,
                },
            });
        }
        factors.push(FactorAnalysis {
            series,
            multiplicity,
            report,
        });
    }
    Ok(ShuffleAnalysis {
        unit: fz.unit,
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;
    use crate::words::parse_word;

    fn s(terms: &[(i64, &str)]) -> Series {
        Series::from_terms(terms.iter().map(|(c, x)| (parse_word(x).unwrap(), rat(*c))))
    }

    #[test]
    fn flagship_factors() {
        let c1 = s(&[(1, "x0"), (1, "x1"), (1, "x0x1x0")]);
        let c2 = s(&[(1, "x0"), (-1, "x1"), (1, "x1x0x1")]);
        let f = factor_shuffle(&c1.shuffle(&c2)).unwrap();
        assert_eq!(f.unit, rat(1));
        assert_eq!(f.factors.len(), 2);
        assert!(f.factors.contains(&(c1, 1)) && f.factors.contains(&(c2, 1)));
    }

    #[test]
    fn powers_and_units() {
        let f = factor_shuffle(&s(&[(2, "x0x0")])).unwrap();
        assert_eq!(f.unit, rat(1));
        assert_eq!(f.factors, vec![(s(&[(1, "x0")]), 2)]);
        let d = s(&[(1, "x0"), (-1, "x1")]);
        let f = factor_shuffle(&d.shuffle(&d)).unwrap();
        assert_eq!(f.unit, rat(1));
        assert_eq!(f.factors, vec![(d, 2)]);
        let f = factor_shuffle(&s(&[(3, "x1")])).unwrap();
        assert_eq!(f.unit, rat(3));
        assert!(factor_shuffle(&Series::zero()).is_err());
    }

    #[test]
    fn analysis_of_mixed_product() {
        let a = s(&[(1, "x0"), (1, "x1")]);
        let b = s(&[(1, "1"), (1, "x1")]);
        let report = nullable_analysis(&a.shuffle(&b), 6).unwrap();
        let verdicts: Vec<_> = report.factors.iter().map(|f| f.report.verdict).collect();
        assert_eq!(verdicts.len(), 2);
        assert!(verdicts.contains(&Verdict::LinearlyNullable));
        assert!(verdicts.contains(&Verdict::NotProper));
        let jets: Vec<_> = report.nulling_jets().collect();
        assert_eq!(jets.len(), 1);
        assert_eq!(jets[0].coeffs_through(3), vec![rat(-1), rat(0), rat(0), rat(0)]);
    }
}
