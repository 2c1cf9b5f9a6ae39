//! Exact algebra of Chen–Fliess series for single-input systems.

pub mod commutative;
pub mod composition;
pub mod error;
pub mod json;
pub mod lyndon_iso;
pub mod nullability;
pub mod parse;
pub mod polyfactor;
pub mod realization;
pub mod series;
pub mod shuffle_factor;
pub mod words;

pub use commutative::{CommutativePolynomial, Family, Monomial};
pub use composition::{compose, shuffle_inverse, shuffle_quotient, Jet};
pub use error::{Error, Result};
pub use lyndon_iso::{from_lyndon, to_lyndon, LyndonMap, LyndonWeight};
pub use nullability::{classify, nulling_series, relative_degree, NullabilityReport, RelativeDegree, Verdict};
pub use parse::{parse_commutative, parse_rational, parse_series, parse_time_polynomial};
pub use polyfactor::{factor, is_irreducible, Factorization};
pub use realization::{
    evaluate_fliess, generating_series, iterated_integral, jet_to_polynomial, lie_derivative, polynomial_to_jet,
    Realization, TimePolynomial,
};
pub use series::{Horizon, Rational, Series};
pub use shuffle_factor::{factor_shuffle, nullable_analysis, ShuffleAnalysis, ShuffleFactorization};
pub use words::{cfl_factorize, Alphabet, Letter, LyndonIndex, LyndonTable, Word};
