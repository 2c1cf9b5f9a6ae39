//! Noncommutative polynomials and truncated power series over the rationals.
//!
//! A [`Series`] stores its nonzero coefficients in a sparse map together
//! with a [`Horizon`]. An exact series is a true polynomial. A series
//! truncated at `N` only knows the coefficients of words of length `<= N`;
//! every product reports its result only up to the length that is fully
//! determined by the operands.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Exact arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// How much of a series is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Horizon {
    /// Every coefficient is stored; the series is a polynomial.
    Exact,
    /// Coefficients of words longer than `N` are unspecified.
    TruncatedAt(usize),
}

impl Horizon {
    pub fn bound(self) -> Option<usize> {
        match self {
            Horizon::Exact => None,
            Horizon::TruncatedAt(n) => Some(n),
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Horizon::Exact)
    }

    /// Whether a word of length `len` has a known coefficient.
    pub fn admits(self, len: usize) -> bool {
        match self {
            Horizon::Exact => true,
            Horizon::TruncatedAt(n) => len <= n,
        }
    }

    pub fn min(self, other: Horizon) -> Horizon {
        match (self, other) {
            (Horizon::Exact, h) | (h, Horizon::Exact) => h,
            (Horizon::TruncatedAt(a), Horizon::TruncatedAt(b)) => Horizon::TruncatedAt(a.min(b)),
        }
    }

    fn from_bound(n: usize) -> Horizon {
        if n == usize::MAX {
            Horizon::Exact
        } else {
            Horizon::TruncatedAt(n)
        }
    }
}

/// A map from words to nonzero rationals plus a truncation horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<Word, Rational>,
    horizon: Horizon,
}

impl Default for Series {
    fn default() -> Self {
        Series::zero()
    }
}

impl Series {
    pub fn zero() -> Self {
        Series {
            terms: BTreeMap::new(),
            horizon: Horizon::Exact,
        }
    }

    /// The unit `1` (the empty word with coefficient one).
    pub fn one() -> Self {
        Series::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Series::monomial(c, Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Series::monomial(Rational::one(), w)
    }

    pub fn letter(l: Letter) -> Self {
        Series::word(Word::letter(l))
    }

    pub fn monomial(c: Rational, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Series {
            terms,
            horizon: Horizon::Exact,
        }
    }

    /// Collects terms, merging repeated words and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in terms {
            accumulate(&mut acc, w, c);
        }
        Series {
            terms: acc,
            horizon: Horizon::Exact,
        }
    }

    /// Convenience constructor from `(coefficient, letter indices)` pairs.
    pub fn from_int_terms(terms: &[(i64, &[u8])]) -> Self {
        Series::from_terms(
            terms
                .iter()
                .map(|(c, w)| (Word::from_indices(w.iter().copied()), rat(*c))),
        )
    }

    /// Replaces the horizon, dropping any stored word it does not admit.
    pub fn with_horizon(mut self, horizon: Horizon) -> Self {
        self.set_horizon(horizon);
        self
    }

    fn set_horizon(&mut self, horizon: Horizon) {
        if let Horizon::TruncatedAt(n) = horizon {
            self.terms.retain(|w, _| w.len() <= n);
        }
        self.horizon = horizon;
    }

    pub fn horizon(&self) -> Horizon {
        self.horizon
    }

    pub fn is_exact(&self) -> bool {
        self.horizon.is_exact()
    }

    /// True if no coefficient is stored. For truncated series this means
    /// zero through the horizon.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted by length, then lexicographically.
    pub fn iter_graded(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.graded_cmp(b.0));
        v.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.terms.contains_key(w)
    }

    /// Stored coefficient, zero when absent. Does not check the horizon.
    pub fn get(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient `(c, w)`; querying past the horizon is an error.
    pub fn coefficient(&self, w: &Word) -> Result<Rational> {
        match self.horizon {
            Horizon::TruncatedAt(n) if w.len() > n => Err(Error::Truncation {
                length: w.len(),
                horizon: n,
            }),
            _ => Ok(self.get(w)),
        }
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Rational {
        self.get(&Word::empty())
    }

    pub fn is_proper(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Length of the shortest word in the support; `None` stands for `+inf`.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).min()
    }

    /// Length of the longest stored word.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// A lower bound on the true order, taking unknown coefficients into
    /// account. `usize::MAX` stands for the exact zero series.
    fn order_bound(&self) -> usize {
        let known = self.order().unwrap_or(usize::MAX);
        match self.horizon {
            Horizon::Exact => known,
            Horizon::TruncatedAt(n) => known.min(n.saturating_add(1)),
        }
    }

    /// Horizon of a bilinear product whose word lengths add.
    fn product_horizon(&self, other: &Series) -> Horizon {
        let mut bound = usize::MAX;
        if let Horizon::TruncatedAt(n) = self.horizon {
            bound = bound.min(n.saturating_add(other.order_bound()));
        }
        if let Horizon::TruncatedAt(n) = other.horizon {
            bound = bound.min(n.saturating_add(self.order_bound()));
        }
        Horizon::from_bound(bound)
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.terms.keys().filter_map(|w| w.max_letter()).max()
    }

    pub fn scalar_mul(&self, a: &Rational) -> Series {
        if a.is_zero() {
            return Series::zero().with_horizon(self.horizon);
        }
        Series {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * a)).collect(),
            horizon: self.horizon,
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        let mut out = Series {
            terms,
            horizon: Horizon::Exact,
        };
        out.set_horizon(self.horizon.min(other.horizon));
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
            horizon: self.horizon,
        }
    }

    /// Concatenation product.
    pub fn concat(&self, other: &Series) -> Series {
        let horizon = self.product_horizon(other);
        let mut acc = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if !horizon.admits(u.len() + v.len()) {
                    continue;
                }
                add_into(&mut acc, u.concat(v), a * b);
            }
        }
        finish(acc, horizon)
    }

    /// Shuffle product.
    pub fn shuffle(&self, other: &Series) -> Series {
        self.shuffle_bounded(other, Horizon::Exact)
    }

    /// Shuffle product keeping only words of length `<= n`.
    pub fn shuffle_to(&self, other: &Series, n: usize) -> Series {
        self.shuffle_bounded(other, Horizon::TruncatedAt(n))
    }

    fn shuffle_bounded(&self, other: &Series, cap: Horizon) -> Series {
        let horizon = self.product_horizon(other).min(cap);
        let mut acc = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if !horizon.admits(u.len() + v.len()) {
                    continue;
                }
                let ab = a * b;
                for (w, k) in shuffle_words(u, v) {
                    add_into(&mut acc, w, &ab * Rational::from_integer(BigInt::from(k)));
                }
            }
        }
        finish(acc, horizon)
    }

    /// `n`-fold shuffle power.
    pub fn shuffle_pow(&self, n: usize) -> Series {
        let mut out = Series::one();
        for _ in 0..n {
            out = out.shuffle(self);
        }
        out
    }

    /// `n`-fold concatenation power.
    pub fn concat_pow(&self, n: usize) -> Series {
        let mut out = Series::one();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// The left shift `prefix^{-1}(c)`: keeps the words starting with
    /// `prefix` and strips it. The horizon drops by `|prefix|`.
    pub fn left_shift(&self, prefix: &Word) -> Result<Series> {
        let horizon = match self.horizon {
            Horizon::Exact => Horizon::Exact,
            Horizon::TruncatedAt(n) if prefix.len() <= n => Horizon::TruncatedAt(n - prefix.len()),
            Horizon::TruncatedAt(n) => {
                return Err(Error::InsufficientHorizon {
                    needed: prefix.len(),
                    horizon: n,
                })
            }
        };
        Ok(Series {
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| w.strip_prefix(prefix).map(|s| (s, c.clone())))
                .collect(),
            horizon,
        })
    }

    /// Single-letter left shift; never fails on an exact series.
    pub fn shift_letter(&self, l: Letter) -> Result<Series> {
        self.left_shift(&Word::letter(l))
    }

    /// `c_N`: the terms supported on powers of `x0`.
    pub fn natural_part(&self) -> Series {
        Series {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.is_natural())
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
            horizon: self.horizon,
        }
    }

    /// `c_F = c - c_N`.
    pub fn forced_part(&self) -> Series {
        Series {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| !w.is_natural())
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
            horizon: self.horizon,
        }
    }

    /// Drops words longer than `n` and marks the result truncated at `n`.
    pub fn truncate(&self, n: usize) -> Series {
        self.clone().with_horizon(self.horizon.min(Horizon::TruncatedAt(n)))
    }

    /// Equality of coefficients for every word of length `<= n`.
    pub fn agrees_through(&self, other: &Series, n: usize) -> bool {
        let a = self.terms.iter().filter(|(w, _)| w.len() <= n);
        let b = other.terms.iter().filter(|(w, _)| w.len() <= n);
        a.eq(b)
    }

    /// True if every stored word is a power of `x0`.
    pub fn is_natural(&self) -> bool {
        self.terms.keys().all(|w| w.is_natural())
    }

    /// The same terms with the horizon forgotten (treated as a polynomial).
    pub fn into_exact(mut self) -> Series {
        self.horizon = Horizon::Exact;
        self
    }
}

fn accumulate(map: &mut BTreeMap<Word, Rational>, w: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn add_into(acc: &mut HashMap<Word, Rational>, w: Word, c: Rational) {
    match acc.get_mut(&w) {
        Some(v) => *v += c,
        None => {
            acc.insert(w, c);
        }
    }
}

fn finish(acc: HashMap<Word, Rational>, horizon: Horizon) -> Series {
    Series {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        horizon,
    }
    .with_horizon(horizon)
}

/// Shuffle of two words as `(word, multiplicity)` pairs.
///
/// Dynamic programming over prefixes: the interleavings of `a[..i]` and
/// `b[..j]` end either in `a[i-1]` or in `b[j-1]`.
pub fn shuffle_words(a: &[Letter], b: &[Letter]) -> Vec<(Word, u128)> {
    if a.is_empty() {
        return vec![(Word::new(b.to_vec()), 1)];
    }
    if b.is_empty() {
        return vec![(Word::new(a.to_vec()), 1)];
    }
    // Powers of a single common letter collapse to a binomial coefficient.
    let l = a[0];
    if a.iter().chain(b).all(|&x| x == l) {
        return vec![(Word::power(l, a.len() + b.len()), binomial(a.len() + b.len(), a.len()))];
    }

    let n = b.len();
    let mut prev: Vec<HashMap<Vec<Letter>, u128>> = (0..=n)
        .map(|j| HashMap::from([(b[..j].to_vec(), 1u128)]))
        .collect();
    for i in 1..=a.len() {
        let mut cur: Vec<HashMap<Vec<Letter>, u128>> = Vec::with_capacity(n + 1);
        cur.push(HashMap::from([(a[..i].to_vec(), 1u128)]));
        for j in 1..=n {
            let mut cell: HashMap<Vec<Letter>, u128> =
                HashMap::with_capacity(prev[j].len() + cur[j - 1].len());
            for (w, k) in &prev[j] {
                let mut w2 = Vec::with_capacity(i + j);
                w2.extend_from_slice(w);
                w2.push(a[i - 1]);
                *cell.entry(w2).or_insert(0) += k;
            }
            for (w, k) in &cur[j - 1] {
                let mut w2 = Vec::with_capacity(i + j);
                w2.extend_from_slice(w);
                w2.push(b[j - 1]);
                let e = cell.entry(w2).or_insert(0);
                *e = e.checked_add(*k).expect("shuffle multiplicity overflow");
            }
            cur.push(cell);
        }
        prev = cur;
    }
    prev.pop()
        .unwrap()
        .into_iter()
        .map(|(w, k)| (Word::new(w), k))
        .collect()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

/// Scalar multiplication.
impl Mul<&Series> for &Rational {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        rhs.scalar_mul(self)
    }
}

pub(crate) fn write_coeff_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    body: Option<&str>,
) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    match body {
        None => write!(f, "{mag}"),
        Some(b) if mag.is_one() => f.write_str(b),
        Some(b) => write!(f, "{mag} {b}"),
    }
}

impl fmt::Display for Series {
    /// Graded-lex terms, e.g. `2 x0^2 - 2 x1^2 + 2 x0^2 x1 x0`; a truncated
    /// series ends in `+ O(N+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.iter_graded() {
            let body = if w.is_empty() { None } else { Some(w.to_power_string()) };
            write_coeff_term(f, first, c, body.as_deref())?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        if let Horizon::TruncatedAt(n) = self.horizon {
            write!(f, " + O({})", n + 1)?;
        }
        Ok(())
    }
}

/// Orders series by their graded term lists; used for canonical sorting.
pub fn graded_series_cmp(a: &Series, b: &Series) -> Ordering {
    let ta: Vec<_> = a.iter_graded().collect();
    let tb: Vec<_> = b.iter_graded().collect();
    for (x, y) in ta.iter().zip(tb.iter()) {
        let o = x.0.graded_cmp(y.0).then_with(|| x.1.cmp(y.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    ta.len().cmp(&tb.len())
}
