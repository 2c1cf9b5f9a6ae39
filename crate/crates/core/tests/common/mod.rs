#![allow(dead_code)]

pub mod oracles;
pub mod suites;

use fliess_core::series::rat;
use fliess_core::{Rational, Series, Word};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Seed shared by every randomized suite; printed with each run.
pub const SEED: [u8; 32] = *b"fliess-series-fixed-seed-0000001";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        max_shrink_iters: 256,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

/// Runs `test` over `cases` draws of `strategy` with the fixed seed.
pub fn check<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    println!("{name}: {cases} cases, seed {:?}", std::str::from_utf8(&SEED).unwrap());
    runner(cases).run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

pub fn word(letters: u8, max_len: usize) -> impl Strategy<Value = Word> {
    vec(0..letters, 0..=max_len).prop_map(Word::from_indices)
}

pub fn nonempty_word(letters: u8, max_len: usize) -> impl Strategy<Value = Word> {
    vec(0..letters, 1..=max_len).prop_map(Word::from_indices)
}

fn to_series(terms: Vec<(Word, i64)>) -> Series {
    Series::from_terms(terms.into_iter().map(|(w, c)| (w, rat(c))))
}

/// Polynomials with small integer coefficients.
pub fn series(letters: u8, max_len: usize, max_terms: usize) -> impl Strategy<Value = Series> {
    vec((word(letters, max_len), -3i64..=3), 0..=max_terms).prop_map(to_series)
}

pub fn proper_series(max_len: usize, max_terms: usize) -> impl Strategy<Value = Series> {
    vec((nonempty_word(2, max_len), -3i64..=3), 0..=max_terms).prop_map(to_series)
}

pub fn nonproper_series(max_len: usize, max_terms: usize) -> impl Strategy<Value = Series> {
    (proper_series(max_len, max_terms), prop_oneof![-3i64..=-1, 1i64..=3])
        .prop_map(|(s, c)| s.add(&Series::constant(rat(c))))
}

/// Polynomial jets `Σ a_k x0^k`.
pub fn jet(max_len: usize) -> impl Strategy<Value = Series> {
    vec(-3i64..=3, 0..=max_len + 1).prop_map(|cs| {
        Series::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(k, c)| (Word::from_indices(std::iter::repeat_n(0, k)), rat(c))),
        )
    })
}

/// Series with relative degree `r`: `c_N + K x0^{r-1} x1 + x0^{r-1} e`
/// with `e` supported on words starting in `x0` or `x1` and `K ≠ 0`.
/// With `nullable` the natural part is confined to `x0^r X0*`.
pub fn with_relative_degree(max_r: usize, nullable: bool) -> impl Strategy<Value = (Series, usize)> {
    (
        1..=max_r,
        prop_oneof![-3i64..=-1, 1i64..=3],
        proper_series(3, 4),
        prop_oneof![-2i64..=-1, 1i64..=2],
        vec(-2i64..=2, 0..=3),
    )
        .prop_map(move |(r, k, e, lead, rest)| {
            let prefix = Word::from_indices(std::iter::repeat_n(0, r - 1));
            let x1 = Word::from_indices([1]);
            let mut c = Series::monomial(rat(k), prefix.concat(&x1));
            // Forced words beyond the linear one must also carry the x0^{r-1} prefix.
            let e = Series::from_terms(e.iter().filter(|(w, _)| **w != x1).map(|(w, v)| (prefix.concat(w), v.clone())));
            c = c.add(&e.forced_part());
            // A nonzero natural part keeps the zero input from nulling `c`.
            let start = if nullable { r } else { 0 };
            for (j, a) in std::iter::once(lead).chain(rest).enumerate() {
                let w = Word::from_indices(std::iter::repeat_n(0, start + j));
                c = c.add(&Series::monomial(rat(a), w));
            }
            (c, r)
        })
}

pub fn factorial(k: usize) -> Rational {
    (1..=k).fold(rat(1), |acc, i| acc * rat(i as i64))
}
