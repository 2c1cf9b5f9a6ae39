mod common;

use common::suites::{self, CASES};

#[test]
fn composition_is_a_shuffle_morphism() {
    suites::morphism(CASES).unwrap();
}

#[test]
fn composition_commutes_with_quotients() {
    suites::quotient(CASES).unwrap();
}

#[test]
fn left_shift_of_composition() {
    suites::left_shift_composition(CASES).unwrap();
}

#[test]
fn lyndon_map_is_an_isomorphism() {
    suites::lyndon_isomorphism(CASES).unwrap();
}

#[test]
fn duval_matches_exhaustive_search() {
    suites::duval_exhaustive().unwrap();
}

#[test]
fn shuffle_products_refactor() {
    suites::refactorization(CASES).unwrap();
}

#[test]
fn linearly_nullable_shuffles() {
    suites::shuffle_of_linearly_nullable(CASES).unwrap();
}

#[test]
fn composition_preserves_natural_prefix() {
    suites::prefix_preservation(CASES).unwrap();
}

#[test]
fn rendering_parses_back() {
    use fliess_core::{json, parse_commutative, parse_series, to_lyndon};
    common::check("render round trip", CASES, common::series(3, 5, 6), |c| {
        let text = c.to_string();
        let back = parse_series(&text).unwrap();
        proptest::prop_assert_eq!(&back, &c);
        proptest::prop_assert_eq!(back.to_string(), text);
        proptest::prop_assert_eq!(&json::series_from(&json::series(&c)).unwrap(), &c);
        let p = to_lyndon(&c).unwrap();
        proptest::prop_assert_eq!(&parse_commutative(&p.to_string()).unwrap(), &p);
        Ok(())
    })
    .unwrap();
}
