//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fliess_core::nullability::verify_null;
use fliess_core::realization::{evaluate_fliess, generating_series, TimePolynomial};
use fliess_core::series::{rat, ratio};
use fliess_core::{
    classify, compose, factor_shuffle, is_irreducible, nullable_analysis, parse_commutative,
    parse_series, relative_degree, to_lyndon, Letter, Realization, Series, Verdict, Word,
};

use common::suites;

const C1: &str = "x0 + x1 + x0 x1 x0";
const C2: &str = "x0 - x1 + x1 x0 x1";

const FLAGSHIP: &str = "2 x0^2 - 2 x1^2 + 2 x0^2 x1 x0 + 2 x0 x1 x0^2 - 2 x0 x1^2 x0
    + 2 x1 x0^2 x1 + 2 x1 x0 x1^2 + 2 x1^2 x0 x1 + 2 x0 x1 x0 x1 x0 x1
    + 2 x0 x1 x0 x1^2 x0 + 4 x0 x1^2 x0^2 x1 + 2 x0 x1^2 x0 x1 x0
    + 2 x1 x0^2 x1 x0 x1 + 4 x1 x0^2 x1^2 x0 + 2 x1 x0 x1 x0^2 x1
    + 2 x1 x0 x1 x0 x1 x0";

const FLAGSHIP_L: &str = "l0^2 - l1^2 + l0^2 l2 + l1^2 l2 + l0 l1 l2^2 - 2 l0 l3
    + 2 l1 l3 - 2 l1 l2 l3 - 2 l0 l4 - 2 l1 l4 - 2 l0 l2 l4 + 4 l3 l4";

fn s(text: &str) -> Series {
    parse_series(text).unwrap()
}

fn flagship() -> Series {
    s(C1).shuffle(&s(C2))
}

fn x0_power_coeffs(c: &Series, upto: usize) -> Vec<fliess_core::Rational> {
    (0..=upto).map(|k| c.get(&Word::power(Letter::X0, k))).collect()
}

fn criterion_1() {
    let c = flagship();
    let listed = s(FLAGSHIP);
    assert_eq!(listed.len(), 16);
    assert_eq!(c, listed);
    let start = Instant::now();
    let fz = factor_shuffle(&c).unwrap();
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "factorization took {elapsed:?}");
    assert_eq!(fz.unit, rat(1));
    assert!(fz.factors.iter().all(|(_, m)| *m == 1));
    let mut got: Vec<Series> = fz.factors.iter().map(|(f, _)| f.clone()).collect();
    got.sort_by_key(|f| f.to_string());
    let mut expected = vec![s(C1), s(C2)];
    expected.sort_by_key(|f| f.to_string());
    assert_eq!(got, expected);
}

fn criterion_2() {
    let golden = [
        ("x0 x1 x0", "l0 l2 - 2 l3"),
        ("x0^2 x1 x0", "l0 l3 - 3 l5"),
        ("x0 x1 x0^2", "1/2 l0^2 l2 - 2 l0 l3 + 3 l5"),
    ];
    for (word, image) in golden {
        assert_eq!(to_lyndon(&s(word)).unwrap(), parse_commutative(image).unwrap(), "{word}");
    }
    let cl = to_lyndon(&flagship()).unwrap();
    assert_eq!(cl.len(), 12);
    assert_eq!(cl, parse_commutative(FLAGSHIP_L).unwrap());
}

fn criterion_3() {
    let c = flagship();
    let analysis = nullable_analysis(&c, 8).unwrap();
    let jets: Vec<Vec<_>> = analysis.nulling_jets().map(|j| x0_power_coeffs(j.series(), 8)).collect();
    let expected = [
        [1, 0, 1, 0, 7, 0, 127, 0, 4369].map(rat).to_vec(),
        [-1, 0, 1, 0, -3, 0, 15, 0, -105].map(rat).to_vec(),
    ];
    assert_eq!(jets.len(), 2);
    for e in &expected {
        assert!(jets.contains(e), "missing jet {e:?}");
    }

    let mut leading = Vec::new();
    for jet in analysis.nulling_jets() {
        let through9 = verify_null(&c, jet.series(), 9).unwrap();
        assert!(through9.is_zero(), "residual {through9}");
        let short = jet.series().truncate(6).into_exact();
        let residual = compose(&c, &short, 12).unwrap();
        let order = residual.order().expect("truncated jets leave a residual");
        assert!(order >= 10, "residual order {order}");
        leading.push(residual.get(&Word::power(Letter::X0, order)));
    }
    leading.sort();
    assert_eq!(leading, vec![rat(2100), rat(87380)]);
}

fn criterion_4() {
    let zero = |c: &str, u: &str| compose(&s(c), &s(u), 10).unwrap().is_zero();
    assert!(zero("x0^2 - x1 x0", "1"));
    assert!(zero("x0 + x1", "-1"));
    assert!(zero("x0^2 - x1", "x0"));
    let rd = relative_degree(&s("x0 + x0 x1")).unwrap();
    assert_eq!(rd.r(), Some(2));
    assert_eq!(classify(&s("x0 + x0 x1"), 10).unwrap().verdict, Verdict::NotNullable);
    assert_eq!(classify(&s("1 + x1"), 10).unwrap().verdict, Verdict::NotProper);
    assert!(is_irreducible(&parse_commutative("l1^3 - l0^2 l1 - l0^4").unwrap()).unwrap());
}

type Suite = fn() -> Result<(), String>;

fn criterion_5() {
    let suites: [(&str, Suite); 7] = [
        ("morphism", || suites::morphism(suites::CASES)),
        ("quotient composition", || suites::quotient(suites::CASES)),
        ("left shift of composition", || suites::left_shift_composition(suites::CASES)),
        ("lyndon isomorphism", || suites::lyndon_isomorphism(suites::CASES)),
        ("duval", suites::duval_exhaustive),
        ("refactorization", || suites::refactorization(suites::CASES)),
        ("linearly nullable shuffles", || suites::shuffle_of_linearly_nullable(suites::CASES)),
    ];
    for (name, suite) in suites {
        let start = Instant::now();
        suite().unwrap();
        let elapsed = start.elapsed();
        println!("  {name}: {elapsed:.2?}");
        assert!(elapsed < Duration::from_secs(60), "{name} took {elapsed:?}");
    }
}

fn criterion_6() {
    let z = |t: &str| parse_commutative(t).unwrap();
    let sys = Realization::new(
        vec![rat(0), rat(0), rat(0)],
        vec![z("1"), z("z3"), z("1")],
        vec![z("-1"), z("-1"), z("0")],
        z("z1 z2"),
    )
    .unwrap();
    let c = generating_series(&sys, 4).unwrap();
    let expected = s("x0 - x1").shuffle(&s("x0^2 - x1"));
    assert_eq!(c.clone().into_exact(), expected.truncate(4).into_exact());
    for u in [TimePolynomial::one(), TimePolynomial::t()] {
        let y = evaluate_fliess(&c, &u, 4).unwrap();
        assert!(y.is_zero(), "F_c[{u}] = {y}");
    }
    // The same loop with a nonzero output, as a control.
    let y = evaluate_fliess(&c, &TimePolynomial::new(vec![rat(0)]), 4).unwrap();
    assert_eq!(y.coeff(3), ratio(1, 2));
}

fn criterion_7() {
    suites::prefix_preservation(100).unwrap();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 7] = [
        ("flagship shuffle factorization", criterion_1),
        ("Lyndon map golden values", criterion_2),
        ("nulling series and residuals", criterion_3),
        ("small golden examples", criterion_4),
        ("property suites", criterion_5),
        ("realization loop", criterion_6),
        ("natural prefix under composition", criterion_7),
    ];
    std::panic::set_hook(Box::new(|info| println!("  {info}")));
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(run)).is_ok();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} ({name}, {:.2?})", i + 1, start.elapsed());
        if !ok {
            failed.push(i + 1);
        }
    }
    let _ = std::panic::take_hook();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
