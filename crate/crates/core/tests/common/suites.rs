//! Randomized identity suites, shared by the property tests and the
//! acceptance run.

use fliess_core::commutative::{CommutativePolynomial, Family, Monomial};
use fliess_core::nullability::verify_null;
use fliess_core::series::rat;
use fliess_core::{
    cfl_factorize, classify, compose, factor_shuffle, from_lyndon, nulling_series, relative_degree,
    shuffle_quotient, to_lyndon, Letter, Series, Verdict, Word,
};
use proptest::collection::vec;
use proptest::prelude::*;

use super::oracles::{brute_cfl_all, proportional};
use super::{check, jet, nonproper_series, series, with_relative_degree, word};

pub const CASES: u32 = 200;

fn x0() -> Word {
    Word::letter(Letter::X0)
}

fn x1() -> Word {
    Word::letter(Letter::X1)
}

/// `(c ⧢ d) ∘ e = (c ∘ e) ⧢ (d ∘ e)` through length 6.
pub fn morphism(cases: u32) -> Result<(), String> {
    let n = 6;
    check("morphism", cases, (series(2, 3, 4), series(2, 3, 4), series(2, 2, 3)), |(c, d, e)| {
        let lhs = compose(&c.shuffle(&d), &e, n).unwrap();
        let rhs = compose(&c, &e, n).unwrap().shuffle_to(&compose(&d, &e, n).unwrap(), n);
        prop_assert!(lhs.agrees_through(&rhs, n), "{lhs} != {rhs}");
        Ok(())
    })
}

/// `(c / d) ∘ e = (c ∘ e) / (d ∘ e)` for non-proper `d`, through length 6.
pub fn quotient(cases: u32) -> Result<(), String> {
    let n = 6;
    check("quotient composition", cases, (series(2, 3, 3), nonproper_series(2, 3), series(2, 2, 3)), |(c, d, e)| {
        let lhs = compose(&shuffle_quotient(&c, &d, n).unwrap(), &e, n).unwrap();
        let rhs = shuffle_quotient(&compose(&c, &e, n).unwrap(), &compose(&d, &e, n).unwrap(), n).unwrap();
        prop_assert!(lhs.agrees_through(&rhs, n), "{lhs} != {rhs}");
        Ok(())
    })
}

/// `x0^{-1}(c ∘ d) = x0^{-1}(c) ∘ d + d ⧢ (x1^{-1}(c) ∘ d)` and
/// `x1^{-1}(c ∘ d) = 0`, through length 5.
pub fn left_shift_composition(cases: u32) -> Result<(), String> {
    let n = 6;
    check("left shift of composition", cases, (series(2, 4, 5), series(2, 3, 4)), |(c, d)| {
        let cd = compose(&c, &d, n).unwrap();
        let lhs = cd.left_shift(&x0()).unwrap();
        let first = compose(&c.left_shift(&x0()).unwrap(), &d, n - 1).unwrap();
        let second = d.shuffle_to(&compose(&c.left_shift(&x1()).unwrap(), &d, n - 1).unwrap(), n - 1);
        let rhs = first.add(&second);
        prop_assert!(lhs.agrees_through(&rhs, n - 1), "{lhs} != {rhs}");
        prop_assert!(cd.left_shift(&x1()).unwrap().is_zero());
        Ok(())
    })
}

/// `𝓛(u ⧢ v) = 𝓛(u) 𝓛(v)` for `|u| + |v| <= 8`, and `𝓛⁻¹ ∘ 𝓛 = id` on
/// series supported on words of length `<= 8`.
pub fn lyndon_isomorphism(cases: u32) -> Result<(), String> {
    check("lyndon multiplicative", cases, (word(2, 4), word(2, 4)), |(u, v)| {
        let (su, sv) = (Series::word(u), Series::word(v));
        let lhs = to_lyndon(&su.shuffle(&sv)).unwrap();
        let rhs = to_lyndon(&su).unwrap().mul(&to_lyndon(&sv).unwrap());
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })?;
    check("lyndon round trip", cases, series(2, 8, 6), |c| {
        let back = from_lyndon(&to_lyndon(&c).unwrap()).unwrap();
        prop_assert_eq!(back, c);
        Ok(())
    })
}

/// Duval's factorization against the exhaustive search, for every binary
/// word up to length 10 and every ternary word up to length 6.
pub fn duval_exhaustive() -> Result<(), String> {
    let mut checked = 0;
    for (letters, max_len) in [(2u8, 10usize), (3, 6)] {
        for len in 1..=max_len {
            let total = (letters as usize).pow(len as u32);
            for code in 0..total {
                let mut c = code;
                let w: Vec<Letter> = (0..len)
                    .map(|_| {
                        let l = Letter((c % letters as usize) as u8);
                        c /= letters as usize;
                        l
                    })
                    .collect();
                let all = brute_cfl_all(&w);
                if all.len() != 1 {
                    return Err(format!("{} factorizations of {:?}", all.len(), w));
                }
                let got: Vec<Vec<Letter>> = cfl_factorize(&w)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .map(|f| f.letters().to_vec())
                    .collect();
                if got != all[0] {
                    return Err(format!("cfl({}) = {got:?}, expected {:?}", Word::new(w), all[0]));
                }
                checked += 1;
            }
        }
    }
    println!("duval: {checked} words checked exhaustively");
    Ok(())
}

/// `l_k + q` with `q` free of `l_k` is irreducible.
fn irreducible_piece() -> impl Strategy<Value = CommutativePolynomial> {
    (0u32..4, vec((0u32..4, 0u32..4, 1i64..=2, prop::bool::ANY), 1..=2)).prop_map(|(k, extra)| {
        let mut terms = vec![(Monomial::var(k), rat(1))];
        for (a, b, c, neg) in extra {
            if a == k || b == k {
                continue;
            }
            let m = Monomial::from_pairs([(a, 1), (b, 1)]);
            terms.push((m, rat(if neg { -c } else { c })));
        }
        CommutativePolynomial::from_terms(terms).with_family(Family::Lyndon)
    })
}

/// Length of the longest word in `from_lyndon(p)`: `l0, l1, l2, l3` stand
/// for words of length 1, 1, 2, 3.
fn weight(p: &CommutativePolynomial) -> u32 {
    const LEN: [u32; 4] = [1, 1, 2, 3];
    p.iter()
        .map(|(m, _)| m.pairs().iter().map(|&(v, e)| LEN[v as usize] * e).sum())
        .max()
        .unwrap_or(0)
}

/// Shuffle products of two or three irreducible series factor back into
/// the same pieces up to scaling.
pub fn refactorization(cases: u32) -> Result<(), String> {
    let pieces = vec(irreducible_piece(), 2..=3)
        .prop_filter("product too long", |ps| ps.iter().map(weight).sum::<u32>() <= 8);
    check("refactorization", cases, pieces, |pieces| {
        let series: Vec<Series> = pieces.iter().map(|p| from_lyndon(p).unwrap()).collect();
        let product = series.iter().fold(Series::one(), |acc, s| acc.shuffle(s));
        let fz = factor_shuffle(&product).unwrap();
        let mut expected: Vec<(Series, usize)> = Vec::new();
        for s in series {
            match expected.iter_mut().find(|(e, _)| proportional(e, &s)) {
                Some((_, m)) => *m += 1,
                None => expected.push((s, 1)),
            }
        }
        prop_assert_eq!(fz.factors.len(), expected.len());
        for (s, m) in &expected {
            let hit = fz.factors.iter().find(|(f, _)| proportional(f, s));
            prop_assert!(hit.is_some_and(|(_, fm)| fm == m), "{s} missing from the factorization");
        }
        Ok(())
    })
}

/// Shuffles of linearly nullable pairs lose the relative degree but are
/// nulled by either factor's jet.
pub fn shuffle_of_linearly_nullable(cases: u32) -> Result<(), String> {
    let n = 6;
    let pair = (with_relative_degree(2, true), with_relative_degree(2, true));
    check("linearly nullable shuffles", cases, pair, |((c, _), (d, _))| {
        let p = c.shuffle(&d);
        prop_assert!(!relative_degree(&p).unwrap().is_defined());
        prop_assert_ne!(classify(&p, n).unwrap().verdict, Verdict::LinearlyNullable);
        for factor in [&c, &d] {
            let jet = nulling_series(factor, n).unwrap();
            let residual = verify_null(&p, &jet, n).unwrap();
            prop_assert!(residual.is_zero(), "residual {residual}");
        }
        Ok(())
    })
}

/// `(c ∘ c_u, x0^k) = (c, x0^k)` for every `k < r`.
pub fn prefix_preservation(cases: u32) -> Result<(), String> {
    check("prefix preservation", cases, (with_relative_degree(3, false), jet(4)), |((c, r), cu)| {
        let y = compose(&c, &cu, 8).unwrap();
        for k in 0..r {
            let w = Word::power(Letter::X0, k);
            prop_assert_eq!(y.get(&w), c.get(&w), "k = {}", k);
        }
        Ok(())
    })
}
