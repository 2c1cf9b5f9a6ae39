//! Factorization of multivariate polynomials over the rationals.
//!
//! The polynomial is made primitive over the integers and stripped of its
//! monomial content. A Kronecker substitution `v_i → y^{W_i}`, with
//! `W_{i+1} = W_i (deg_{v_i} + 1)`, maps it injectively onto a univariate
//! integer polynomial whose irreducible factors are found by
//! Berlekamp–Hensel–Zassenhaus. Every multivariate factor maps onto a
//! sub-multiset product of those, so the smallest sub-multisets whose
//! inverse image divides exactly are the irreducible factors.

mod hensel;
mod modular;
mod univariate;
mod zpoly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::commutative::{CommutativePolynomial, Monomial};
use crate::error::{Error, Result};
use crate::series::Rational;

use univariate::Combinations;
use zpoly::ZPoly;

/// Largest number of distinct variables accepted by [`factor`].
pub const MAX_VARIABLES: usize = 6;
/// Largest total degree accepted by [`factor`].
pub const MAX_TOTAL_DEGREE: u32 = 8;
/// Largest degree of the Kronecker image accepted by [`factor`].
pub const MAX_SUBSTITUTED_DEGREE: usize = 600;

/// `unit · Π factor^multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(CommutativePolynomial, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> CommutativePolynomial {
        let mut acc = CommutativePolynomial::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u32));
        }
        acc
    }
}

/// Factors `p` into irreducibles over the rationals.
///
/// Each factor has coprime integer coefficients and a positive leading
/// coefficient under graded-lex; factors are sorted by degree, then by
/// their rendering.
pub fn factor(p: &CommutativePolynomial) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::domain("cannot factor the zero polynomial"));
    }
    let vars = p.variables();
    if vars.len() > MAX_VARIABLES {
        return Err(Error::Capacity(format!(
            "{} variables, at most {MAX_VARIABLES} supported",
            vars.len()
        )));
    }
    let degree = p.total_degree().unwrap_or(0);
    if degree > MAX_TOTAL_DEGREE {
        return Err(Error::Capacity(format!(
            "total degree {degree}, at most {MAX_TOTAL_DEGREE} supported"
        )));
    }
    let family = p.family();
    let (content, primitive) = integer_primitive(p);
    let mut factors: Vec<CommutativePolynomial> = Vec::new();

    let mut rest = primitive;
    let shared = monomial_content(&rest);
    for &(v, e) in shared.pairs() {
        for _ in 0..e {
            factors.push(CommutativePolynomial::var(v));
        }
    }
    rest = rest.exact_div(&CommutativePolynomial::from_terms([(shared, Rational::one())])).expect("monomial content divides");
    if !rest.is_constant() {
        factors.extend(factor_primitive(&rest)?);
    }

    let mut grouped: BTreeMap<(u32, String), (CommutativePolynomial, usize)> = BTreeMap::new();
    for f in factors {
        let f = f.with_family(family);
        let key = (f.total_degree().unwrap_or(0), f.to_string());
        grouped.entry(key).or_insert((f, 0)).1 += 1;
    }
    let factors: Vec<_> = grouped.into_values().collect();
    let out = Factorization {
        unit: content,
        factors,
    };
    assert_eq!(&out.expand().with_family(family), p, "factorization does not reproduce its input");
    Ok(out)
}

/// True when `p` is irreducible over the rationals.
pub fn is_irreducible(p: &CommutativePolynomial) -> Result<bool> {
    if p.is_constant() {
        return Err(Error::domain("irreducibility is defined for nonconstant polynomials"));
    }
    let f = factor(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

fn to_integer(c: &Rational) -> BigInt {
    assert!(c.is_integer(), "coefficient {c} is not an integer");
    c.to_integer()
}

/// `(c, q)` with `p = c q`, `q` having coprime integer coefficients and a
/// positive leading coefficient.
fn integer_primitive(p: &CommutativePolynomial) -> (Rational, CommutativePolynomial) {
    let den = p.iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let scaled = p.scalar_mul(&Rational::from_integer(den.clone()));
    let mut g = scaled.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(&to_integer(c)));
    if scaled.leading_term().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    let content = Rational::new(g.clone(), den);
    let q = scaled.scalar_mul(&Rational::new(BigInt::one(), g));
    (content, q)
}

fn normalize(p: &CommutativePolynomial) -> CommutativePolynomial {
    integer_primitive(p).1
}

fn monomial_content(p: &CommutativePolynomial) -> Monomial {
    let vars = p.variables();
    Monomial::from_pairs(vars.into_iter().map(|v| {
        let e = p.iter().map(|(m, _)| m.exponent(v)).min().unwrap_or(0);
        (v, e)
    }))
}

/// Mixed-radix Kronecker map for the variables of one polynomial.
struct Kronecker {
    vars: Vec<u32>,
    radix: Vec<usize>,
    weight: Vec<usize>,
}

impl Kronecker {
    fn new(p: &CommutativePolynomial) -> Result<Self> {
        let vars = p.variables();
        let radix: Vec<usize> = vars.iter().map(|&v| p.degree_in(v) as usize + 1).collect();
        let mut weight = Vec::with_capacity(vars.len());
        let mut w: usize = 1;
        let mut top: usize = 0;
        for &r in &radix {
            weight.push(w);
            top += (r - 1) * w;
            w = w.saturating_mul(r);
        }
        if top > MAX_SUBSTITUTED_DEGREE {
            return Err(Error::Capacity(format!(
                "Kronecker image of degree {top}, at most {MAX_SUBSTITUTED_DEGREE} supported"
            )));
        }
        Ok(Kronecker { vars, radix, weight })
    }

    fn forward(&self, p: &CommutativePolynomial) -> ZPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (m, c) in p.iter() {
            let e: usize = self
                .vars
                .iter()
                .zip(&self.weight)
                .map(|(&v, &w)| m.exponent(v) as usize * w)
                .sum();
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += to_integer(c);
        }
        ZPoly::new(coeffs)
    }

    fn backward(&self, f: &ZPoly) -> CommutativePolynomial {
        CommutativePolynomial::from_terms(f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
            |(e, c)| {
                let pairs = self.vars.iter().enumerate().map(|(i, &v)| {
                    let digit = (e / self.weight[i]) % self.radix[i];
                    (v, digit.to_u32().expect("small exponent"))
                });
                (Monomial::from_pairs(pairs), Rational::from_integer(c.clone()))
            },
        ))
    }
}

/// Irreducible factors (with repetition) of a primitive integer polynomial
/// with no monomial content.
fn factor_primitive(p: &CommutativePolynomial) -> Result<Vec<CommutativePolynomial>> {
    let kron = Kronecker::new(p)?;
    let image = kron.forward(p).primitive();
    let mut pool: Vec<ZPoly> = Vec::new();
    for (g, m) in univariate::factor(&image) {
        for _ in 0..m {
            pool.push(g.clone());
        }
    }
    let mut current = p.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while !current.is_constant() {
        assert!(size <= pool.len(), "univariate factors exhausted before the polynomial");
        let mut found = None;
        let mut tried = std::collections::HashSet::new();
        for subset in Combinations::new(pool.len(), size) {
            let key: Vec<&ZPoly> = subset.iter().map(|&i| &pool[i]).collect();
            if !tried.insert(key) {
                continue;
            }
            let prod = subset.iter().fold(ZPoly::one(), |acc, &i| acc.mul(&pool[i]));
            let candidate = normalize(&kron.backward(&prod));
            if candidate.is_constant() {
                continue;
            }
            if let Some(q) = current.exact_div(&candidate) {
                found = Some((subset, candidate, q));
                break;
            }
        }
        match found {
            Some((subset, candidate, q)) => {
                for &i in subset.iter().rev() {
                    pool.remove(i);
                }
                out.push(candidate);
                current = q;
            }
            None => size += 1,
        }
    }
    Ok(out)
}
