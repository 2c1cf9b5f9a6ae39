//! Polynomial control-affine systems `ż = g0(z) + g1(z) u`, `y = h(z)`:
//! their generating series, and exact evaluation of Fliess operators on
//! polynomial inputs.
//!
//! For `η = x_{ik} … x_{i1}`, `(c, η) = L_{g_{i1}} ⋯ L_{g_{ik}} h (z0)`, so the
//! field of the leftmost letter differentiates `h` first. This matches
//! `E_{x_i η̄}[u](t) = ∫_0^t u_i(τ) E_η̄[u](τ) dτ`: the leftmost letter is the
//! outermost integral.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::commutative::{CommutativePolynomial, Family};
use crate::composition::Jet;
use crate::error::{Error, Result};
use crate::series::{Horizon, Rational, Series};
use crate::words::{Letter, Word};

/// `ż = g0(z) + g1(z) u`, `y = h(z)`, `z(0) = z0`, in state variables
/// `z1 … zn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    n: usize,
    z0: Vec<Rational>,
    g0: Vec<CommutativePolynomial>,
    g1: Vec<CommutativePolynomial>,
    h: CommutativePolynomial,
}

fn check_state_poly(p: &CommutativePolynomial, n: usize) -> Result<()> {
    match p.variables().into_iter().find(|&v| v == 0 || v as usize > n) {
        Some(v) => Err(Error::domain(format!("z{v} is not a state of a system of dimension {n}"))),
        None => Ok(()),
    }
}

impl Realization {
    pub fn new(
        z0: Vec<Rational>,
        g0: Vec<CommutativePolynomial>,
        g1: Vec<CommutativePolynomial>,
        h: CommutativePolynomial,
    ) -> Result<Self> {
        let n = z0.len();
        if g0.len() != n || g1.len() != n {
            return Err(Error::domain(format!(
                "state dimension {n} but vector fields of length {} and {}",
                g0.len(),
                g1.len()
            )));
        }
        for p in g0.iter().chain(&g1).chain(std::iter::once(&h)) {
            check_state_poly(p, n)?;
        }
        let state = |v: Vec<CommutativePolynomial>| v.into_iter().map(|p| p.with_family(Family::State)).collect();
        Ok(Realization {
            n,
            z0,
            g0: state(g0),
            g1: state(g1),
            h: h.with_family(Family::State),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn z0(&self) -> &[Rational] {
        &self.z0
    }

    pub fn g0(&self) -> &[CommutativePolynomial] {
        &self.g0
    }

    pub fn g1(&self) -> &[CommutativePolynomial] {
        &self.g1
    }

    pub fn h(&self) -> &CommutativePolynomial {
        &self.h
    }

    fn field(&self, l: Letter) -> &[CommutativePolynomial] {
        if l == Letter::X0 {
            &self.g0
        } else {
            &self.g1
        }
    }

    fn at_z0(&self, p: &CommutativePolynomial) -> Rational {
        p.evaluate(|v| self.z0[v as usize - 1].clone())
    }
}

/// `L_g h = Σ_j ∂h/∂z_j · g_j`, with `g[j-1]` the `z_j` component.
pub fn lie_derivative(h: &CommutativePolynomial, g: &[CommutativePolynomial]) -> Result<CommutativePolynomial> {
    check_state_poly(h, g.len())?;
    let mut acc = CommutativePolynomial::zero();
    for v in h.variables() {
        acc = acc.add(&h.derivative(v).mul(&g[v as usize - 1]));
    }
    Ok(acc.with_family(Family::State))
}

/// Coefficients `(c, η)` for all words of length at most `n`, as a series
/// truncated at `n`.
pub fn generating_series(r: &Realization, n: usize) -> Result<Series> {
    let mut terms = Vec::new();
    let mut layer = vec![(Word::empty(), r.h.clone())];
    for len in 0..=n {
        let mut next = Vec::new();
        for (w, p) in layer {
            terms.push((w.clone(), r.at_z0(&p)));
            if len < n {
                for l in [Letter::X0, Letter::X1] {
                    let mut wl = w.clone();
                    wl.push(l);
                    next.push((wl, lie_derivative(&p, r.field(l))?));
                }
            }
        }
        layer = next;
    }
    Ok(Series::from_terms(terms).with_horizon(Horizon::TruncatedAt(n)))
}

/// A polynomial in `t` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TimePolynomial(Vec<Rational>);

impl TimePolynomial {
    /// `coeffs[k]` multiplies `t^k`.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TimePolynomial(coeffs)
    }

    pub fn zero() -> Self {
        TimePolynomial(Vec::new())
    }

    pub fn one() -> Self {
        TimePolynomial(vec![Rational::one()])
    }

    pub fn t() -> Self {
        TimePolynomial(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        TimePolynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        TimePolynomial(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, a: &Rational) -> Self {
        TimePolynomial::new(self.0.iter().map(|c| c * a).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TimePolynomial::new(out)
    }

    /// `∫_0^t self(τ) dτ`.
    pub fn integrate(&self) -> Self {
        let mut out = vec![Rational::zero()];
        out.extend(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer(BigInt::from(k + 1))),
        );
        TimePolynomial::new(out)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for TimePolynomial {
    /// Descending powers with the denominator written last, e.g. `3 t^2/2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let (num, den) = (c.numer().abs(), c.denom().clone());
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{num}")?;
            } else if num.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{num} {power}")?;
            }
            if !den.is_one() {
                write!(f, "/{den}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn input_for(l: Letter, u: &TimePolynomial) -> Result<&TimePolynomial> {
    static ONE: std::sync::OnceLock<TimePolynomial> = std::sync::OnceLock::new();
    match l.index() {
        0 => Ok(ONE.get_or_init(TimePolynomial::one)),
        1 => Ok(u),
        _ => Err(Error::domain(format!("{l} has no input in a single-input system"))),
    }
}

/// `E_η[u](t)` with `u_0 = 1` and `u_1 = u`.
pub fn iterated_integral(eta: &Word, u: &TimePolynomial) -> Result<TimePolynomial> {
    let mut e = TimePolynomial::one();
    for &l in eta.iter().rev() {
        e = input_for(l, u)?.mul(&e).integrate();
    }
    Ok(e)
}

/// `Σ_{|η| ≤ n} (c, η) E_η[u](t)`.
pub fn evaluate_fliess(c: &Series, u: &TimePolynomial, n: usize) -> Result<TimePolynomial> {
    if let Horizon::TruncatedAt(h) = c.horizon() {
        if h < n {
            return Err(Error::InsufficientHorizon { needed: n, horizon: h });
        }
    }
    let mut memo: HashMap<Vec<Letter>, TimePolynomial> = HashMap::new();
    let mut acc = TimePolynomial::zero();
    for (w, coeff) in c.iter().filter(|(w, _)| w.len() <= n) {
        acc = acc.add(&suffix_integral(w, u, &mut memo)?.scale(coeff));
    }
    Ok(acc)
}

fn suffix_integral(
    w: &[Letter],
    u: &TimePolynomial,
    memo: &mut HashMap<Vec<Letter>, TimePolynomial>,
) -> Result<TimePolynomial> {
    if w.is_empty() {
        return Ok(TimePolynomial::one());
    }
    if let Some(e) = memo.get(w) {
        return Ok(e.clone());
    }
    let inner = suffix_integral(&w[1..], u, memo)?;
    let e = input_for(w[0], u)?.mul(&inner).integrate();
    memo.insert(w.to_vec(), e.clone());
    Ok(e)
}

fn factorial(k: usize) -> Rational {
    Rational::from_integer((1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}

/// `u(t) = Σ_{k ≤ degree} (c_u, x0^k) t^k / k!`.
pub fn jet_to_polynomial(cu: &Jet, degree: usize) -> Result<TimePolynomial> {
    if let Horizon::TruncatedAt(h) = cu.horizon() {
        if h < degree {
            return Err(Error::Truncation { length: degree, horizon: h });
        }
    }
    Ok(TimePolynomial::new(
        (0..=degree).map(|k| cu.coeff(k) / factorial(k)).collect(),
    ))
}

/// The exact jet of a polynomial input.
pub fn polynomial_to_jet(u: &TimePolynomial) -> Jet {
    Jet::from_coeffs(u.coeffs().iter().enumerate().map(|(k, c)| c * factorial(k)))
}
