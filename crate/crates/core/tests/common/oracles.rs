//! Brute-force reference computations, written independently of the
//! library algorithms they check.

use std::collections::BTreeMap;

use fliess_core::series::rat;
use fliess_core::{CommutativePolynomial, Letter, Rational, Series, Word};
use num_traits::{One, Zero};

use super::factorial;

/// Shuffle of two words by enumerating which positions come from `u`.
pub fn brute_shuffle(u: &Word, v: &Word) -> BTreeMap<Word, u64> {
    let (a, b) = (u.letters(), v.letters());
    let n = a.len() + b.len();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != a.len() {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let mut w = Vec::with_capacity(n);
        for pos in 0..n {
            if mask >> pos & 1 == 1 {
                w.push(a[i]);
                i += 1;
            } else {
                w.push(b[j]);
                j += 1;
            }
        }
        *out.entry(Word::new(w)).or_insert(0) += 1;
    }
    out
}

pub fn brute_shuffle_series(c: &Series, d: &Series) -> Series {
    let mut terms = Vec::new();
    for (u, a) in c.iter() {
        for (v, b) in d.iter() {
            for (w, k) in brute_shuffle(u, v) {
                terms.push((w, a * b * rat(k as i64)));
            }
        }
    }
    Series::from_terms(terms)
}

/// Strictly smaller than every proper rotation.
pub fn brute_is_lyndon(w: &[Letter]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| {
        let rotated: Vec<Letter> = w[i..].iter().chain(&w[..i]).copied().collect();
        w < rotated.as_slice()
    })
}

/// Every factorization into a non-increasing sequence of Lyndon words.
pub fn brute_cfl_all(w: &[Letter]) -> Vec<Vec<Vec<Letter>>> {
    fn go(rest: &[Letter], prev: Option<&[Letter]>, acc: &mut Vec<Vec<Letter>>, out: &mut Vec<Vec<Vec<Letter>>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for k in 1..=rest.len() {
            let head = &rest[..k];
            if brute_is_lyndon(head) && prev.is_none_or(|p| p >= head) {
                acc.push(head.to_vec());
                go(&rest[k..], Some(head), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(w, None, &mut Vec::new(), &mut out);
    out
}

/// Lyndon words of length exactly `n` over `letters` letters.
pub fn brute_lyndon_count(letters: u8, n: usize) -> usize {
    let total = (letters as usize).pow(n as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let w: Vec<Letter> = (0..n)
                .map(|_| {
                    let l = Letter((c % letters as usize) as u8);
                    c /= letters as usize;
                    l
                })
                .collect();
            brute_is_lyndon(&w)
        })
        .count()
}

/// Polynomials in `t`, coefficient `k` multiplying `t^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TPoly(pub Vec<Rational>);

impl TPoly {
    pub fn constant(c: Rational) -> Self {
        TPoly(vec![c])
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &TPoly) -> TPoly {
        let n = self.0.len().max(o.0.len());
        TPoly((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn scale(&self, a: &Rational) -> TPoly {
        TPoly(self.0.iter().map(|c| c * a).collect())
    }

    pub fn mul_to(&self, o: &TPoly, deg: usize) -> TPoly {
        let mut out = vec![Rational::zero(); deg + 1];
        for (i, a) in self.0.iter().enumerate().take(deg + 1) {
            for (j, b) in o.0.iter().enumerate().take(deg + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TPoly(out)
    }

    pub fn integrate_to(&self, deg: usize) -> TPoly {
        let mut out = vec![Rational::zero()];
        for (k, c) in self.0.iter().enumerate().take(deg) {
            out.push(c / rat(k as i64 + 1));
        }
        TPoly(out)
    }

    /// `u(t) = Σ a_k t^k / k!` from its derivatives at zero.
    pub fn from_derivatives(a: &[Rational]) -> TPoly {
        TPoly(a.iter().enumerate().map(|(k, c)| c / factorial(k)).collect())
    }
}

/// `E_η[u]` through degree `deg`, leftmost letter outermost, `u_0 = 1`.
pub fn iterated_integral(eta: &Word, u: &TPoly, deg: usize) -> TPoly {
    let mut e = TPoly::constant(Rational::one());
    for l in eta.letters().iter().rev() {
        let integrand = if l.0 == 0 { e } else { u.mul_to(&e, deg) };
        e = integrand.integrate_to(deg);
    }
    e
}

/// `F_c[u]` through degree `deg`, from words of length `<= deg`.
pub fn fliess_output(c: &Series, u: &TPoly, deg: usize) -> TPoly {
    let mut y = TPoly(vec![Rational::zero(); deg + 1]);
    for (w, a) in c.iter() {
        if w.len() <= deg {
            y = y.add(&iterated_integral(w, u, deg).scale(a));
        }
    }
    y
}

/// `Σ y^{(k)}(0) x0^k` for `k <= deg`.
pub fn taylor_jet(y: &TPoly, deg: usize) -> Series {
    Series::from_terms((0..=deg).map(|k| (Word::power(Letter::X0, k), y.coeff(k) * factorial(k))))
}

/// Nulling jet by undetermined coefficients: `a_k` is the root of the
/// affine condition on the `t^{r+k}` coefficient of the output.
pub fn nulling_ansatz(c: &Series, r: usize, n: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::new();
    for k in 0..=n {
        let deg = r + k;
        let at = |v: Rational| {
            let mut trial = a.clone();
            trial.push(v);
            fliess_output(c, &TPoly::from_derivatives(&trial), deg).coeff(deg)
        };
        let (b0, b1) = (at(Rational::zero()), at(Rational::one()));
        assert!(b1 != b0, "coefficient {k} is not determined by the ansatz");
        a.push(-&b0 / (b1 - &b0));
    }
    a
}

fn eval_poly(p: &CommutativePolynomial, z: &[TPoly], deg: usize) -> TPoly {
    let mut out = TPoly(vec![Rational::zero()]);
    for (m, coeff) in p.iter() {
        let mut term = TPoly::constant(coeff.clone());
        for &(var, e) in m.pairs() {
            for _ in 0..e {
                term = term.mul_to(&z[var as usize - 1], deg);
            }
        }
        out = out.add(&term);
    }
    out
}

/// Taylor polynomial of `y = h(z)` for `ż = g0(z) + g1(z) u`, `z(0) = z0`,
/// by Picard iteration on truncated power series.
pub fn ode_output(
    z0: &[Rational],
    g0: &[CommutativePolynomial],
    g1: &[CommutativePolynomial],
    h: &CommutativePolynomial,
    u: &TPoly,
    deg: usize,
) -> TPoly {
    let mut z: Vec<TPoly> = z0.iter().map(|c| TPoly::constant(c.clone())).collect();
    for _ in 0..=deg {
        z = (0..z0.len())
            .map(|i| {
                let rhs = eval_poly(&g0[i], &z, deg).add(&eval_poly(&g1[i], &z, deg).mul_to(u, deg));
                TPoly::constant(z0[i].clone()).add(&rhs.integrate_to(deg))
            })
            .collect();
    }
    let y = eval_poly(h, &z, deg);
    TPoly((0..=deg).map(|k| y.coeff(k)).collect())
}

/// `a = λ b` for some nonzero rational `λ`.
pub fn proportional(a: &Series, b: &Series) -> bool {
    let Some((w, bc)) = b.iter().next() else {
        return a.is_zero();
    };
    let ac = a.get(w);
    !ac.is_zero() && *a == b.scalar_mul(&(ac / bc))
}
