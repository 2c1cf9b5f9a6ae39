//! Dense univariate polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        let zero = BigInt::zero();
        ZPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) + other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, a: &BigInt) -> ZPoly {
        ZPoly::new(self.0.iter().map(|c| c * a).collect())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend_from_slice(&self.0);
        ZPoly(c)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        ZPoly(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient over the integers, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let dl = d.lc();
        // Cheap filters on the two ends before the full division.
        if !(self.lc() % &dl).is_zero() || (!d.0[0].is_zero() && !(&self.0[0] % &d.0[0]).is_zero()) {
            return None;
        }
        let mut r = self.0.clone();
        let dn = d.0.len() - 1;
        let mut q = vec![BigInt::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let top = &r[k + dn];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&dl);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] -= &qk * dc;
            }
            q[k] = qk;
        }
        r.iter().all(Zero::is_zero).then(|| ZPoly::new(q))
    }

    /// `lc(d)^k · self mod d` with the usual pseudo-division exponent.
    pub fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dl = d.lc();
        let dn = d.degree();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dn {
            let shift = r.degree() - dn;
            let rl = r.lc();
            r = r.scale(&dl).sub(&d.scale(&rl).shift(shift));
        }
        r
    }

    /// Primitive gcd via the primitive remainder sequence.
    pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (a.primitive(), b.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Coefficients reduced into `(-m/2, m/2]`.
    pub fn symmetric_mod(&self, m: &BigInt) -> ZPoly {
        let half: BigInt = m >> 1;
        ZPoly::new(
            self.0
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    /// `⌊‖self‖₂⌋ + 1`.
    pub fn l2_bound(&self) -> BigInt {
        let sq: BigInt = self.0.iter().map(|c| c * c).sum();
        sq.sqrt() + BigInt::one()
    }

    /// Number of factors of `y` dividing `self`.
    pub fn trailing_zeros(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn drop_low(&self, k: usize) -> ZPoly {
        ZPoly::new(self.0[k.min(self.0.len())..].to_vec())
    }
}
