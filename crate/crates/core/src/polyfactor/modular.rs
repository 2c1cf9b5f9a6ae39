//! Polynomials over a small prime field and Berlekamp's factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::zpoly::ZPoly;

/// A polynomial over `F_p`, constant term first, no trailing zeros.
pub(crate) type FPoly = Vec<u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        // Small enough that sums of many products fit a u64 before reduction.
        assert!((2..1 << 16).contains(&p));
        Field { p }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn reduce(self, f: &ZPoly) -> FPoly {
        let p = BigInt::from(self.p);
        trim(
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&p).to_u64().expect("residue fits in u64"))
                .collect(),
        )
    }

    pub fn poly_add(self, a: &[u64], b: &[u64]) -> FPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn poly_sub(self, a: &[u64], b: &[u64]) -> FPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn poly_mul(self, a: &[u64], b: &[u64]) -> FPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            // Each row adds less than p² < 2^32, so the sums fit without reduction.
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out.into_iter().map(|c| c % self.p).collect())
    }

    pub fn scale(self, a: &[u64], s: u64) -> FPoly {
        trim(a.iter().map(|&x| self.mul(x, s)).collect())
    }

    pub fn monic(self, a: &[u64]) -> FPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(self, a: &[u64], d: &[u64]) -> (FPoly, FPoly) {
        assert!(!d.is_empty(), "division by zero polynomial");
        if a.len() < d.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(*d.last().unwrap());
        let dn = d.len() - 1;
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - dn];
        // Entries absorb one term below p² < 2^32 per step and are reduced
        // only when they become the leading coefficient.
        for k in (0..q.len()).rev() {
            let t = self.mul(r[k + dn] % self.p, inv);
            if t == 0 {
                continue;
            }
            q[k] = t;
            let neg = self.p - t;
            for (j, &dc) in d[..dn].iter().enumerate() {
                r[k + j] += neg * dc;
            }
        }
        r.truncate(dn);
        (trim(q), trim(r.into_iter().map(|c| c % self.p).collect()))
    }

    pub fn rem(self, a: &[u64], d: &[u64]) -> FPoly {
        self.divrem(a, d).1
    }

    /// Monic gcd.
    pub fn gcd(self, a: &[u64], b: &[u64]) -> FPoly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(self, a: &[u64], b: &[u64]) -> (FPoly, FPoly, FPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("gcd of nonzero polynomials"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(self, a: &[u64]) -> FPoly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `base^e mod m`.
    pub fn powmod(self, base: &[u64], mut e: u64, m: &[u64]) -> FPoly {
        let mut result = vec![1u64];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                result = self.rem(&self.poly_mul(&result, &b), m);
            }
            b = self.rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        result
    }

    pub fn is_squarefree(self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Number of irreducible factors of a monic squarefree `f`.
    pub fn count_factors(self, f: &[u64]) -> usize {
        if f.len() <= 2 {
            return 1;
        }
        self.berlekamp_basis(f).len()
    }

    /// Berlekamp's algorithm: the monic irreducible factors of a monic
    /// squarefree `f`. Splitting uses random elements `a` of the Berlekamp
    /// subalgebra: `gcd(u, a^{(p-1)/2} - 1)` is a proper factor of `u` about
    /// half the time. The generator is seeded, so results are reproducible.
    pub fn berlekamp(self, f: &[u64]) -> Vec<FPoly> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        let basis = self.berlekamp_basis(f);
        let r = basis.len();
        let mut done: Vec<FPoly> = Vec::with_capacity(r);
        let mut pending = vec![f.to_vec()];
        let mut rng = ChaCha8Rng::seed_from_u64(self.p);
        while let Some(u) = pending.pop() {
            // Once the pieces number r, every piece is irreducible.
            if u.len() <= 2 || done.len() + pending.len() + 1 == r {
                done.push(u);
                continue;
            }
            let mut split = None;
            for _ in 0..64 {
                let mut a: FPoly = Vec::new();
                for v in &basis {
                    a = self.poly_add(&a, &self.scale(v, rng.gen_range(0..self.p)));
                }
                let a = self.rem(&a, &u);
                if a.len() <= 1 {
                    continue;
                }
                let probe = if self.p == 2 {
                    a
                } else {
                    self.poly_sub(&self.powmod(&a, (self.p - 1) / 2, &u), &[1])
                };
                let g = self.gcd(&u, &probe);
                if g.len() > 1 && g.len() < u.len() {
                    split = Some(g);
                    break;
                }
            }
            match split.or_else(|| self.split_exhaustive(&u, &basis)) {
                Some(g) => {
                    pending.push(self.divrem(&u, &g).0);
                    pending.push(g);
                }
                None => done.push(u),
            }
        }
        debug_assert_eq!(done.len(), r);
        done
    }

    /// A proper factor of `u` from `gcd(u, v - s)` over all basis elements
    /// `v` and all `s ∈ F_p`, if one exists.
    fn split_exhaustive(self, u: &[u64], basis: &[FPoly]) -> Option<FPoly> {
        for v in basis.iter().filter(|v| v.len() > 1) {
            for s in 0..self.p {
                let g = self.gcd(u, &self.poly_sub(v, &[s]));
                if g.len() > 1 && g.len() < u.len() {
                    return Some(g);
                }
            }
        }
        None
    }

    /// Basis of `{v : v^p ≡ v mod f}` as polynomials of degree `< deg f`.
    fn berlekamp_basis(self, f: &[u64]) -> Vec<FPoly> {
        let n = f.len() - 1;
        let xp = self.powmod(&[0, 1], self.p, f);
        // a[j][i]: coefficient j of x^{ip} mod f, minus the identity.
        let mut a = vec![vec![0u64; n]; n];
        let mut row = vec![1u64];
        for i in 0..n {
            for (j, &c) in row.iter().enumerate() {
                a[j][i] = c;
            }
            a[i][i] = self.sub(a[i][i], 1);
            row = self.rem(&self.poly_mul(&row, &xp), f);
        }
        self.nullspace(a, n)
    }

    fn nullspace(self, mut a: Vec<Vec<u64>>, n: usize) -> Vec<FPoly> {
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(pr) = (rank..n).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(rank, pr);
            let inv = self.inv(a[rank][col]);
            for x in a[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let neg = self.p - row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = (*x + neg * y) % self.p;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u64; n];
                v[fc] = 1;
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = self.sub(0, a[r][fc]);
                }
                trim(v)
            })
            .collect()
    }
}

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_products() {
        let f = Field::new(7);
        // (x + 1)(x + 2)(x^2 + 1) over F_7; x^2 + 1 is irreducible since 7 ≡ 3 mod 4.
        let p = f.poly_mul(&f.poly_mul(&[1, 1], &[2, 1]), &[1, 0, 1]);
        let mut factors = f.berlekamp(&p);
        factors.sort();
        assert_eq!(factors, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
        assert_eq!(f.berlekamp(&[1, 0, 1]).len(), 1);
    }

    #[test]
    fn extended_gcd() {
        let f = Field::new(5);
        let a = vec![1, 1];
        let b = vec![2, 0, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(f.poly_add(&f.poly_mul(&s, &a), &f.poly_mul(&t, &b)), vec![1]);
    }
}
