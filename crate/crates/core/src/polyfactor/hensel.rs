//! Multifactor Hensel lifting of a modular factorization to `p^k`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modular::{FPoly, Field};
use super::zpoly::ZPoly;

fn reduce(f: &ZPoly, m: &BigInt) -> ZPoly {
    ZPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn lift_fp(f: &[u64]) -> ZPoly {
    ZPoly::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// Product of polynomials with nonnegative coefficients through a single
/// big-integer multiplication: coefficients are laid out in fixed-width
/// slots wide enough that no convolution sum overflows into its neighbour.
fn packed_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (ca, cb) = (a.coeffs(), b.coeffs());
    if ca.is_empty() || cb.is_empty() {
        return ZPoly::zero();
    }
    debug_assert!(ca.iter().chain(cb).all(|c| c.sign() != Sign::Minus));
    let bits = |cs: &[BigInt]| cs.iter().map(|c| c.bits()).max().unwrap_or(0);
    let terms = ca.len().min(cb.len()) as u64;
    let slot_bits = bits(ca) + bits(cb) + (64 - terms.leading_zeros() as u64) + 1;
    let slot = slot_bits.div_ceil(32) as usize;
    let pack = |cs: &[BigInt]| {
        let mut limbs = vec![0u32; cs.len() * slot];
        for (i, c) in cs.iter().enumerate() {
            let digits = c.magnitude().to_u32_digits();
            limbs[i * slot..i * slot + digits.len()].copy_from_slice(&digits);
        }
        BigUint::new(limbs)
    };
    let limbs = (pack(ca) * pack(cb)).to_u32_digits();
    let out = (0..ca.len() + cb.len() - 1)
        .map(|i| {
            let lo = (i * slot).min(limbs.len());
            let hi = ((i + 1) * slot).min(limbs.len());
            BigInt::from_biguint(Sign::Plus, BigUint::from_slice(&limbs[lo..hi]))
        })
        .collect();
    ZPoly::new(out)
}

fn mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    reduce(&packed_mul(a, b), m)
}

fn add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    reduce(&a.add(b), m)
}

fn sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    reduce(&a.sub(b), m)
}

/// Division by a monic `d` modulo `m`.
fn divrem_monic(a: &ZPoly, d: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(d.lc().is_one());
    let a = reduce(a, m);
    if a.coeffs().len() < d.coeffs().len() {
        return (ZPoly::zero(), a);
    }
    let dn = d.degree();
    let mut r = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); r.len() - dn];
    // Entries are reduced only when they become the leading coefficient.
    for k in (0..q.len()).rev() {
        let t = r[k + dn].mod_floor(m);
        if t.is_zero() {
            continue;
        }
        for (j, dc) in d.coeffs()[..dn].iter().enumerate() {
            r[k + j] -= &t * dc;
        }
        q[k] = t;
    }
    r.truncate(dn);
    (ZPoly::new(q), reduce(&ZPoly::new(r), m))
}

/// One quadratic step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` to the same
/// relations modulo `m²`. `f`, `g`, `h` are monic.
fn step(f: &ZPoly, g: &ZPoly, h: &ZPoly, s: &ZPoly, t: &ZPoly, m: &BigInt) -> [ZPoly; 4] {
    let m2 = m * m;
    let e = sub_mod(f, &packed_mul(g, h), &m2);
    let (q, r) = divrem_monic(&mul_mod(s, &e, &m2), h, &m2);
    let g2 = reduce(&g.add(&packed_mul(t, &e)).add(&packed_mul(&q, g)), &m2);
    let h2 = add_mod(h, &r, &m2);
    let b = sub_mod(&packed_mul(s, &g2).add(&packed_mul(t, &h2)), &ZPoly::one(), &m2);
    let (c, d) = divrem_monic(&mul_mod(s, &b, &m2), &h2, &m2);
    let s2 = sub_mod(s, &d, &m2);
    let t2 = reduce(&t.sub(&mul_mod(t, &b, &m2)).sub(&packed_mul(&c, &g2)), &m2);
    [g2, h2, s2, t2]
}

/// Lifts the monic factorization `factors` of `f mod p` (with `f` monic
/// modulo `modulus`, a power `p^(2^k)`) to monic factors modulo `modulus`.
pub(crate) fn lift(f: &ZPoly, factors: &[FPoly], field: Field, modulus: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![reduce(f, modulus)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[FPoly]| fs.iter().fold(vec![1u64], |acc, g| field.poly_mul(&acc, g));
    let g0 = prod(&factors[..mid]);
    let h0 = prod(&factors[mid..]);
    let (one, s0, t0) = field.ext_gcd(&g0, &h0);
    assert_eq!(one, vec![1], "modular factors must be coprime");
    let mut m = BigInt::from(field.p);
    let (mut g, mut h, mut s, mut t) = (lift_fp(&g0), lift_fp(&h0), lift_fp(&s0), lift_fp(&t0));
    while &m < modulus {
        let fm = reduce(f, &(&m * &m));
        [g, h, s, t] = step(&fm, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = lift(&g, &factors[..mid], field, modulus);
    out.extend(lift(&h, &factors[mid..], field, modulus));
    out
}

/// `f · lc(f)^{-1} mod m`, the monic associate used for lifting.
pub(crate) fn monic_mod(f: &ZPoly, m: &BigInt) -> ZPoly {
    let lc = f.lc();
    let ext = lc.extended_gcd(m);
    assert!(ext.gcd.is_one(), "leading coefficient must be a unit");
    let inv = ext.x.mod_floor(m);
    reduce(&f.scale(&inv), m)
}
