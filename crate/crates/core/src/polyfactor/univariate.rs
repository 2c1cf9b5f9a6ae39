//! Factorization of univariate integer polynomials: squarefree reduction,
//! Berlekamp modulo a small prime, Hensel lifting and subset recombination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hensel::{lift, monic_mod};
use super::modular::{FPoly, Field};
use super::zpoly::ZPoly;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197,
    199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311,
    313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431,
    433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557,
    563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659, 661,
    673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809,
    811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937,
    941, 947, 953, 967, 971, 977, 983, 991, 997,
];

/// How many usable primes to try before settling on the one giving the
/// fewest modular factors.
const PRIME_TRIALS: usize = 4;

/// Irreducible factors of `f` over the integers with multiplicities. `f` is
/// primitive with positive leading coefficient; factors are returned the
/// same way, sorted.
pub(crate) fn factor(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    assert!(!f.is_zero());
    let mut out = Vec::new();
    let k = f.trailing_zeros();
    if k > 0 {
        out.push((ZPoly::from_i64(&[0, 1]), k));
    }
    let mut rest = f.drop_low(k).primitive();
    if rest.degree() == 0 {
        return out;
    }
    // Squarefree modulo a prime not dividing lc implies squarefree over the
    // integers, which spares the costly integer gcd in the common case.
    let squarefree = if squarefree_mod_some_prime(&rest) {
        rest.clone()
    } else {
        let g = ZPoly::gcd(&rest, &rest.derivative());
        rest.div_exact(&g).expect("gcd divides").primitive()
    };
    for irr in factor_squarefree(&squarefree) {
        let mut m = 0;
        while let Some(q) = rest.div_exact(&irr) {
            rest = q;
            m += 1;
        }
        assert!(m > 0, "factor of the squarefree part must divide");
        out.push((irr, m));
    }
    assert!(rest.degree() == 0, "multiplicity extraction left a nonconstant cofactor");
    out.sort();
    out
}

/// Irreducible factors of a primitive squarefree `f` with positive leading
/// coefficient and nonzero constant term.
pub(crate) fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    let Some((field, modular)) = choose_prime(f) else {
        unreachable!("a squarefree integer polynomial stays squarefree modulo all but finitely many primes")
    };
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Any factor g of f satisfies ‖g‖₁ ≤ 2^n ‖f‖₂, and candidates carry an
    // extra lc(f); the symmetric range must hold twice that.
    let bound: BigInt = BigInt::from(2) * f.lc() * (BigInt::one() << n) * f.l2_bound();
    let p = BigInt::from(field.p);
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }
    let lifted = lift(&monic_mod(f, &modulus), &modular, field, &modulus);
    recombine(f, lifted, &modulus)
}

/// Primes not dividing `lc(f)` modulo which `f` stays squarefree, with the
/// monic reduction.
fn good_primes(f: &ZPoly) -> impl Iterator<Item = (Field, FPoly)> + '_ {
    let lc = f.lc();
    PRIMES.iter().filter_map(move |&p| {
        if (&lc % BigInt::from(p)).is_zero() {
            return None;
        }
        let field = Field::new(p);
        let fp = field.monic(&field.reduce(f));
        field.is_squarefree(&fp).then_some((field, fp))
    })
}

fn squarefree_mod_some_prime(f: &ZPoly) -> bool {
    // Checking a few primes keeps the cost linear in the common case.
    PRIMES
        .iter()
        .take(PRIME_TRIALS * 2)
        .any(|&p| {
            let field = Field::new(p);
            !(f.lc() % BigInt::from(p)).is_zero() && field.is_squarefree(&field.monic(&field.reduce(f)))
        })
}

fn choose_prime(f: &ZPoly) -> Option<(Field, Vec<FPoly>)> {
    let mut best: Option<(Field, FPoly, usize)> = None;
    for (field, fp) in good_primes(f).take(PRIME_TRIALS) {
        let r = field.count_factors(&fp);
        if best.as_ref().is_none_or(|b| r < b.2) {
            best = Some((field, fp, r));
        }
        if r == 1 {
            break;
        }
    }
    best.map(|(field, fp, _)| {
        let factors = field.berlekamp(&fp);
        (field, factors)
    })
}

/// Zassenhaus recombination of lifted monic factors, smallest subsets first.
fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in Combinations::new(lifted.len(), size) {
            let lc = f.lc();
            let prod = subset
                .iter()
                .fold(ZPoly::new(vec![lc]), |acc, &i| acc.mul(&lifted[i]).symmetric_mod(modulus));
            let candidate = prod.symmetric_mod(modulus).primitive();
            if let Some(q) = f.div_exact(&candidate) {
                found = Some((subset, candidate, q));
                break;
            }
        }
        match found {
            Some((subset, candidate, q)) => {
                out.push(candidate);
                f = q.primitive();
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.degree() > 0 {
        out.push(f.primitive());
    }
    out
}

/// Index subsets of a fixed size in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
