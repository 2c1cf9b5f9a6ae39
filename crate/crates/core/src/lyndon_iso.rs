//! The isomorphism `𝓛` from the shuffle algebra of polynomials onto the free
//! commutative polynomial algebra on Lyndon words, and its inverse.
//!
//! A word `η` with Chen–Fox–Lyndon factorization `l_{i1} … l_{in}` satisfies
//! `l_{i1} ⧢ … ⧢ l_{in} = a η + R` with `a ≠ 0` and every word of `R`
//! lexicographically smaller than `η`, hence
//! `𝓛(η) = (l_{i1} ⋯ l_{in} − 𝓛(R)) / a`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::commutative::{CommutativePolynomial, Family, Monomial};
use crate::error::{Error, Result};
use crate::series::{Rational, Series};
use crate::words::{cfl_factorize, Alphabet, LyndonIndex, LyndonTable, Word};

/// Grading of a Lyndon monomial: `Σ exponent · |lyndon_word(index)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWeight(pub usize);

/// Memoized `𝓛` and `𝓛⁻¹` over one alphabet.
#[derive(Debug, Clone)]
pub struct LyndonMap {
    table: LyndonTable,
    memo: HashMap<Word, CommutativePolynomial>,
}

impl LyndonMap {
    pub fn new(alphabet: Alphabet) -> Self {
        LyndonMap {
            table: LyndonTable::new(alphabet),
            memo: HashMap::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.table.alphabet()
    }

    pub fn table(&mut self) -> &mut LyndonTable {
        &mut self.table
    }

    /// `𝓛(c)` for a polynomial `c`.
    pub fn to_lyndon(&mut self, c: &Series) -> Result<CommutativePolynomial> {
        if !c.is_exact() {
            return Err(Error::domain("the Lyndon map needs a polynomial, not a truncated series"));
        }
        let mut acc = CommutativePolynomial::zero();
        for (w, coeff) in c.iter() {
            acc = acc.add(&self.word_image(w)?.scalar_mul(coeff));
        }
        Ok(acc)
    }

    /// `𝓛(η)` for a single word.
    pub fn word_image(&mut self, w: &Word) -> Result<CommutativePolynomial> {
        if let Some(p) = self.memo.get(w) {
            return Ok(p.clone());
        }
        if !self.table.alphabet().contains(w) {
            return Err(Error::domain(format!(
                "{w} uses letters outside an alphabet of size {}",
                self.table.alphabet().size()
            )));
        }
        let image = if w.is_empty() {
            CommutativePolynomial::one()
        } else {
            let factors = cfl_factorize(w)?;
            let mut product = CommutativePolynomial::one();
            let mut shuffled = Series::one();
            for l in &factors {
                let i = self.table.index_of(l)?;
                product = product.mul(&CommutativePolynomial::var(i.0 as u32));
                shuffled = shuffled.shuffle(&Series::word(l.clone()));
            }
            if factors.len() == 1 {
                product
            } else {
                let a = shuffled.get(w);
                assert!(!a.is_zero(), "{w} missing from the shuffle of its Lyndon factors");
                let remainder = shuffled.sub(&Series::monomial(a.clone(), w.clone()));
                let mut rest = CommutativePolynomial::zero();
                for (v, coeff) in remainder.iter() {
                    assert!(v < w, "remainder word {v} is not smaller than {w}");
                    rest = rest.add(&self.word_image(v)?.scalar_mul(coeff));
                }
                product.sub(&rest).scalar_mul(&(Rational::one() / a))
            }
        };
        self.memo.insert(w.clone(), image.clone());
        Ok(image)
    }

    /// `𝓛⁻¹(p)`: each monomial becomes the shuffle product of its Lyndon words.
    pub fn from_lyndon(&mut self, p: &CommutativePolynomial) -> Result<Series> {
        if p.family() != Family::Lyndon && !p.is_constant() {
            return Err(Error::domain("expected a polynomial in Lyndon variables"));
        }
        let mut acc = Series::zero();
        for (m, coeff) in p.iter() {
            acc = acc.add(&self.monomial_image(m).scalar_mul(coeff));
        }
        Ok(acc)
    }

    fn monomial_image(&mut self, m: &Monomial) -> Series {
        let mut s = Series::one();
        for &(v, e) in m.pairs() {
            let l = Series::word(self.table.word_at(LyndonIndex(v as usize)));
            for _ in 0..e {
                s = s.shuffle(&l);
            }
        }
        s
    }

    pub fn weight(&mut self, m: &Monomial) -> LyndonWeight {
        LyndonWeight(
            m.pairs()
                .iter()
                .map(|&(v, e)| e as usize * self.table.word_at(LyndonIndex(v as usize)).len())
                .sum(),
        )
    }
}

/// The alphabet used for a series: binary unless larger letters occur.
pub fn alphabet_for(c: &Series) -> Alphabet {
    let size = c.max_letter().map_or(2, |l| (l.index() + 1).max(2));
    Alphabet::new(size).expect("letter indices fit an alphabet")
}

/// `𝓛(c)` using the binary Lyndon indexing (or a larger alphabet if `c`
/// needs one).
pub fn to_lyndon(c: &Series) -> Result<CommutativePolynomial> {
    LyndonMap::new(alphabet_for(c)).to_lyndon(c)
}

/// `𝓛⁻¹(p)` over the binary alphabet.
pub fn from_lyndon(p: &CommutativePolynomial) -> Result<Series> {
    LyndonMap::new(Alphabet::BINARY).from_lyndon(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, ratio};
    use crate::words::parse_word;

    fn l(v: u32) -> CommutativePolynomial {
        CommutativePolynomial::var(v)
    }

    fn word(s: &str) -> Series {
        Series::word(parse_word(s).unwrap())
    }

    #[test]
    fn golden_images() {
        assert_eq!(to_lyndon(&word("x0x1x0")).unwrap(), l(0).mul(&l(2)).sub(&l(3).scalar_mul(&rat(2))));
        assert_eq!(
            to_lyndon(&word("x0x0x1x0")).unwrap(),
            l(0).mul(&l(3)).sub(&l(5).scalar_mul(&rat(3)))
        );
        let expected = l(0)
            .pow(2)
            .mul(&l(2))
            .scalar_mul(&ratio(1, 2))
            .sub(&l(0).mul(&l(3)).scalar_mul(&rat(2)))
            .add(&l(5).scalar_mul(&rat(3)));
        assert_eq!(to_lyndon(&word("x0x1x0x0")).unwrap(), expected);
        assert_eq!(to_lyndon(&word("x0")).unwrap(), l(0));
        assert_eq!(to_lyndon(&Series::one()).unwrap(), CommutativePolynomial::one());
    }

    #[test]
    fn inverse_examples() {
        let s = from_lyndon(&l(0).mul(&l(2))).unwrap();
        assert_eq!(s, word("x0x1x0").add(&word("x0x0x1").scalar_mul(&rat(2))));
        assert_eq!(from_lyndon(&l(0).pow(2)).unwrap(), word("x0x0").scalar_mul(&rat(2)));
        assert_eq!(from_lyndon(&l(0).add(&l(1))).unwrap(), word("x0").add(&word("x1")));
    }

    #[test]
    fn cross_check_with_shuffle() {
        let eta1 = word("x0x1x0");
        let lhs = to_lyndon(&eta1.shuffle(&word("x0"))).unwrap();
        assert_eq!(lhs, to_lyndon(&eta1).unwrap().mul(&l(0)));
    }

    #[test]
    fn truncated_input_is_rejected() {
        assert!(to_lyndon(&word("x0").truncate(3)).is_err());
    }

    #[test]
    fn weights() {
        let mut map = LyndonMap::new(Alphabet::BINARY);
        let image = map.word_image(&parse_word("x0x1x0x0").unwrap()).unwrap();
        for (m, _) in image.iter() {
            assert_eq!(map.weight(m), LyndonWeight(4));
        }
    }
}
