//! Fixtures shared by the benchmarks.

use fliess_core::{parse_series, Letter, Series, Word};

/// The two irreducible factors of the flagship example.
pub fn flagship_factors() -> (Series, Series) {
    (
        parse_series("x0 + x1 + x0 x1 x0").unwrap(),
        parse_series("x0 - x1 + x1 x0 x1").unwrap(),
    )
}

pub fn flagship() -> Series {
    let (c1, c2) = flagship_factors();
    c1.shuffle(&c2)
}

/// A deterministic binary word of length `n` with many repeated factors.
pub fn long_word(n: usize) -> Word {
    Word::new((0..n).map(|i| Letter(((i * i + i / 3) % 3 == 0) as u8)).collect())
}
