//! Letters, words, lexicographic order and Lyndon words.
//!
//! Words are finite sequences over an alphabet `{x0, ..., xm}` ordered by
//! `x0 < x1 < ... < xm`. The derived `Ord` on [`Word`] is the plain
//! lexicographic order in which a proper prefix precedes its extensions.
//!
//! Lyndon words are indexed by length first and then lexicographically, so
//! over two letters the sequence begins `x0, x1, x0x1, x0^2x1, x0x1^2, ...`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// The letter `x_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub const X0: Letter = Letter(0);
    pub const X1: Letter = Letter(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A finite, possibly empty, sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Builds a word from raw letter indices, e.g. `[0, 1, 0]` for `x0x1x0`.
    pub fn from_indices<I: IntoIterator<Item = u8>>(indices: I) -> Self {
        Word(indices.into_iter().map(Letter).collect())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// `x_k^n`.
    pub fn power(l: Letter, n: usize) -> Self {
        Word(vec![l; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Strips `prefix` if present.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|s| Word(s.to_vec()))
    }

    /// True if every letter is `x0` (the empty word included).
    pub fn is_natural(&self) -> bool {
        self.0.iter().all(|&l| l == Letter::X0)
    }

    /// Number of leading `x0` letters.
    pub fn x0_prefix_len(&self) -> usize {
        self.0.iter().take_while(|&&l| l == Letter::X0).count()
    }

    /// Largest letter index used, if any.
    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    /// Length-first, then lexicographic.
    pub fn graded_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }

    /// Renders with `^k` for runs of a repeated letter and spaces between
    /// factors, e.g. `x0^2 x1 x0`. The empty word renders as `1`.
    pub fn to_power_string(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            if j - i == 1 {
                parts.push(l.to_string());
            } else {
                parts.push(format!("{}^{}", l, j - i));
            }
            i = j;
        }
        parts.join(" ")
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses the juxtaposed form `x0x1x0` (whitespace allowed, `1` is the empty word).
pub fn parse_word(text: &str) -> Result<Word> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "1" || t.is_empty() {
        return Ok(Word::empty());
    }
    let bytes = t.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'x' {
            return Err(Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("expected letter 'x<digits>', found '{}'", bytes[i] as char),
            });
        }
        let start = i + 1;
        let mut j = start;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        if j == start {
            return Err(Error::Parse {
                line: 1,
                column: start + 1,
                message: "letter index missing after 'x'".into(),
            });
        }
        let idx: u8 = t[start..j].parse().map_err(|_| Error::Parse {
            line: 1,
            column: start + 1,
            message: "letter index out of range".into(),
        })?;
        letters.push(Letter(idx));
        i = j;
    }
    Ok(Word(letters))
}

/// Lexicographic comparison with `x0 < x1 < ...`.
pub fn lex_compare(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}

/// A word is Lyndon if it is nonempty and strictly smaller than each of its
/// proper rotations.
pub fn is_lyndon(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    // A nonempty word is Lyndon iff its Chen-Fox-Lyndon factorization has a
    // single factor; Duval's scan decides that in linear time.
    let (mut k, mut j) = (0, 1);
    while j < n && w[k] <= w[j] {
        if w[k] < w[j] {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    j == n && k == 0
}

/// Chen-Fox-Lyndon factorization by Duval's algorithm.
///
/// Returns the unique non-increasing sequence of Lyndon words whose
/// concatenation is `w`.
pub fn cfl_factorize(w: &[Letter]) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::domain("Chen-Fox-Lyndon factorization of the empty word"));
    }
    Ok(cfl_ranges(w)
        .into_iter()
        .map(|(s, e)| Word(w[s..e].to_vec()))
        .collect())
}

/// Duval's algorithm returning the factor boundaries as half-open ranges.
pub fn cfl_ranges(w: &[Letter]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push((i, i + period));
            i += period;
        }
    }
    out
}

/// An alphabet `{x0, ..., x_{size-1}}`, used to index Lyndon words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { size: 2 };

    pub fn new(size: usize) -> Result<Self> {
        if !(1..=255).contains(&size) {
            return Err(Error::domain(format!("unsupported alphabet size {size}")));
        }
        Ok(Alphabet { size: size as u8 })
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        w.iter().all(|l| l.0 < self.size)
    }

    /// All Lyndon words of length at most `max_len`, length first and then
    /// lexicographic.
    pub fn lyndon_enumerate(&self, max_len: usize) -> Vec<Word> {
        let mut words = generate_lyndon_lex(self.size, max_len);
        words.sort_by(|a, b| a.graded_cmp(b));
        words
    }
}

/// Fredricksen-Kessler-Maiorana generation: every Lyndon word of length
/// `<= n` over `k` letters, in lexicographic order.
fn generate_lyndon_lex(k: u8, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    while !w.is_empty() {
        out.push(Word::from_indices(w.iter().copied()));
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

/// Lyndon words over two letters of length at most `max_len`, canonically ordered.
pub fn lyndon_enumerate(max_len: usize) -> Vec<Word> {
    Alphabet::BINARY.lyndon_enumerate(max_len)
}

/// Position of a Lyndon word in the canonical binary enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonIndex(pub usize);

/// Bidirectional lookup between Lyndon words and their canonical indices,
/// grown on demand one length at a time.
#[derive(Debug, Clone)]
pub struct LyndonTable {
    alphabet: Alphabet,
    max_len: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl LyndonTable {
    pub fn new(alphabet: Alphabet) -> Self {
        LyndonTable {
            alphabet,
            max_len: 0,
            words: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn ensure_len(&mut self, len: usize) {
        if len <= self.max_len {
            return;
        }
        self.words = self.alphabet.lyndon_enumerate(len);
        self.index = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        self.max_len = len;
    }

    pub fn index_of(&mut self, w: &Word) -> Result<LyndonIndex> {
        if !self.alphabet.contains(w) || !is_lyndon(w) {
            return Err(Error::domain(format!("{w} is not a Lyndon word")));
        }
        self.ensure_len(w.len());
        Ok(LyndonIndex(self.index[w]))
    }

    pub fn word_at(&mut self, i: LyndonIndex) -> Word {
        let mut len = self.max_len.max(1);
        self.ensure_len(len);
        while self.words.len() <= i.0 {
            len += 1;
            self.ensure_len(len);
        }
        self.words[i.0].clone()
    }
}

/// Canonical binary index of a Lyndon word.
pub fn lyndon_index(w: &Word) -> Result<LyndonIndex> {
    LyndonTable::new(Alphabet::BINARY).index_of(w)
}

/// The binary Lyndon word at canonical index `i`.
pub fn lyndon_word(i: LyndonIndex) -> Word {
    LyndonTable::new(Alphabet::BINARY).word_at(i)
}
