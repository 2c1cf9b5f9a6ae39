//! Text syntax for series, commutative polynomials and polynomials in `t`.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power (('*' power) | ('/' INT) | power)*
//! power  := atom ('^' INT)?
//! atom   := INT | VAR | '(' expr ')' | 'O' '(' INT ')'
//! ```
//!
//! Juxtaposition and `*` both mean the algebra's product, which for series is
//! concatenation. `/` divides by an integer, so `2/3 x0` and `t^2/2` read as
//! written. `O(k)` truncates a series at words of length `k - 1`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::commutative::{CommutativePolynomial, Family};
use crate::error::{Error, Result};
use crate::realization::TimePolynomial;
use crate::series::{Horizon, Rational, Series};
use crate::words::{Letter, Word};

/// What the parser needs from a target algebra.
pub trait Parseable: Sized {
    fn constant(c: Rational) -> Self;
    /// A variable token such as `x3` (`symbol = 'x'`, `index = Some(3)`) or
    /// `t` (`index = None`).
    fn variable(symbol: char, index: Option<u32>) -> std::result::Result<Self, String>;
    fn add(&self, other: &Self) -> std::result::Result<Self, String>;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> std::result::Result<Self, String>;
    fn scale(&self, c: &Rational) -> Self;
    fn big_o(_order: usize) -> std::result::Result<Self, String> {
        Err("O(...) is only meaningful for series".into())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char, Option<u32>),
    BigO,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let digits = |from: usize| {
            let mut j = from;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            j
        };
        let tok = if c.is_ascii_digit() {
            let j = digits(i);
            let s: String = chars[i..j].iter().collect();
            col += j - i;
            i = j;
            Tok::Int(s.parse().expect("digit run"))
        } else if matches!(c, 'x' | 'l' | 'z') {
            let j = digits(i + 1);
            if j == i + 1 {
                return Err(err(l0, c0, format!("expected an index after '{c}'")));
            }
            let s: String = chars[i + 1..j].iter().collect();
            let index = s
                .parse::<u32>()
                .map_err(|_| err(l0, c0, format!("index {s} is too large")))?;
            col += j - i;
            i = j;
            Tok::Var(c, Some(index))
        } else {
            i += 1;
            col += 1;
            match c {
                't' => Tok::Var('t', None),
                'O' => Tok::BigO,
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(l0, c0, format!("unexpected character '{c}'"))),
            }
        };
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.column)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn lift<T>(&self, at: (usize, usize), r: std::result::Result<T, String>) -> Result<T> {
        r.map_err(|m| err(at.0, at.1, m))
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("expected an integer"),
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.here();
        let n = self.int()?;
        n.to_u32().ok_or_else(|| err(at.0, at.1, format!("{n} is too large")))
    }

    fn expr<A: Parseable>(&mut self) -> Result<A> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.pos += 1;
                true
            }
            Tok::Plus => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc: A = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            let at = self.here();
            match self.peek() {
                Tok::Plus => {
                    self.pos += 1;
                    let t: A = self.term()?;
                    acc = self.lift(at, acc.add(&t))?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    let t: A = self.term()?;
                    acc = self.lift(at, acc.add(&t.neg()))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<A: Parseable>(&mut self) -> Result<A> {
        let mut acc: A = self.power()?;
        loop {
            let at = self.here();
            match self.peek() {
                Tok::Star => {
                    self.pos += 1;
                    let p: A = self.power()?;
                    acc = self.lift(at, acc.mul(&p))?;
                }
                Tok::Slash => {
                    self.pos += 1;
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(err(at.0, at.1, "division by zero"));
                    }
                    acc = acc.scale(&Rational::new(1.into(), d));
                }
                Tok::Int(_) | Tok::Var(..) | Tok::LParen | Tok::BigO => {
                    let p: A = self.power()?;
                    acc = self.lift(at, acc.mul(&p))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power<A: Parseable>(&mut self) -> Result<A> {
        let base: A = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let at = self.here();
        self.pos += 1;
        let k = self.small_int()?;
        let mut acc = A::constant(Rational::from_integer(1.into()));
        for _ in 0..k {
            acc = self.lift(at, acc.mul(&base))?;
        }
        Ok(acc)
    }

    fn atom<A: Parseable>(&mut self) -> Result<A> {
        let at = self.here();
        match self.bump() {
            Tok::Int(n) => Ok(A::constant(Rational::from_integer(n))),
            Tok::Var(s, i) => self.lift(at, A::variable(s, i)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::BigO => {
                self.expect(Tok::LParen, "'(' after O")?;
                let k = self.small_int()? as usize;
                self.expect(Tok::RParen, "')'")?;
                self.lift(at, A::big_o(k))
            }
            Tok::End => Err(err(at.0, at.1, "unexpected end of input")),
            t => Err(err(at.0, at.1, format!("unexpected {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        _ => "token",
    }
}

/// Parses `text` into any [`Parseable`] algebra.
pub fn parse<A: Parseable>(text: &str) -> Result<A> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, pos: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("unexpected trailing input");
    }
    Ok(out)
}

impl Parseable for Series {
    fn constant(c: Rational) -> Self {
        Series::constant(c)
    }

    fn variable(symbol: char, index: Option<u32>) -> std::result::Result<Self, String> {
        match (symbol, index) {
            ('x', Some(i)) => u8::try_from(i)
                .map(|k| Series::letter(Letter(k)))
                .map_err(|_| format!("letter index {i} is too large")),
            (s, _) => Err(format!("'{s}' is not a letter of a series; use x0, x1, ...")),
        }
    }

    fn add(&self, other: &Self) -> std::result::Result<Self, String> {
        Ok(Series::add(self, other))
    }

    fn neg(&self) -> Self {
        Series::neg(self)
    }

    fn mul(&self, other: &Self) -> std::result::Result<Self, String> {
        Ok(self.concat(other))
    }

    fn scale(&self, c: &Rational) -> Self {
        self.scalar_mul(c)
    }

    fn big_o(order: usize) -> std::result::Result<Self, String> {
        match order.checked_sub(1) {
            Some(n) => Ok(Series::zero().with_horizon(Horizon::TruncatedAt(n))),
            None => Err("O(0) leaves no known coefficients".into()),
        }
    }
}

impl Parseable for CommutativePolynomial {
    fn constant(c: Rational) -> Self {
        CommutativePolynomial::constant(c)
    }

    fn variable(symbol: char, index: Option<u32>) -> std::result::Result<Self, String> {
        match (symbol, index) {
            ('l', Some(i)) => Ok(CommutativePolynomial::var(i)),
            ('z', Some(i)) => Ok(CommutativePolynomial::var(i).with_family(Family::State)),
            (s, _) => Err(format!("'{s}' is not a polynomial variable; use l0, l1, ... or z1, z2, ...")),
        }
    }

    fn add(&self, other: &Self) -> std::result::Result<Self, String> {
        check_families(self, other)?;
        Ok(CommutativePolynomial::add(self, other))
    }

    fn neg(&self) -> Self {
        CommutativePolynomial::neg(self)
    }

    fn mul(&self, other: &Self) -> std::result::Result<Self, String> {
        check_families(self, other)?;
        Ok(CommutativePolynomial::mul(self, other))
    }

    fn scale(&self, c: &Rational) -> Self {
        self.scalar_mul(c)
    }
}

fn check_families(a: &CommutativePolynomial, b: &CommutativePolynomial) -> std::result::Result<(), String> {
    if !a.is_constant() && !b.is_constant() && a.family() != b.family() {
        return Err("cannot mix l and z variables".into());
    }
    Ok(())
}

impl Parseable for TimePolynomial {
    fn constant(c: Rational) -> Self {
        TimePolynomial::new(vec![c])
    }

    fn variable(symbol: char, index: Option<u32>) -> std::result::Result<Self, String> {
        match (symbol, index) {
            ('t', None) => Ok(TimePolynomial::t()),
            (s, _) => Err(format!("'{s}' is not the time variable t")),
        }
    }

    fn add(&self, other: &Self) -> std::result::Result<Self, String> {
        Ok(TimePolynomial::add(self, other))
    }

    fn neg(&self) -> Self {
        TimePolynomial::neg(self)
    }

    fn mul(&self, other: &Self) -> std::result::Result<Self, String> {
        Ok(TimePolynomial::mul(self, other))
    }

    fn scale(&self, c: &Rational) -> Self {
        TimePolynomial::scale(self, c)
    }
}

pub fn parse_series(text: &str) -> Result<Series> {
    parse(text)
}

pub fn parse_commutative(text: &str) -> Result<CommutativePolynomial> {
    parse(text)
}

pub fn parse_time_polynomial(text: &str) -> Result<TimePolynomial> {
    parse(text)
}

/// A rational written as `n` or `p/q`, with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || err(1, 1, format!("'{text}' is not a rational number"));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A word written as juxtaposed letters, e.g. `x0x1x0` or `x0^2 x1`; `1` is
/// the empty word.
pub fn parse_word_expr(text: &str) -> Result<Word> {
    let s = parse_series(text)?;
    let mut terms = s.iter();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c == &Rational::from_integer(1.into()) && s.is_exact() => Ok(w.clone()),
        _ => Err(err(1, 1, format!("'{text}' is not a single word"))),
    }
}
