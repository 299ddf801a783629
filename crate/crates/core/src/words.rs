//! Alphabet, words, parsing/formatting, free reduction, and elementary word
//! algebra.
//!
//! The generating set is the free-product generating set `{x, y}` of the
//! dihedral Artin group `G(m)`:
//!
//! * `m` odd:  `G(m) = <x, y | x^2 = y^m>` with central Garside element
//!   `Delta = x^2`;
//! * `m = 2p` even: `G(m) = BS(p, p) = <x, y | y^-1 x^p y = x^p>` with
//!   `Delta = x^p`.
//!
//! Surface syntax for words: `x`, `X` (= x^-1), `y`, `Y` (= y^-1), optional
//! `^<int>` exponents, `D` for `Delta` (requires group parameters), and
//! optional whitespace between tokens.

use std::fmt;

/// A single generator letter. Declaration order fixes the global
/// lexicographic order used everywhere: `x < x^-1 < y < y^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `x`
    X,
    /// `x^-1`
    Xinv,
    /// `y`
    Y,
    /// `y^-1`
    Yinv,
}

/// The two generators, without a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X, Letter::Xinv, Letter::Y, Letter::Yinv];

    pub fn generator(self) -> Gen {
        match self {
            Letter::X | Letter::Xinv => Gen::X,
            Letter::Y | Letter::Yinv => Gen::Y,
        }
    }

    /// +1 or -1.
    pub fn sign(self) -> i64 {
        match self {
            Letter::X | Letter::Y => 1,
            Letter::Xinv | Letter::Yinv => -1,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::Xinv,
            Letter::Xinv => Letter::X,
            Letter::Y => Letter::Yinv,
            Letter::Yinv => Letter::Y,
        }
    }

    /// The letter with the given generator and sign.
    pub fn from_parts(gen: Gen, sign: i64) -> Letter {
        match (gen, sign > 0) {
            (Gen::X, true) => Letter::X,
            (Gen::X, false) => Letter::Xinv,
            (Gen::Y, true) => Letter::Y,
            (Gen::Y, false) => Letter::Yinv,
        }
    }

    fn to_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Xinv => 'X',
            Letter::Y => 'y',
            Letter::Yinv => 'Y',
        }
    }
}

/// A word over the four letters. Not necessarily freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Iterated cancellation of adjacent inverse pairs. Idempotent.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Reversed sequence of inverted letters.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).free_reduce()
    }

    /// Rotation by `i` letters: `w[i..] w[..i]` (conjugation by the prefix).
    pub fn rotate(&self, i: usize) -> Word {
        let n = self.0.len();
        if n == 0 {
            return Word::empty();
        }
        let i = i % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    /// All distinct rotations.
    pub fn rotations(&self) -> Vec<Word> {
        let mut out: Vec<Word> = (0..self.0.len().max(1)).map(|i| self.rotate(i)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Maximal runs of one generator: `(generator, signed exponent)` pairs
    /// with adjacent runs on different generators (assumes free reduction;
    /// a non-reduced word yields runs whose exponents still sum correctly
    /// per maximal same-letter block).
    pub fn runs(&self) -> Vec<(Gen, i64)> {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for &l in &self.0 {
            match out.last_mut() {
                Some((g, e)) if *g == l.generator() && (*e > 0) == (l.sign() > 0) => {
                    *e += l.sign();
                }
                _ => out.push((l.generator(), l.sign())),
            }
        }
        out
    }

    /// The word `g^e` (single run).
    pub fn run(gen: Gen, exp: i64) -> Word {
        let l = Letter::from_parts(gen, exp.signum().max(0) * 2 - 1);
        Word(vec![l; exp.unsigned_abs() as usize])
    }
}

impl fmt::Display for Word {
    /// Compact run-length formatting, the exact inverse of [`parse_word`]
    /// on reduced tokens: `x y^-2 x` prints as `xY^2x` style tokens with
    /// exponents only for runs of length >= 2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return Ok(());
        }
        for (gen, exp) in self.runs() {
            let l = Letter::from_parts(gen, exp.signum());
            let n = exp.unsigned_abs();
            if n == 1 {
                write!(f, "{}", l.to_char())?;
            } else {
                write!(f, "{}^{}", l.to_char(), n)?;
            }
        }
        Ok(())
    }
}

/// Parameters of the group `G(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupParams {
    pub m: i64,
}

/// Parity-specific view of the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `m = 2k + 1`, `Delta = x^2`.
    Odd { k: i64 },
    /// `m = 2p`, `Delta = x^p`; `p = 2k` or `p = 2k + 1`.
    Even { p: i64 },
}

impl GroupParams {
    pub fn new(m: i64) -> Result<GroupParams, WordError> {
        if m < 3 {
            return Err(WordError::BadParams(format!("m must be >= 3, got {m}")));
        }
        Ok(GroupParams { m })
    }

    pub fn parity(&self) -> Parity {
        if self.m % 2 == 1 {
            Parity::Odd { k: (self.m - 1) / 2 }
        } else {
            Parity::Even { p: self.m / 2 }
        }
    }

    pub fn is_odd(&self) -> bool {
        self.m % 2 == 1
    }

    /// `k` as used by the paper: odd `m = 2k+1`; even `p = 2k` or `2k+1`.
    pub fn k(&self) -> i64 {
        match self.parity() {
            Parity::Odd { k } => k,
            Parity::Even { p } => p / 2,
        }
    }

    /// `p = m/2` for even `m`.
    pub fn p(&self) -> Option<i64> {
        match self.parity() {
            Parity::Odd { .. } => None,
            Parity::Even { p } => Some(p),
        }
    }

    /// Word length of the central Garside element `Delta`.
    pub fn delta_len(&self) -> i64 {
        match self.parity() {
            Parity::Odd { .. } => 2,
            Parity::Even { p } => p,
        }
    }

    /// `Delta^c` as a word (a run of `x`).
    pub fn delta_word(&self, c: i64) -> Word {
        Word::run(Gen::X, c * self.delta_len())
    }
}

/// Errors from word-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    Malformed(String),
    ExponentOverflow(String),
    BadParams(String),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Malformed(s) => write!(f, "malformed word: {s}"),
            WordError::ExponentOverflow(s) => write!(f, "exponent overflow: {s}"),
            WordError::BadParams(s) => write!(f, "bad group parameters: {s}"),
        }
    }
}

impl std::error::Error for WordError {}

/// Parse the surface syntax. `params` is only needed when the text uses `D`
/// (the central element `Delta`, whose letter expansion depends on `m`).
pub fn parse_word(text: &str, params: Option<GroupParams>) -> Result<Word, WordError> {
    let mut out: Vec<Letter> = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let base: Option<Letter> = match c {
            'x' => Some(Letter::X),
            'X' => Some(Letter::Xinv),
            'y' => Some(Letter::Y),
            'Y' => Some(Letter::Yinv),
            'D' => None,
            _ => {
                return Err(WordError::Malformed(format!(
                    "unexpected character {c:?} in {text:?}"
                )))
            }
        };
        // Optional exponent.
        let mut exp: i64 = 1;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            if chars.peek() == Some(&'-') || chars.peek() == Some(&'+') {
                digits.push(chars.next().unwrap());
            }
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(chars.next().unwrap());
                } else {
                    break;
                }
            }
            exp = digits
                .parse::<i64>()
                .map_err(|_| WordError::ExponentOverflow(format!("exponent {digits:?}")))?;
        }
        let (letter, count) = match base {
            Some(l) => {
                let l = if exp < 0 { l.inverse() } else { l };
                (l, exp.unsigned_abs())
            }
            None => {
                let params = params.ok_or_else(|| {
                    WordError::Malformed("`D` requires group parameters (m)".into())
                })?;
                let dl = params.delta_len();
                let total = exp
                    .checked_mul(dl)
                    .ok_or_else(|| WordError::ExponentOverflow("D exponent".into()))?;
                let l = if total < 0 { Letter::Xinv } else { Letter::X };
                (l, total.unsigned_abs())
            }
        };
        if count > (1 << 24) {
            return Err(WordError::ExponentOverflow(format!(
                "exponent {count} too large to expand"
            )));
        }
        out.extend(std::iter::repeat(letter).take(count as usize));
    }
    Ok(Word(out))
}
