//! Free-group words over generators `z1..z<rank>`.
//!
//! A [`Word`] is always stored freely reduced. Generators are indexed from 1,
//! so in rank `2g + 1` the letter `z<i>` is the loop `ζ_i` around the `i`-th
//! puncture of the sphere.

use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator or its inverse. The derived order is the enumeration order:
/// index first, then `+1` before `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(index: usize, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    pub const fn pos(index: usize) -> Letter {
        Letter::new(index, Sign::Pos)
    }

    pub const fn neg(index: usize) -> Letter {
        Letter::new(index, Sign::Neg)
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.index, -self.sign)
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

/// Free reduction with a stack; linear time.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for letter in letters {
        match out.last() {
            Some(&last) if last.cancels(letter) => {
                out.pop();
            }
            _ => out.push(letter),
        }
    }
    out
}

/// Splits `text` into letters `<prefix><k>` or `<prefix><k>^-1`, checking
/// `1 <= k <= bound`. Positions in errors are byte offsets of the token.
pub(crate) fn parse_letters(text: &str, prefix: char, bound: usize) -> Result<Vec<Letter>> {
    let mut letters = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let position = offset + text[offset..].find(token).unwrap_or(0);
        offset = position + token.len();
        let malformed = || Error::MalformedToken {
            position,
            token: token.to_string(),
        };
        let body = token.strip_prefix(prefix).ok_or_else(malformed)?;
        let (digits, sign) = match body.strip_suffix("^-1") {
            Some(digits) => (digits, Sign::Neg),
            None => (body, Sign::Pos),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let index: usize = digits.parse().map_err(|_| malformed())?;
        if index == 0 || index > bound {
            return Err(Error::IndexOutOfRange {
                position,
                index,
                bound,
            });
        }
        letters.push(Letter::new(index, sign));
    }
    Ok(letters)
}

pub(crate) fn write_letters(
    f: &mut fmt::Formatter<'_>,
    letters: &[Letter],
    prefix: char,
) -> fmt::Result {
    for (k, letter) in letters.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{prefix}{}", letter.index)?;
        if letter.sign == Sign::Neg {
            f.write_str("^-1")?;
        }
    }
    Ok(())
}

/// A freely reduced element of the free group of the given rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Word {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Builds the reduced word of an arbitrary letter sequence.
    pub fn new<I: IntoIterator<Item = Letter>>(rank: usize, letters: I) -> Result<Word> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let letters = reduce(letters);
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index > rank) {
            return Err(Error::GeneratorOutOfRange {
                index: bad.index,
                bound: rank,
            });
        }
        Ok(Word { rank, letters })
    }

    /// The single-letter word `z<index>^sign`.
    pub fn generator(rank: usize, index: usize, sign: Sign) -> Result<Word> {
        Word::new(rank, [Letter::new(index, sign)])
    }

    pub fn parse(text: &str, rank: usize) -> Result<Word> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let letters = parse_letters(text, 'z', rank)?;
        Ok(Word {
            rank,
            letters: reduce(letters),
        })
    }

    /// Callers guarantee `letters` is reduced and in range.
    pub(crate) fn from_reduced(rank: usize, letters: Vec<Letter>) -> Word {
        debug_assert!(reduce(letters.iter().copied()) == letters);
        Word { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        let letters = reduce(self.letters.iter().chain(&other.letters).copied());
        Ok(Word::from_reduced(self.rank, letters))
    }

    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word::from_reduced(self.rank, letters)
    }

    /// `c · self · c⁻¹`
    pub fn conjugate(&self, c: &Word) -> Result<Word> {
        self.check_rank(c)?;
        let letters = reduce(
            c.letters
                .iter()
                .copied()
                .chain(self.letters.iter().copied())
                .chain(c.letters.iter().rev().map(|l| l.inverse())),
        );
        Ok(Word::from_reduced(self.rank, letters))
    }

    /// `self · other · self⁻¹ · other⁻¹`
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.check_rank(other)?;
        let letters = reduce(
            self.letters
                .iter()
                .copied()
                .chain(other.letters.iter().copied())
                .chain(self.letters.iter().rev().map(|l| l.inverse()))
                .chain(other.letters.iter().rev().map(|l| l.inverse())),
        );
        Ok(Word::from_reduced(self.rank, letters))
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let letters = reduce(
            std::iter::repeat_n(base.letters.iter().copied(), n.unsigned_abs() as usize).flatten(),
        );
        Word::from_reduced(self.rank, letters)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i64()).sum()
    }

    /// Membership in the index-2 subgroup of words with even exponent sum.
    pub fn is_even(&self) -> bool {
        self.exponent_sum().rem_euclid(2) == 0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters, 'z')
    }
}

/// Every reduced word of even exponent sum and length at most `max_len`, in
/// length-lexicographic order. See [`Letter`] for the letter order.
pub fn enumerate_even_words(rank: usize, max_len: usize) -> EvenWords {
    EvenWords {
        rank,
        max_len,
        current: None,
        done: rank == 0,
    }
}

pub struct EvenWords {
    rank: usize,
    max_len: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl EvenWords {
    // Letter codes: 2(k-1) is z<k>, 2(k-1)+1 is z<k>^-1.
    fn letter(code: usize) -> Letter {
        let sign = if code.is_multiple_of(2) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        Letter::new(code / 2 + 1, sign)
    }

    fn cancels(prev: usize, code: usize) -> bool {
        prev / 2 == code / 2 && prev != code
    }

    // Only z1^-1 cancels code 0, and it never cancels itself.
    fn smallest_after(prev: Option<usize>) -> usize {
        match prev {
            Some(p) if Self::cancels(p, 0) => 1,
            _ => 0,
        }
    }

    fn fill(codes: &mut Vec<usize>, len: usize) {
        while codes.len() < len {
            let next = Self::smallest_after(codes.last().copied());
            codes.push(next);
        }
    }

    fn advance(&self, codes: &mut Vec<usize>) -> bool {
        let len = codes.len();
        let alphabet = 2 * self.rank;
        while let Some(mut code) = codes.pop() {
            let prev = codes.last().copied();
            loop {
                code += 1;
                if code >= alphabet {
                    break;
                }
                if prev.is_none_or(|p| !Self::cancels(p, code)) {
                    codes.push(code);
                    Self::fill(codes, len);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for EvenWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let codes = match self.current.take() {
            None => Vec::new(),
            Some(mut codes) => {
                let len = codes.len() + 2;
                if !self.advance(&mut codes) {
                    if len > self.max_len {
                        self.done = true;
                        return None;
                    }
                    codes = Vec::with_capacity(len);
                    Self::fill(&mut codes, len);
                }
                codes
            }
        };
        let word = Word::from_reduced(self.rank, codes.iter().map(|&c| Self::letter(c)).collect());
        self.current = Some(codes);
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, rank: usize) -> Word {
        Word::parse(text, rank).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            w("z1 z2^-1", 3).letters(),
            &[Letter::pos(1), Letter::neg(2)]
        );
        assert!(w("z1 z1^-1", 3).is_identity());
        assert_eq!(
            w("z2 z2 z1", 3).letters(),
            &[Letter::pos(2), Letter::pos(2), Letter::pos(1)]
        );
        assert!(w("", 3).is_identity());
        assert!(w("  \n ", 3).is_identity());
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            Word::parse("z1 z4", 3),
            Err(Error::IndexOutOfRange {
                position: 3,
                index: 4,
                bound: 3
            })
        );
        assert_eq!(
            Word::parse("z1  x2", 3),
            Err(Error::MalformedToken {
                position: 4,
                token: "x2".into()
            })
        );
        for bad in ["z", "z0", "z1^1", "z1^-2", "z-1", "<id>", "z1^-1^-1", "zz1"] {
            assert!(Word::parse(bad, 3).is_err(), "{bad}");
        }
        assert!(matches!(
            Word::parse("z0", 3),
            Err(Error::IndexOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        let seq = [
            Letter::pos(1),
            Letter::pos(2),
            Letter::neg(2),
            Letter::neg(1),
        ];
        assert!(reduce(seq).is_empty());
        assert_eq!(reduce([Letter::pos(1), Letter::pos(1)]).len(), 2);
    }

    #[test]
    fn group_operation_examples() {
        let a = w("z1", 3);
        assert!(a.multiply(&w("z1^-1", 3)).unwrap().is_identity());
        assert!(a.commutator(&a).unwrap().is_identity());
        assert_eq!(w("z1 z2", 3).invert(), w("z2^-1 z1^-1", 3));
        assert_eq!(w("z2", 3).conjugate(&a).unwrap(), w("z1 z2 z1^-1", 3));
        assert_eq!(
            a.multiply(&w("z1", 5)),
            Err(Error::RankMismatch { left: 3, right: 5 })
        );
        assert_eq!(w("z1 z2", 3).pow(-2), w("z2^-1 z1^-1 z2^-1 z1^-1", 3));
        assert!(w("z1 z2", 3).pow(0).is_identity());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(w("z1 z2", 3).exponent_sum(), 2);
        assert!(w("z1 z2", 3).is_even());
        assert_eq!(w("z1", 3).exponent_sum(), 1);
        assert!(!w("z1", 3).is_even());
        assert_eq!(w("z1 z2^-1", 3).exponent_sum(), 0);
        assert!(w("z1 z2^-1", 3).is_even());
        assert!(!w("z1^-1", 3).is_even());
    }

    #[test]
    fn display_round_trips() {
        let word = w("z3 z1^-1 z2", 3);
        assert_eq!(word.to_string(), "z3 z1^-1 z2");
        assert_eq!(Word::identity(3).to_string(), "");
    }

    #[test]
    fn enumeration_small_cases() {
        let all: Vec<Word> = enumerate_even_words(2, 0).collect();
        assert_eq!(all, vec![Word::identity(2)]);

        let all: Vec<String> = enumerate_even_words(1, 2).map(|w| w.to_string()).collect();
        assert_eq!(all, vec!["", "z1 z1", "z1^-1 z1^-1"]);

        let all: Vec<String> = enumerate_even_words(1, 3).map(|w| w.to_string()).collect();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn enumeration_is_length_lex() {
        let words: Vec<Word> = enumerate_even_words(2, 4).collect();
        for pair in words.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            assert!((a.len(), a.letters()) < (b.len(), b.letters()));
        }
        assert_eq!(words[1].to_string(), "z1 z1");
        assert_eq!(words[2].to_string(), "z1 z2");
    }
}
