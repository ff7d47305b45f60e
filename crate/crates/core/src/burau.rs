//! Braid words, their strand permutations, and the reduced Burau
//! representation.
//!
//! Convention: the generator `σ_i` of `B_n` maps to the `(n-1)×(n-1)` matrix
//! that is the identity except in row `i`, where
//!
//! ```text
//! (i, i-1) = t   (when i > 1)
//! (i, i)   = -t
//! (i, i+1) = 1   (when i < n-1)
//! ```
//!
//! and a word maps to the product of its letter matrices in word order. Any
//! consistent convention has the same kernel; this one is fixed so images can
//! be compared exactly.
//!
//! Braid words are only freely reduced. Braid relations are never applied, so
//! equality of braids is judged by images (Burau matrix plus permutation).
//! That test is sound but not complete.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{IntMatrix, LaurentMatrix, LaurentPoly};
use crate::word::{parse_letters, reduce, write_letters, Letter, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, [])
    }

    pub fn new<I: IntoIterator<Item = Letter>>(strands: usize, letters: I) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let letters = reduce(letters);
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: bad.index,
                bound: strands - 1,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `s<k>` / `s<k>^-1` tokens.
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let letters = parse_letters(text, 's', strands - 1)?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    fn check(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::RankMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check(other)?;
        Ok(BraidWord {
            strands: self.strands,
            letters: reduce(self.letters.iter().chain(&other.letters).copied()),
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `c · self · c⁻¹`
    pub fn conjugate(&self, c: &BraidWord) -> Result<BraidWord> {
        c.multiply(self)?.multiply(&c.invert())
    }

    pub fn pow(&self, n: u32) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: reduce(
                std::iter::repeat_n(self.letters.iter().copied(), n as usize).flatten(),
            ),
        }
    }

    /// The same braid on more strands, with the new strands on the right.
    pub fn embed(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::RankMismatch {
                left: self.strands,
                right: strands,
            });
        }
        BraidWord::new(strands, self.letters.iter().copied())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters, 's')
    }
}

/// A bijection of `{1..n}`; `images[k - 1]` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// The transposition `(i i+1)`.
    pub fn transposition(n: usize, i: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self ∘ other)(x) = self(other(x))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// Disjoint cycles of length at least 2, smallest point first.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced Burau matrix of `σ_i^sign` in `B_n`.
pub fn burau_generator(strands: usize, index: usize, sign: Sign) -> Result<LaurentMatrix> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    let d = strands - 1;
    if index == 0 || index > d {
        return Err(Error::GeneratorOutOfRange { index, bound: d });
    }
    let mut m = LaurentMatrix::identity(d);
    let row = index - 1;
    // Inverse row: (i, i-1) = 1, (i, i) = -t^-1, (i, i+1) = t^-1.
    let (left, diag, right) = match sign {
        Sign::Pos => (
            LaurentPoly::t(),
            LaurentPoly::monomial(-1, 1),
            LaurentPoly::one(),
        ),
        Sign::Neg => (
            LaurentPoly::one(),
            LaurentPoly::monomial(-1, -1),
            LaurentPoly::monomial(1, -1),
        ),
    };
    if row > 0 {
        m.set(row, row - 1, left);
    }
    m.set(row, row, diag);
    if row + 1 < d {
        m.set(row, row + 1, right);
    }
    Ok(m)
}

pub fn burau(word: &BraidWord) -> LaurentMatrix {
    let n = word.strands();
    word.letters()
        .iter()
        .fold(LaurentMatrix::identity(n - 1), |acc, l| {
            let g = burau_generator(n, l.index, l.sign).expect("letters are in range");
            acc.mul(&g).expect("dimensions agree")
        })
}

pub fn burau_at(word: &BraidWord, t0: i64) -> Result<IntMatrix> {
    burau(word).evaluate_at(t0)
}

/// Strand permutation, acting left to right: `permutation(uv) =
/// permutation(v) ∘ permutation(u)`.
pub fn permutation(word: &BraidWord) -> Permutation {
    let n = word.strands();
    word.letters()
        .iter()
        .fold(Permutation::identity(n), |acc, l| {
            Permutation::transposition(n, l.index).compose(&acc)
        })
}

pub fn is_pure(word: &BraidWord) -> bool {
    permutation(word).is_identity()
}

/// Membership in `K_n`: pure, with trivial reduced Burau image at `t = -1`.
pub fn in_kn(word: &BraidWord) -> bool {
    is_pure(word) && burau_at(word, -1).is_ok_and(|m| m.is_identity())
}

/// The full twist `Δ² = (σ_1 ⋯ σ_{n-1})^n`, generating the center of `B_n`.
pub fn center_word(strands: usize) -> Result<BraidWord> {
    let row = BraidWord::new(strands, (1..strands).map(Letter::pos))?;
    Ok(row.pow(strands as u32))
}

/// The standard pure braid generator
/// `A_ij = c · σ_i² · c⁻¹` with `c = σ_{j-1} ⋯ σ_{i+1}`.
pub fn pure_generator(strands: usize, i: usize, j: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    if i == 0 || i >= j || j > strands {
        return Err(Error::InvalidPureGenerator { strands, i, j });
    }
    let c = BraidWord::new(strands, (i + 1..j).rev().map(Letter::pos))?;
    let square = BraidWord::new(strands, [Letter::pos(i), Letter::pos(i)])?;
    square.conjugate(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn generator_matrices() {
        let s1 = burau_generator(3, 1, Sign::Pos).unwrap();
        let expect = LaurentMatrix::from_rows(vec![
            vec![lp(&[(1, -1)]), lp(&[(0, 1)])],
            vec![lp(&[]), lp(&[(0, 1)])],
        ])
        .unwrap();
        assert_eq!(s1, expect);

        let s2 = burau_generator(3, 2, Sign::Pos).unwrap();
        let expect = LaurentMatrix::from_rows(vec![
            vec![lp(&[(0, 1)]), lp(&[])],
            vec![lp(&[(1, 1)]), lp(&[(1, -1)])],
        ])
        .unwrap();
        assert_eq!(s2, expect);
    }

    #[test]
    fn generator_inverses() {
        for n in 2..=7 {
            for i in 1..n {
                let p = burau_generator(n, i, Sign::Pos).unwrap();
                let q = burau_generator(n, i, Sign::Neg).unwrap();
                assert!(p.mul(&q).unwrap().is_identity(), "n={n} i={i}");
                assert!(q.mul(&p).unwrap().is_identity(), "n={n} i={i}");
            }
        }
        assert!(burau_generator(3, 3, Sign::Pos).is_err());
        assert!(burau_generator(3, 0, Sign::Pos).is_err());
        assert!(burau_generator(1, 1, Sign::Pos).is_err());
    }

    #[test]
    fn two_strands_is_one_by_one() {
        let m = burau(&b("s1", 2));
        assert_eq!(m.dim(), 1);
        assert_eq!(m.get(0, 0), &lp(&[(1, -1)]));
    }

    #[test]
    fn full_twist_in_b3() {
        let w = b("s1 s2 s1 s2 s1 s2", 3);
        assert!(burau_at(&w, -1).unwrap().is_scalar(-1));
        assert!(is_pure(&w));
        assert!(!in_kn(&w));
        assert!(in_kn(&w.pow(2)));
        assert!(in_kn(&BraidWord::identity(3).unwrap()));
    }

    #[test]
    fn permutations() {
        let p = permutation(&b("s1", 3));
        assert_eq!(p.images(), &[2, 1, 3]);
        assert_eq!(p.to_string(), "(1 2)");
        assert!(is_pure(&b("s1 s1", 3)));
        assert!(!is_pure(&b("s1", 3)));
        // strand 1 moves to 2 under s1, then to 3 under s2
        let p = permutation(&b("s1 s2", 3));
        assert_eq!(p.apply(1), 3);
        assert_eq!(p.images(), &[3, 1, 2]);
        assert_eq!(p.to_string(), "(1 3 2)");
    }

    #[test]
    fn permutation_composition_order() {
        let u = b("s1", 3);
        let v = b("s2", 3);
        let uv = u.multiply(&v).unwrap();
        assert_eq!(permutation(&uv), permutation(&v).compose(&permutation(&u)));
        assert_ne!(permutation(&uv), permutation(&u).compose(&permutation(&v)));
    }

    #[test]
    fn center_and_pure_generators() {
        assert_eq!(center_word(3).unwrap(), b("s1 s2 s1 s2 s1 s2", 3));
        assert_eq!(pure_generator(3, 1, 2).unwrap(), b("s1 s1", 3));
        assert_eq!(pure_generator(4, 1, 3).unwrap(), b("s2 s1 s1 s2^-1", 4));
        assert_eq!(
            pure_generator(5, 1, 4).unwrap(),
            b("s3 s2 s1 s1 s2^-1 s3^-1", 5)
        );
        for n in 2..=6 {
            assert!(is_pure(&center_word(n).unwrap()));
            for j in 2..=n {
                for i in 1..j {
                    assert!(
                        is_pure(&pure_generator(n, i, j).unwrap()),
                        "A_{i}{j} in B_{n}"
                    );
                }
            }
        }
        assert!(pure_generator(4, 2, 2).is_err());
        assert!(pure_generator(4, 1, 5).is_err());
    }

    #[test]
    fn parse_and_display() {
        let w = b("s1 s2^-1 s3", 4);
        assert_eq!(w.to_string(), "s1 s2^-1 s3");
        assert!(b("s2 s2^-1", 3).is_empty());
        assert!(BraidWord::parse("s3", 3).is_err());
        assert!(BraidWord::parse("z1", 3).is_err());
        assert_eq!(BraidWord::parse("s1", 1), Err(Error::TooFewStrands(1)));
    }

    #[test]
    fn permutation_from_images_checks_bijectivity() {
        assert!(Permutation::from_images(vec![2, 1, 3]).is_some());
        assert!(Permutation::from_images(vec![1, 1, 3]).is_none());
        assert!(Permutation::from_images(vec![0, 1]).is_none());
        assert!(Permutation::from_images(vec![1, 3]).is_none());
    }
}
