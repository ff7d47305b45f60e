//! Factorization of `ker ε` elements into conjugates of the normal generators
//! `ζ_i²` and `[ζ_i ζ_1, ζ_j ζ_1]`.
//!
//! The even subgroup is free on `g_i = ζ_i ζ_1` (`i >= 1`) and `h_i = ζ_1 ζ_i`
//! (`i >= 2`). A kernel word is rewritten in that basis, every `h_i` and
//! `g_1` is traded for a `g`-letter and a product of conjugated squares, and
//! what is left (a word in `g_2, g_3, …` with every exponent sum zero) is
//! collected to the identity by adjacent swaps, each swap emitting one
//! conjugated commutator.
//!
//! Factorizations are not canonical. The only contract is that the expansion
//! reduces to the input word.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::epsilon::in_ker_epsilon;
use crate::error::{Error, Result};
use crate::word::{reduce, Letter, Sign, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalGenerator {
    /// `ζ_i²`
    Square(usize),
    /// `[ζ_i ζ_1, ζ_j ζ_1]`, with `i, j >= 2` and `i != j`
    Comm(usize, usize),
}

impl NormalGenerator {
    pub fn validate(self, rank: usize) -> Result<NormalGenerator> {
        let ok = match self {
            NormalGenerator::Square(i) => (1..=rank).contains(&i),
            NormalGenerator::Comm(i, j) => {
                i != j && (2..=rank).contains(&i) && (2..=rank).contains(&j)
            }
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidNormalGenerator(format!(
                "{self} in rank {rank}"
            )))
        }
    }

    pub fn word(self, rank: usize) -> Result<Word> {
        self.validate(rank)?;
        match self {
            NormalGenerator::Square(i) => Word::new(rank, [Letter::pos(i), Letter::pos(i)]),
            NormalGenerator::Comm(i, j) => {
                let a = Word::new(rank, [Letter::pos(i), Letter::pos(1)])?;
                let b = Word::new(rank, [Letter::pos(j), Letter::pos(1)])?;
                a.commutator(&b)
            }
        }
    }
}

impl fmt::Display for NormalGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalGenerator::Square(i) => write!(f, "sq:{i}"),
            NormalGenerator::Comm(i, j) => write!(f, "comm:{i}:{j}"),
        }
    }
}

impl FromStr for NormalGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<NormalGenerator> {
        let bad = || Error::InvalidNormalGenerator(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["sq", i] => Ok(NormalGenerator::Square(num(i)?)),
            ["comm", i, j] => Ok(NormalGenerator::Comm(num(i)?, num(j)?)),
            _ => Err(bad()),
        }
    }
}

/// One factor `conj · gen^exp · conj⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorEntry {
    pub conj: Word,
    pub gen: NormalGenerator,
    pub exp: Sign,
}

impl FactorEntry {
    pub fn expand(&self) -> Result<Word> {
        self.gen
            .word(self.conj.rank())?
            .pow(self.exp.as_i64())
            .conjugate(&self.conj)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    rank: usize,
    entries: Vec<FactorEntry>,
}

impl Factorization {
    pub fn new(rank: usize, entries: Vec<FactorEntry>) -> Result<Factorization> {
        for e in &entries {
            if e.conj.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: e.conj.rank(),
                });
            }
            e.gen.validate(rank)?;
        }
        Ok(Factorization { rank, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[FactorEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The reduced product of all factors, in order.
    pub fn expand(&self) -> Result<Word> {
        let mut letters = Vec::new();
        for e in &self.entries {
            letters.extend_from_slice(e.expand()?.letters());
        }
        Word::new(self.rank, letters)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    json!({
                        "conj": e.conj.to_string(),
                        "gen": e.gen.to_string(),
                        "exp": e.exp.as_i64(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value, rank: usize) -> Result<Factorization> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Json("factorization must be an array".into()))?;
        let mut entries = Vec::with_capacity(items.len());
        for item in items {
            let conj = item["conj"]
                .as_str()
                .ok_or_else(|| Error::Json(format!("missing \"conj\" in {item}")))?;
            let gen = item["gen"]
                .as_str()
                .ok_or_else(|| Error::Json(format!("missing \"gen\" in {item}")))?;
            let exp = item["exp"]
                .as_i64()
                .and_then(Sign::from_i64)
                .ok_or_else(|| Error::Json(format!("\"exp\" must be 1 or -1 in {item}")))?;
            entries.push(FactorEntry {
                conj: Word::parse(conj, rank)?,
                gen: gen.parse()?,
                exp,
            });
        }
        Factorization::new(rank, entries)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let conj = if e.conj.is_identity() {
                "<id>".to_string()
            } else {
                e.conj.to_string()
            };
            write!(f, "[{conj}] {}^{}", e.gen, e.exp.as_i64())?;
        }
        Ok(())
    }
}

pub fn verify_factorization(word: &Word, factorization: &Factorization) -> bool {
    word.rank() == factorization.rank() && factorization.expand().is_ok_and(|w| w == *word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    G,
    H,
}

/// A letter of the even-subgroup basis. `H` with index 1 never occurs; it is
/// normalized to `G(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct BasisLetter {
    kind: Kind,
    index: usize,
    sign: Sign,
}

impl BasisLetter {
    fn g(index: usize, sign: Sign) -> BasisLetter {
        BasisLetter {
            kind: Kind::G,
            index,
            sign,
        }
    }

    fn h(index: usize, sign: Sign) -> BasisLetter {
        if index == 1 {
            return BasisLetter::g(1, sign);
        }
        BasisLetter {
            kind: Kind::H,
            index,
            sign,
        }
    }

    fn cancels(self, other: BasisLetter) -> bool {
        self.kind == other.kind && self.index == other.index && self.sign != other.sign
    }

    fn push_zeta(self, out: &mut Vec<Letter>) {
        let (a, b) = match self.kind {
            Kind::G => (self.index, 1),
            Kind::H => (1, self.index),
        };
        match self.sign {
            Sign::Pos => out.extend([Letter::pos(a), Letter::pos(b)]),
            Sign::Neg => out.extend([Letter::neg(b), Letter::neg(a)]),
        }
    }
}

fn push_reduced(seq: &mut Vec<BasisLetter>, letter: BasisLetter) {
    match seq.last() {
        Some(&last) if last.cancels(letter) => {
            seq.pop();
        }
        _ => seq.push(letter),
    }
}

fn zeta_word(rank: usize, seq: &[BasisLetter]) -> Word {
    let mut letters = Vec::with_capacity(2 * seq.len());
    for &b in seq {
        b.push_zeta(&mut letters);
    }
    Word::new(rank, letters).expect("indices are in range")
}

/// Rewrites a reduced even word in the `g`/`h` basis using the pair identities
/// `ζ_a ζ_b = g_a g_1⁻¹ h_b`, `ζ_a ζ_b⁻¹ = g_a g_b⁻¹`, `ζ_a⁻¹ ζ_b = h_a⁻¹ h_b`
/// and `ζ_a⁻¹ ζ_b⁻¹ = h_a⁻¹ g_1 g_b⁻¹`.
fn to_even_basis(word: &Word) -> Vec<BasisLetter> {
    let mut seq = Vec::with_capacity(word.len());
    for pair in word.letters().chunks_exact(2) {
        let (x, y) = (pair[0], pair[1]);
        let (a, b) = (x.index, y.index);
        let parts: &[BasisLetter] = match (x.sign, y.sign) {
            (Sign::Pos, Sign::Pos) => &[
                BasisLetter::g(a, Sign::Pos),
                BasisLetter::g(1, Sign::Neg),
                BasisLetter::h(b, Sign::Pos),
            ],
            (Sign::Pos, Sign::Neg) => &[BasisLetter::g(a, Sign::Pos), BasisLetter::g(b, Sign::Neg)],
            (Sign::Neg, Sign::Pos) => &[BasisLetter::h(a, Sign::Neg), BasisLetter::h(b, Sign::Pos)],
            (Sign::Neg, Sign::Neg) => &[
                BasisLetter::h(a, Sign::Neg),
                BasisLetter::g(1, Sign::Pos),
                BasisLetter::g(b, Sign::Neg),
            ],
        };
        for &p in parts {
            push_reduced(&mut seq, p);
        }
    }
    seq
}

struct Emitter {
    rank: usize,
    entries: Vec<FactorEntry>,
}

impl Emitter {
    fn emit(&mut self, outer: &Word, inner: &[Letter], gen: NormalGenerator, exp: Sign) {
        let mut letters = outer.letters().to_vec();
        letters.extend_from_slice(inner);
        let conj = Word::from_reduced(self.rank, reduce(letters));
        self.entries.push(FactorEntry { conj, gen, exp });
    }

    /// `g_i h_i = (ζ_i · ζ_1² · ζ_i⁻¹) · ζ_i²`, or its inverse.
    fn emit_gh(&mut self, outer: &Word, i: usize, sign: Sign) {
        let zi = [Letter::pos(i)];
        match sign {
            Sign::Pos => {
                self.emit(outer, &zi, NormalGenerator::Square(1), Sign::Pos);
                self.emit(outer, &[], NormalGenerator::Square(i), Sign::Pos);
            }
            Sign::Neg => {
                self.emit(outer, &[], NormalGenerator::Square(i), Sign::Neg);
                self.emit(outer, &zi, NormalGenerator::Square(1), Sign::Neg);
            }
        }
    }

    /// `[x, y]` for `x = g_a^α`, `y = g_b^β`, as one conjugate of
    /// `[g_a, g_b]^±`.
    fn emit_commutator(&mut self, outer: &Word, x: BasisLetter, y: BasisLetter) {
        let gen = NormalGenerator::Comm(x.index, y.index);
        let mut inner = Vec::new();
        let exp = match (x.sign, y.sign) {
            (Sign::Pos, Sign::Pos) => Sign::Pos,
            // [x⁻¹, y] = x⁻¹ [x, y]⁻¹ x
            (Sign::Neg, Sign::Pos) => {
                x.push_zeta(&mut inner);
                Sign::Neg
            }
            // [x, y⁻¹] = y⁻¹ [x, y]⁻¹ y
            (Sign::Pos, Sign::Neg) => {
                y.push_zeta(&mut inner);
                Sign::Neg
            }
            // [x⁻¹, y⁻¹] = (xy)⁻¹ [x, y] (xy)
            (Sign::Neg, Sign::Neg) => {
                y.push_zeta(&mut inner);
                x.push_zeta(&mut inner);
                Sign::Pos
            }
        };
        self.emit(outer, &inner, gen, exp);
    }
}

/// Factors `word ∈ ker ε` into conjugated normal generators.
pub fn factor_kernel_word(word: &Word) -> Result<Factorization> {
    if !in_ker_epsilon(word) {
        return Err(Error::NotInKernel);
    }
    let rank = word.rank();
    let mut out = Emitter {
        rank,
        entries: Vec::new(),
    };

    // Eliminate h_i and g_1, keeping w = (emitted) · prefix · (rest).
    let mut prefix: Vec<BasisLetter> = Vec::new();
    for letter in to_even_basis(word) {
        match (letter.kind, letter.index) {
            (Kind::G, 1) => {
                let conj = zeta_word(rank, &prefix);
                out.emit(&conj, &[], NormalGenerator::Square(1), letter.sign);
            }
            (Kind::G, _) => push_reduced(&mut prefix, letter),
            (Kind::H, i) => match letter.sign {
                // h_i = g_i⁻¹ · (g_i h_i)
                Sign::Pos => {
                    push_reduced(&mut prefix, BasisLetter::g(i, Sign::Neg));
                    let conj = zeta_word(rank, &prefix);
                    out.emit_gh(&conj, i, Sign::Pos);
                }
                // h_i⁻¹ = (g_i h_i)⁻¹ · g_i
                Sign::Neg => {
                    let conj = zeta_word(rank, &prefix);
                    out.emit_gh(&conj, i, Sign::Neg);
                    push_reduced(&mut prefix, BasisLetter::g(i, Sign::Pos));
                }
            },
        }
    }

    // Collect: swap the leftmost adjacent pair out of increasing index order.
    let mut seq = prefix;
    while let Some(k) = seq.windows(2).position(|p| p[0].index > p[1].index) {
        let (x, y) = (seq[k], seq[k + 1]);
        let conj = zeta_word(rank, &seq[..k]);
        out.emit_commutator(&conj, x, y);
        let mut next = Vec::with_capacity(seq.len());
        for &b in seq[..k].iter().chain([&y, &x]).chain(&seq[k + 2..]) {
            push_reduced(&mut next, b);
        }
        seq = next;
    }
    // Sorted and reduced with zero exponent sums means empty.
    debug_assert!(seq.is_empty(), "collection left {} letters", seq.len());

    Factorization::new(rank, out.entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, rank: usize) -> Word {
        Word::parse(text, rank).unwrap()
    }

    #[test]
    fn basis_expansion_matches_word() {
        for text in [
            "z1 z2",
            "z1 z2^-1",
            "z1^-1 z2",
            "z1^-1 z2^-1",
            "z1 z1",
            "z3 z1 z2 z3^-1 z1^-1 z2^-1",
            "z2^-1 z3^-1 z1^-1 z1^-1",
        ] {
            let word = w(text, 3);
            assert_eq!(zeta_word(3, &to_even_basis(&word)), word, "{text}");
        }
    }

    #[test]
    fn square_factors_as_itself() {
        let f = factor_kernel_word(&w("z1 z1", 3)).unwrap();
        assert_eq!(
            f.entries(),
            &[FactorEntry {
                conj: Word::identity(3),
                gen: NormalGenerator::Square(1),
                exp: Sign::Pos
            }]
        );
        assert!(verify_factorization(&w("z1 z1", 3), &f));
        assert!(!verify_factorization(
            &w("z1 z1", 3),
            &Factorization::new(3, vec![]).unwrap()
        ));
    }

    #[test]
    fn commutator_is_one_entry() {
        let word = w("z3 z1", 3).commutator(&w("z2 z1", 3)).unwrap();
        let f = factor_kernel_word(&word).unwrap();
        assert!(verify_factorization(&word, &f));
        assert_eq!(f.len(), 1);
        assert_eq!(f.entries()[0].gen, NormalGenerator::Comm(3, 2));
        assert!(f.entries()[0].conj.is_identity());
    }

    #[test]
    fn conjugated_square_example() {
        let word = w("z1 z2 z2 z1", 3);
        let f = factor_kernel_word(&word).unwrap();
        assert!(verify_factorization(&word, &f));
        assert!(f
            .entries()
            .iter()
            .any(|e| e.gen == NormalGenerator::Square(2)));
        assert!(f
            .entries()
            .iter()
            .any(|e| e.gen == NormalGenerator::Square(1)));
    }

    #[test]
    fn rejects_non_kernel_words() {
        assert_eq!(factor_kernel_word(&w("z1 z2", 3)), Err(Error::NotInKernel));
        assert_eq!(factor_kernel_word(&w("z1", 3)), Err(Error::NotInKernel));
    }

    #[test]
    fn identity_has_empty_factorization() {
        let f = factor_kernel_word(&Word::identity(5)).unwrap();
        assert!(f.is_empty());
        assert!(verify_factorization(&Word::identity(5), &f));
    }

    #[test]
    fn generator_words() {
        assert_eq!(NormalGenerator::Square(2).word(3).unwrap(), w("z2 z2", 3));
        assert_eq!(
            NormalGenerator::Comm(3, 2).word(3).unwrap(),
            w("z3 z1 z2 z3^-1 z1^-1 z2^-1", 3)
        );
        assert!(NormalGenerator::Comm(1, 2).word(3).is_err());
        assert!(NormalGenerator::Comm(2, 2).word(3).is_err());
        assert!(NormalGenerator::Square(4).word(3).is_err());
    }

    #[test]
    fn generator_names_round_trip() {
        for g in [NormalGenerator::Square(3), NormalGenerator::Comm(4, 2)] {
            assert_eq!(g.to_string().parse::<NormalGenerator>().unwrap(), g);
        }
        assert!("sq".parse::<NormalGenerator>().is_err());
        assert!("comm:2".parse::<NormalGenerator>().is_err());
        assert!("cube:2".parse::<NormalGenerator>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let word = w("z2 z3 z1 z1^-1 z3^-1 z2^-1 z1 z1", 3);
        let word = word
            .multiply(&w("z3 z1", 3).commutator(&w("z2^-1 z1", 3)).unwrap())
            .unwrap();
        let f = factor_kernel_word(&word).unwrap();
        let back = Factorization::from_json(&f.to_json(), 3).unwrap();
        assert_eq!(back, f);
        assert!(verify_factorization(&word, &back));
    }
}
