//! The homomorphism `ε : F^even → Z^{2g+1}_bal`, its canonical section, and
//! Schreier generators for its kernel.
//!
//! `ε` sends a reduced even word `ζ_{i_1}^{α_1} ⋯ ζ_{i_k}^{α_k}` to
//! `Σ_j (-1)^{j+1} e_{i_j}`. Exponent signs play no role; only the position
//! parity and index of each letter do.

use std::collections::HashSet;
use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// An integer vector whose coordinates sum to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BalancedVector {
    coords: Vec<i64>,
}

impl BalancedVector {
    pub fn new(coords: Vec<i64>) -> Result<BalancedVector> {
        if coords.is_empty() {
            return Err(Error::ZeroRank);
        }
        let sum: i64 = coords.iter().sum();
        if sum != 0 {
            return Err(Error::Unbalanced(sum));
        }
        Ok(BalancedVector { coords })
    }

    pub fn zero(len: usize) -> BalancedVector {
        BalancedVector {
            coords: vec![0; len],
        }
    }

    /// `e_i - e_j` (1-based).
    pub fn difference(len: usize, i: usize, j: usize) -> BalancedVector {
        let mut v = BalancedVector::zero(len);
        v.coords[i - 1] += 1;
        v.coords[j - 1] -= 1;
        v
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// 1-based coordinate.
    pub fn get(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Sum of absolute values of the coordinates. Always even.
    pub fn height(&self) -> u64 {
        self.coords.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn add(&self, other: &BalancedVector) -> Result<BalancedVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(BalancedVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn negate(&self) -> BalancedVector {
        BalancedVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.coords.clone())
    }

    pub fn from_json(value: &Value) -> Result<BalancedVector> {
        let coords = value
            .as_array()
            .ok_or_else(|| Error::Json("balanced vector must be an integer array".into()))?
            .iter()
            .map(|c| {
                c.as_i64()
                    .ok_or_else(|| Error::Json(format!("bad coordinate {c}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BalancedVector::new(coords)
    }
}

/// Prints as a combination of basis vectors, e.g. `e1 - e2` or `2e3 - e1 - e2`.
impl fmt::Display for BalancedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "e{}", k + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// Alternating sum over a letter sequence; does not require reduction.
pub(crate) fn epsilon_of_letters(rank: usize, letters: &[Letter]) -> Vec<i64> {
    let mut coords = vec![0; rank];
    for (j, letter) in letters.iter().enumerate() {
        coords[letter.index - 1] += if j % 2 == 0 { 1 } else { -1 };
    }
    coords
}

pub fn epsilon(word: &Word) -> Result<BalancedVector> {
    if !word.is_even() {
        return Err(Error::OddWord);
    }
    Ok(BalancedVector {
        coords: epsilon_of_letters(word.rank(), word.letters()),
    })
}

pub fn in_ker_epsilon(word: &Word) -> bool {
    word.is_even()
        && epsilon_of_letters(word.rank(), word.letters())
            .iter()
            .all(|&c| c == 0)
}

/// `Π_{i=2}^{rank} (ζ_i ζ_1)^{v_i}`, with factors in increasing `i`.
pub fn section(v: &BalancedVector) -> Word {
    let rank = v.len();
    let mut letters = Vec::new();
    for i in 2..=rank {
        let power = v.get(i);
        let block = if power >= 0 {
            [Letter::pos(i), Letter::pos(1)]
        } else {
            [Letter::neg(1), Letter::neg(i)]
        };
        for _ in 0..power.unsigned_abs() {
            letters.extend(block);
        }
    }
    Word::new(rank, letters).expect("indices are in range")
}

/// Writes an even word as `k · section(v)` with `k ∈ ker ε`.
pub fn split(word: &Word) -> Result<(Word, BalancedVector)> {
    let v = epsilon(word)?;
    let k = word.multiply(&section(&v).invert())?;
    Ok((k, v))
}

/// Greedy height descent: repeatedly take the smallest index `m` with a
/// negative coordinate and the smallest `p` with a positive one, and peel off
/// `e_p - e_m`. Returns the pairs `(p, m)`; their differences sum to `v`.
pub fn balanced_decompose(v: &BalancedVector) -> Vec<(usize, usize)> {
    let mut z = v.coords.clone();
    let mut out = Vec::with_capacity((v.height() / 2) as usize);
    loop {
        let m = z.iter().position(|&c| c < 0);
        let p = z.iter().position(|&c| c > 0);
        match (p, m) {
            (Some(p), Some(m)) => {
                z[p] -= 1;
                z[m] += 1;
                out.push((p + 1, m + 1));
            }
            _ => break,
        }
    }
    out
}

/// Every balanced vector of the given length with `height / 2 <= radius`, in
/// lexicographic order.
pub fn balanced_ball(len: usize, radius: u64) -> Vec<BalancedVector> {
    fn go(len: usize, radius: i64, prefix: &mut Vec<i64>, out: &mut Vec<BalancedVector>) {
        let pos: i64 = prefix.iter().filter(|&&c| c > 0).sum();
        let neg: i64 = -prefix.iter().filter(|&&c| c < 0).sum::<i64>();
        if prefix.len() == len {
            if pos == neg {
                out.push(BalancedVector {
                    coords: prefix.clone(),
                });
            }
            return;
        }
        for c in -(radius - neg)..=(radius - pos) {
            prefix.push(c);
            go(len, radius, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(len, radius as i64, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Basis of the even subgroup relative to the transversal `{1, ζ_1}`:
/// `ζ_i ζ_1^-1` for `i >= 2` and `ζ_1 ζ_i` for `i >= 1`.
pub fn even_basis(rank: usize) -> Vec<Word> {
    let mut basis: Vec<Word> = (2..=rank)
        .map(|i| Word::new(rank, [Letter::pos(i), Letter::neg(1)]))
        .chain((1..=rank).map(|i| Word::new(rank, [Letter::pos(1), Letter::pos(i)])))
        .collect::<Result<_>>()
        .expect("indices are in range");
    basis.sort_by_key(|w| w.letters().to_vec());
    basis
}

/// Schreier generators `s(v) · x · s(v + ε(x))⁻¹` of `ker ε` for every coset
/// representative `s(v)` with `height(v) / 2 <= radius` and every basis
/// letter `x` or its inverse. Deduplicated in first-seen order; identity
/// omitted.
pub fn schreier_generators(genus: usize, radius: u64) -> Vec<Word> {
    let rank = 2 * genus + 1;
    let mut letters = Vec::new();
    for x in even_basis(rank) {
        let inv = x.invert();
        letters.push(x);
        letters.push(inv);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in balanced_ball(rank, radius) {
        let rep = section(&v);
        for x in &letters {
            let prod = rep.multiply(x).expect("same rank");
            let target = epsilon(&prod).expect("even");
            let gen = prod
                .multiply(&section(&target).invert())
                .expect("same rank");
            if !gen.is_identity() && seen.insert(gen.clone()) {
                out.push(gen);
            }
        }
    }
    out
}
