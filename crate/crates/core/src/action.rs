//! Action of words on the classes `[β_1], …, [β_{2g+1}]` of the arcs joining
//! the two marked points, in relative homology.
//!
//! The classes are treated as a free basis. Matrices act on column vectors,
//! and the leftmost letter of a word acts first, so
//! `action_matrix(uv) = action_matrix(v) · action_matrix(u)`.

use std::fmt;

use serde_json::Value;

use crate::epsilon::in_ker_epsilon;
use crate::error::{Error, Result};
use crate::word::Word;

/// A vector in the `β`-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaVector {
    coords: Vec<i64>,
}

impl BetaVector {
    /// The basis class `[β_k]` (1-based).
    pub fn basis(len: usize, k: usize) -> BetaVector {
        let mut coords = vec![0; len];
        coords[k - 1] = 1;
        BetaVector { coords }
    }

    pub fn from_coords(coords: Vec<i64>) -> BetaVector {
        BetaVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.coords.clone())
    }
}

impl fmt::Display for BetaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
            write!(f, "b{}", k + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Square integer matrix acting on `β`-coordinates, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomActionMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl HomActionMatrix {
    pub fn identity(dim: usize) -> HomActionMatrix {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        HomActionMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        *self == HomActionMatrix::identity(self.dim)
    }

    pub fn mul(&self, rhs: &HomActionMatrix) -> Result<HomActionMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let d = self.dim;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(HomActionMatrix { dim: d, entries })
    }

    pub fn apply(&self, v: &BetaVector) -> Result<BetaVector> {
        if v.coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.coords.len(),
            });
        }
        let coords = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v.coords[j]).sum())
            .collect();
        Ok(BetaVector { coords })
    }

    /// Image of `[β_k]`, i.e. column `k` (1-based).
    pub fn image_of_basis(&self, k: usize) -> BetaVector {
        BetaVector {
            coords: (0..self.dim).map(|i| self.get(i, k - 1)).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .chunks(self.dim)
                .map(|row| Value::from(row.to_vec()))
                .collect(),
        )
    }

    /// `I - 2 · c · 1ᵀ` for a coefficient column `c`.
    pub fn rank_one_update(c: &[i64]) -> HomActionMatrix {
        let d = c.len();
        let mut m = HomActionMatrix::identity(d);
        for (row, &ci) in m.entries.chunks_mut(d).zip(c) {
            for cell in row {
                *cell -= 2 * ci;
            }
        }
        m
    }
}

impl fmt::Display for HomActionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
            if i + 1 < self.dim {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Half-twist about `β_i`, either orientation: `β_k ↦ β_k - 2β_i` for every
/// `k`, so `β_i ↦ -β_i`.
pub fn letter_action(genus: usize, index: usize) -> Result<HomActionMatrix> {
    let dim = 2 * genus + 1;
    if index == 0 || index > dim {
        return Err(Error::GeneratorOutOfRange { index, bound: dim });
    }
    let mut c = vec![0; dim];
    c[index - 1] = 1;
    Ok(HomActionMatrix::rank_one_update(&c))
}

/// Composite of the letter actions, leftmost letter first.
pub fn action_matrix(word: &Word) -> Result<HomActionMatrix> {
    let rank = word.rank();
    if rank.is_multiple_of(2) {
        return Err(Error::RankMismatch {
            left: rank,
            right: rank + 1,
        });
    }
    let genus = (rank - 1) / 2;
    let mut m = HomActionMatrix::identity(rank);
    for letter in word.letters() {
        m = letter_action(genus, letter.index)?.mul(&m)?;
    }
    Ok(m)
}

/// Image of `[β_k]` under `word`.
pub fn apply_action(word: &Word, k: usize) -> Result<BetaVector> {
    let rank = word.rank();
    if k == 0 || k > rank {
        return Err(Error::GeneratorOutOfRange {
            index: k,
            bound: rank,
        });
    }
    Ok(action_matrix(word)?.image_of_basis(k))
}

/// Torelli criterion: `word` is even and fixes `[β_1]`.
pub fn in_torelli_kernel(word: &Word) -> bool {
    word.is_even()
        && action_matrix(word)
            .is_ok_and(|m| m.image_of_basis(1) == BetaVector::basis(word.rank(), 1))
}

/// Both kernel tests at once; they always agree.
pub fn kernel_tests_agree(word: &Word) -> bool {
    in_torelli_kernel(word) == in_ker_epsilon(word)
}
