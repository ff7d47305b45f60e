#![allow(dead_code)]

use htorelli::{BraidWord, Letter, Sign, Word};
use rand::Rng;

/// Repeatedly scans for an adjacent inverse pair and deletes it. Quadratic,
/// independent of the stack reducer in the library.
pub fn naive_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
    loop {
        let hit = letters
            .windows(2)
            .position(|p| p[0].index == p[1].index && p[0].sign != p[1].sign);
        match hit {
            Some(k) => {
                letters.drain(k..k + 2);
            }
            None => return letters,
        }
    }
}

pub fn random_letters<R: Rng>(rng: &mut R, bound: usize, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) {
                Sign::Pos
            } else {
                Sign::Neg
            };
            Letter::new(rng.gen_range(1..=bound), sign)
        })
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(rank, random_letters(rng, rank, len)).unwrap()
}

/// A random element of the even subgroup.
pub fn random_even_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let w = random_word(rng, rank, max_len);
    if w.is_even() {
        return w;
    }
    let extra = Word::new(rank, random_letters(rng, rank, 1)).unwrap();
    w.multiply(&extra).unwrap()
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::new(strands, random_letters(rng, strands - 1, len)).unwrap()
}

/// Alternating-sum oracle for ε written directly from the two-letter rule:
/// the pair (ζ_a^±, ζ_b^±) contributes e_a − e_b.
pub fn epsilon_by_pairs(rank: usize, letters: &[Letter]) -> Vec<i64> {
    let mut v = vec![0; rank];
    for pair in letters.chunks(2) {
        v[pair[0].index - 1] += 1;
        if let Some(second) = pair.get(1) {
            v[second.index - 1] -= 1;
        }
    }
    v
}

/// Every reduced word of length exactly `len`, by brute force over all letter
/// sequences followed by reduction and deduplication.
pub fn brute_force_reduced(rank: usize, max_len: usize) -> std::collections::BTreeSet<Vec<Letter>> {
    let alphabet: Vec<Letter> = (1..=rank)
        .flat_map(|i| [Letter::pos(i), Letter::neg(i)])
        .collect();
    let mut out = std::collections::BTreeSet::new();
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for seq in &layer {
            out.insert(naive_reduce(seq.clone()));
            for &l in &alphabet {
                let mut s = seq.clone();
                s.push(l);
                next.push(s);
            }
        }
        layer = next;
    }
    out
}
