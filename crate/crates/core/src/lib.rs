//! Exact word-level algebra for the Birman kernel of the hyperelliptic
//! Torelli group with two marked points, and the reduced Burau
//! representation at `t = -1`.
//!
//! * [`word`]: reduced words in the free group on `ζ_1, …, ζ_{2g+1}`.
//! * [`epsilon`]: the map `ε` on even words, its section, splitting and
//!   Schreier generators of `ker ε`.
//! * [`factor`]: factorization of `ker ε` elements into conjugates of
//!   `ζ_i²` and `[ζ_i ζ_1, ζ_j ζ_1]`.
//! * [`action`]: the action on the arc classes `[β_i]` and the Torelli test.
//! * [`laurent`] and [`burau`]: Laurent matrices, the reduced Burau
//!   representation and membership in `K_n`.

pub mod action;
pub mod burau;
pub mod epsilon;
pub mod error;
pub mod factor;
pub mod laurent;
pub mod word;

pub use action::{
    action_matrix, apply_action, in_torelli_kernel, letter_action, BetaVector, HomActionMatrix,
};
pub use burau::{
    burau, burau_at, burau_generator, center_word, in_kn, is_pure, permutation, pure_generator,
    BraidWord, Permutation,
};
pub use epsilon::{
    balanced_ball, balanced_decompose, epsilon, in_ker_epsilon, schreier_generators, section,
    split, BalancedVector,
};
pub use error::{Error, Result};
pub use factor::{
    factor_kernel_word, verify_factorization, FactorEntry, Factorization, NormalGenerator,
};
pub use laurent::{IntMatrix, LaurentMatrix, LaurentPoly};
pub use word::{enumerate_even_words, reduce, Letter, Sign, Word};
