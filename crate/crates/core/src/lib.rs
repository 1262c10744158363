//! Computations with the Baxter combinatorial family.
//!
//! The crate covers words and permutations, binary trees and twin pairs,
//! the Baxter monoid congruence and its insertion algorithm, the Baxter
//! lattice on pairs of twin binary trees, and the Hopf algebra **Baxter**
//! realized inside **FQSym**. All coefficients are exact rationals.
//!
//! Exhaustive sweeps (over `S_n`, over words, over twin pairs) run on rayon
//! when the `parallel` feature is enabled and sequentially otherwise.

pub mod cli;
pub mod congruence;
pub mod error;
pub mod exactlin;
pub mod hopf;
pub mod insertion;
pub mod lattice;
pub mod par;
pub mod perms;
pub mod tables;
pub mod trees;
pub mod verify;
pub mod words;

pub use congruence::CongruenceKind;
pub use error::{Error, Result};
pub use exactlin::{Rational, RationalMatrix};
pub use insertion::{LabeledTwinPair, TwinPair};
pub use perms::Permutation;
pub use trees::{BinaryTree, LabeledTree};
pub use words::Word;
