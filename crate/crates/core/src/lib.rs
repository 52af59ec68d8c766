//! Exact computation with upper and lower sets of words over a finite
//! ordered alphabet, ordered by Higman embedding, and with the Galois
//! connection whose closed sets form the MacNeille completion of the free
//! ordered monoid.
//!
//! - [`poset`]: alphabets and their order-theoretic classification.
//! - [`words`]: words, the Higman order, enumeration.
//! - [`cones`]: antichains, upper and lower sets, cones and closures.
//! - [`automata`]: automata for upper sets, inclusion, minimal words.
//! - [`rules`]: syntactic rules, stability and the stable closure.
//! - [`graphs`]: oriented graphs and their word-valued distances.

pub mod automata;
pub mod cones;
pub mod error;
pub mod graphs;
pub mod poset;
pub mod rules;
pub mod words;

pub use cones::{Antichain, LowerSet, UpperSet};
pub use error::{Error, Result};
pub use poset::{Alphabet, AlphabetClass, Letter};
pub use rules::Rule;
pub use words::Word;
