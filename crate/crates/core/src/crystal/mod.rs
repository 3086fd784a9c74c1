//! Crystal operators and crystal graphs.

pub mod graph;
pub mod operators;

pub use graph::{generate_crystal, generate_crystal_par, word_crystal_component, CrystalGraph};
pub use operators::{e_tableau, e_word, f_tableau, f_word, paren_reduce, ParenReduction};
