//! Partitions, compositions, words and tableaux, with descents and minimal parsings.

pub mod composition;
pub mod enumerate;
pub mod parsing;
pub mod partition;
pub mod tableau;
pub mod word;

pub use composition::{refines, Composition, WeightVector};
pub use enumerate::{
    compositions_of, enumerate_ssyt, enumerate_syt, highest_weight_tableau, partitions_of,
};
pub use parsing::{
    descent_composition, destandardize, is_horizontal_band, minimal_parsing, sources_of_type,
    standard_descent_set, standardize_tableau, HorizontalBandParsing,
};
pub use partition::Partition;
pub use tableau::Tableau;
pub use word::{standardize_word, word_descent_composition, Word};
