//! Fundamental quasisymmetric and Schur expansions, and the change of basis between them.

pub mod expansion;
pub mod schurify;

pub use expansion::{BasisKey, Expansion, FExpansion, SchurExpansion};
pub use schurify::{
    f_to_monomials, is_schur_positive, leading_support, plethysm_monomial_count,
    schur_expansion_to_f, schur_to_f, schurify,
};
