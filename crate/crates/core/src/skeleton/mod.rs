//! Skeletons of crystals, dual equivalence graphs and the associated structural checks.

pub mod checks;
pub mod dual;
pub mod quotient;

pub use checks::{
    check_dual_equivalence_conjecture, check_evac_duality, check_reordering_conjecture,
    check_skeleton_structure, classify_subgraph, induced_by_descent_count, Classification,
    DualEquivalenceReport, EvacDualityReport, PairComparison, ReorderingReport, StructureReport,
    Subgraph,
};
pub use dual::{dual_equivalence_graph, dual_equivalence_involution, DualEquivalenceGraph};
pub use quotient::{
    build_skeleton, max_descent_length, skeleton_from_decomposition, skeleton_stable, SkeletonGraph,
};
