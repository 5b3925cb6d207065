//! Permutations, Schreier and Cayley graphs, and pairwise structure checks.

mod blocks;
mod checks;
mod cover;
mod factor;
mod group;
pub mod json;
mod labeled;
mod perm;
mod schreier;

pub use blocks::{block_commutation_report, conjugate_component, BlockCommutationReport, ConjugatedBlocks};
pub use checks::{commute_check, graphs_commute, inverse_pair_compat, overlap_check};
pub use cover::{bipartite_double_cover, quadripartite_bipartite_pair, quadripartite_pair, two_copies, QuadripartitePair};
pub use factor::two_factorization;
pub use group::{cayley_graph, inverse_pairing, GroupTable, Side};
pub use labeled::{Edge, LabeledGraph};
pub use perm::Permutation;
pub use schreier::{schreier_graph, SchreierSpec};
