//! Combinatorial tools: the graphs G_2n and H_2n on even/odd-weight strings,
//! exact independent sets, canonical forms under flips and permutations,
//! tripartite 2-partitions of complete graphs, and Z_2 multilinear polynomials.

pub mod bits;
pub mod canon;
pub mod graph;
pub mod poly;
pub mod tripartite;

pub use canon::{canonical_form, is_flip_permutation, permute_bits};
pub use graph::{independence_bounds, split_bound, BitGraph, IndependenceBounds, Parity, SplitReport};
pub use poly::{congruity_test, cubic_substitution_check, twice_linear_partition, Congruity, MultilinearPoly, TwiceLinear};
pub use tripartite::{canonical_pair, tripartite_2_partitions, TripartitePair};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombError {
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
