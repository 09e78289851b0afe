//! Partitions, multipartitions, tableaux, permutations and the dominance order.

mod multipartition;
mod partition;
mod perm;
mod tableau;

pub use multipartition::{
    dominance_geq, dominance_linear_extension, dominates_strictly, n_statistics, node_sets, residue, Cell, Modulus,
    Multipartition, NStatistics, Residue,
};
pub use partition::Partition;
pub use perm::{reduced_word, Permutation};
pub use tableau::{canonical_tableau, standard_tableaux, StandardTableau};
