//! Permutations and their statistics, labelled weighted posets, and the
//! enriched P-partition generating functions `Γ^(q)` and `Γ^±`.

mod enriched;
mod perm;
mod poset;

pub use enriched::{enumerate_enriched, gamma_pm, gamma_q, gamma_q_product, EnrichedMap};
pub use perm::Permutation;
pub use poset::{skew_cell_labels, LabelledWeightedPoset};
