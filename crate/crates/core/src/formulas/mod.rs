//! Closed-form path counts for the three graphs, hook lengths, diagram
//! codecs, and the symmetric polynomials behind the strict skew count.

mod counts;
mod partition;
mod psi;

pub use counts::{
    hook_claim_holds, hook_lengths, hook_product, multinomial_paths, skew_syt_count, strict_count, strict_skew_count,
    syt_count, syt_count_hook, HookSet,
};
pub use partition::{
    partition_to_young_vertex, strict_partition_to_vertex, strict_vertex_to_partition, young_vertex_to_partition,
    Partition, StrictPartition,
};
pub use psi::{psi_at_distinct_point, psi_polynomial, PSI_MAX_K};
