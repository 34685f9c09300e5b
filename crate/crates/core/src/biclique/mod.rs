//! Induced complete bipartite subgraphs, the `(U, V, T)` partition and the
//! path finders used to reason about its bipartite core.

mod partition;
mod paths;
mod search;

pub use partition::{build_uvt_partition, CleanupStep, InitialSplit, PartitionUVT, Side, UvtTrace};
pub use paths::{
    find_long_path, find_parity_path, is_path, truncate_into_disjoint_paths, LongPath, PathError,
};
pub use search::{
    max_induced_complete_bipartite, twin_classes, validate_biclique, BicliqueResult,
    BicliqueSearch,
};
