//! Bijections between width-2 matrices, pairs of semistandard tableaux, plane
//! partitions in `B(k, m-k, 2)` and Dyck words in `D(m+1, k+1)`.

mod chain;
mod dyck;
mod partition;
mod plane;
mod rsk;
mod tableau;

pub use chain::{
    dyck_to_standard, matrix_to_pp, matrix_to_tableaux, matrix_transpose, pp_to_matrix, standard_to_dyck,
    transpose, verify_chain, ChainReport,
};
pub use dyck::{
    dyck_family, dyck_from_sequences, dyck_stats, dyck_to_pp, pp_to_dyck, DyckStats, DyckWord, Letter,
};
pub use partition::Partition;
pub use plane::{pp_to_tableaux, tableaux_to_pp, PlanePartition};
pub use rsk::{rsk, rsk_inverse};
pub use tableau::{gt_to_ssyt, ssyt_to_gt, GtPattern, Ssyt};
