//! Graded subgraphs of `Z^k`: membership, path counting and coefficient series.

mod dp;
mod hypotheses;
mod kind;
mod phi;

pub use dp::{count_paths_dp, count_paths_from};
pub use hypotheses::{check_coordinate_convex, check_minimum_closed, HypothesisReport};
pub use kind::GraphKind;
pub use phi::{
    boundary_monomials, coefficient_path_count, construct_phi, son, special_monomials, verify_phi_conditions,
    PhiSeries, PhiSource, Reversed,
};
