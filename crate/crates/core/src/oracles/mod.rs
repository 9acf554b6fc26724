//! Independent brute-force certifiers for the closed-form measures.

mod budget;
mod cq_search;
mod local;
mod measurement;
pub mod sphere;
mod skew;

pub use budget::{OracleArgument, OracleResult, SearchBudget};
pub use cq_search::{
    fmax_cq_search, min_distance_cq, random_cq_params, CqMetric, FmaxSearch, FMAX_CERTIFICATE_TOLERANCE,
    RELATIVE_ENTROPY_REGULARISATION,
};
pub use measurement::{deficit_objective, discord_objective, measurement_deficit, measurement_discord, mutual_information};
pub use skew::{local_observable, skew_info, SkewReference};
