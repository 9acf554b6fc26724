//! State algebra for two qubits: Bell-diagonal states, classical-quantum
//! states, and the entropic and distance functionals built on them.

mod cq;
mod density;
mod info;
pub mod linalg;
mod state;
mod sum;

pub use cq::{cq_density, dephase_a, CQStateParams};
pub use density::{BlochTriple, TwoQubitDensity};
pub use info::{
    binary_entropy, fidelity, hs_distance_sq, hs_norm_sq, log2_psd, relative_entropy, trace_distance, trace_norm,
    von_neumann_entropy, SqrtReference,
};
pub(crate) use info::cross_log_term;
pub use sum::exact_sum;
pub use state::{
    bd_density, bd_eigenvalues, check_physical, is_physical, ordered_sigma, random_bd, BlochVector, EigenQuad,
    OrderedCorrelations, EIGEN_LABELS,
};
