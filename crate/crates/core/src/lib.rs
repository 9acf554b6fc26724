//! Quantum correlations of Bell-diagonal two-qubit states.
//!
//! The crate evaluates nine measures of discord-type correlations in closed
//! form, certifies them against brute-force optimisation oracles, evolves
//! states under local bit/phase flip channels and analyses the resulting
//! freezing of correlations, both dynamically and geometrically.
//!
//! All numerical code is generic over the scalar type through [`Real`];
//! `f64` is the reference precision and the `*64` aliases below fix it.

pub mod dynamics;
mod error;
pub mod geometry;
pub mod measures;
pub mod oracles;
pub mod qcore;
mod real;

pub use error::{Error, Result};
pub use real::Real;

pub use dynamics::{ChannelSpec, DecayProfile, FlipChannel, FreezingInit, SampledKernel, TrajectorySample};
pub use geometry::{ContourGrid, LineSpec};
pub use measures::{MeasureKind, MeasureReport};
pub use oracles::{OracleResult, SearchBudget};
pub use qcore::{BlochTriple, BlochVector, CQStateParams, EigenQuad, OrderedCorrelations, TwoQubitDensity};

pub type BlochVector64 = BlochVector<f64>;
pub type BlochVector32 = BlochVector<f32>;
pub type TwoQubitDensity64 = TwoQubitDensity<f64>;
pub type TwoQubitDensity32 = TwoQubitDensity<f32>;
pub type CQStateParams64 = CQStateParams<f64>;
pub type MeasureReport64 = MeasureReport<f64>;
pub type ChannelSpec64 = ChannelSpec<f64>;
pub type TrajectorySample64 = TrajectorySample<f64>;
pub type OracleResult64 = OracleResult<f64>;
pub type ContourGrid64 = ContourGrid<f64>;
pub type LineSpec64 = LineSpec<f64>;
