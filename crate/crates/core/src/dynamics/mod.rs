//! Evolution of Bell-diagonal states under local flip channels and the
//! freezing of correlations along it.

mod channel;
mod detect;
mod freezing;
mod trajectory;

pub use channel::{evolve_c, ChannelSpec, DecayProfile, FlipChannel, SampledKernel};
pub use detect::{detect_freezing, FreezingInterval, DEFAULT_FREEZING_TOLERANCE};
pub use freezing::{freezing_initial, freezing_parameter, predicted_measure, threshold_time, FreezingInit};
pub use trajectory::{time_grid, trajectory, TrajectorySample};
