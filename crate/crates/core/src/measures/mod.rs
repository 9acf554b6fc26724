//! Closed-form correlation measures on Bell-diagonal states.

pub mod closed;
mod kind;
mod lqu;
mod profile;
mod report;

pub use closed::{
    adjusted_geometric, bures_discord, discord_entropic, fidelity_discord, fidelity_discord_min_form, fmax_bd,
    lqu_bd, negativity_of_quantumness, one_way_deficit, relative_entropy_discord, trace_distance_discord,
};
pub use kind::{IdentityGroup, MeasureKind};
pub use lqu::{lqu_general, lqu_general_with};
pub use profile::{frozen_profile, frozen_value};
pub use report::{evaluate, evaluate_all, evaluate_kinds, MeasureReport};
