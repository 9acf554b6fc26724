//! Profiles `f_Q(s)` taken by each measure along freezing trajectories.

use super::MeasureKind;
use crate::{Error, Real, Result};

fn xlog2x<T: Real>(x: T) -> T {
    if x > T::zero() {
        x * x.log2()
    } else {
        T::zero()
    }
}

/// Tabulated profile `f_Q(s)` for `s ∈ [0, 1]`.
///
/// The Bures entry is the tabulated expression
/// `1 + (1+√2)[1 − (√(1−s²) + 1)^{1/2}]`, which equals the square of the
/// Bures discord; [`frozen_value`] returns the discord itself.
pub fn frozen_profile<T: Real>(kind: MeasureKind, s: T) -> Result<T> {
    if !(s >= T::zero() && s <= T::one()) {
        return Err(Error::Domain(format!("profile argument {s} outside [0, 1]")));
    }
    let one = T::one();
    let root = (one - s * s).max(T::zero()).sqrt();
    Ok(match kind {
        MeasureKind::Discord | MeasureKind::Deficit | MeasureKind::RelativeEntropy => {
            T::lit(0.5) * (xlog2x(one + s) + xlog2x(one - s))
        }
        MeasureKind::AdjustedGeometric => (s * s + s * s) / (one + s * s),
        MeasureKind::TraceDistance | MeasureKind::NegativityOfQuantumness => s,
        MeasureKind::Bures => one + (one + T::lit(2.0).sqrt()) * (one - (root + one).sqrt()),
        MeasureKind::FidelityBased | MeasureKind::LocalQuantumUncertainty => one - root,
    })
}

/// Value of the measure itself along a freezing trajectory with parameter `s`.
pub fn frozen_value<T: Real>(kind: MeasureKind, s: T) -> Result<T> {
    let f = frozen_profile(kind, s)?;
    Ok(match kind {
        MeasureKind::Bures => f.max(T::zero()).sqrt(),
        _ => f,
    })
}
