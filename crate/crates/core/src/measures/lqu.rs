use crate::oracles::sphere::minimize_on_sphere;
use crate::oracles::{SearchBudget, SkewReference};
use crate::qcore::TwoQubitDensity;
use crate::{Real, Result};

/// Local quantum uncertainty of an arbitrary two-qubit state: the smallest
/// skew information of a local observable `(n·σ) ⊗ I` on qubit A.
pub fn lqu_general<T: Real>(rho: &TwoQubitDensity<T>) -> Result<T> {
    lqu_general_with(rho, &SearchBudget::default())
}

pub fn lqu_general_with<T: Real>(rho: &TwoQubitDensity<T>, budget: &SearchBudget) -> Result<T> {
    rho.validate()?;
    let reference = SkewReference::new(rho);
    Ok(minimize_on_sphere(|n| reference.local(n), budget).value)
}
