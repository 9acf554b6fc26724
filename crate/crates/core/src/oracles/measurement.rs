//! Measurement-based definitions of discord and deficit, minimised over
//! projective measurements `{(I ± n·σ)/2} ⊗ I` on qubit A.

use nalgebra::Vector3;

use super::sphere::minimize_on_sphere;
use super::{OracleArgument, OracleResult, SearchBudget};
use crate::qcore::linalg::{hermitian_eigenvalues, hermitian_eigenvalues2, partial_trace_a, partial_trace_b, CMat4};
use crate::qcore::{dephase_a, TwoQubitDensity};
use crate::{Real, Result};

pub(crate) fn entropy4<T: Real>(m: &CMat4<T>) -> T {
    let l = hermitian_eigenvalues(m);
    entropy_bits(&[l[0], l[1], l[2], l[3]])
}

fn entropy2<T: Real>(m: &nalgebra::Matrix2<nalgebra::Complex<T>>) -> T {
    entropy_bits(&hermitian_eigenvalues2(m))
}

fn entropy_bits<T: Real>(values: &[T]) -> T {
    values
        .iter()
        .filter(|&&l| l > T::zero())
        .fold(T::zero(), |s, &l| s - l * l.log2())
}

/// Mutual information `S(ρ_A) + S(ρ_B) − S(ρ)`.
pub fn mutual_information<T: Real>(m: &CMat4<T>) -> T {
    entropy2(&partial_trace_b(m)) + entropy2(&partial_trace_a(m)) - entropy4(m)
}

/// Loss of mutual information caused by measuring A along `n`.
pub fn discord_objective<T: Real>(m: &CMat4<T>, n: &Vector3<T>) -> T {
    mutual_information(m) - mutual_information(&dephase_a(m, n))
}

/// Entropy produced by measuring A along `n`.
pub fn deficit_objective<T: Real>(m: &CMat4<T>, n: &Vector3<T>) -> T {
    entropy4(&dephase_a(m, n)) - entropy4(m)
}


/// Entropic discord by direct minimisation over measurement directions.
pub fn measurement_discord<T: Real>(rho: &TwoQubitDensity<T>, budget: &SearchBudget) -> Result<OracleResult<T>> {
    rho.validate()?;
    Ok(minimise(rho, budget, discord_objective))
}

/// One-way deficit by direct minimisation over measurement directions.
pub fn measurement_deficit<T: Real>(rho: &TwoQubitDensity<T>, budget: &SearchBudget) -> Result<OracleResult<T>> {
    rho.validate()?;
    Ok(minimise(rho, budget, deficit_objective))
}

fn minimise<T: Real>(
    rho: &TwoQubitDensity<T>,
    budget: &SearchBudget,
    objective: fn(&CMat4<T>, &Vector3<T>) -> T,
) -> OracleResult<T> {
    let m = *rho.matrix();
    let found = minimize_on_sphere(|n| objective(&m, n), budget);
    OracleResult {
        value: found.value,
        argument: OracleArgument::Direction(found.direction),
        converged: found.converged,
        evaluations: found.evaluations,
    }
}
