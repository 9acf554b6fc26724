//! Entropies, fidelity and the distance functionals on two-qubit states.

use super::density::TwoQubitDensity;
use super::linalg::{compose, expectation, hermitian_eigen, hermitian_eigenvalues, psd_factor, CMat4};
use super::state::entropy_of;
use crate::{Error, Real, Result};

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy<T: Real>(rho: &TwoQubitDensity<T>) -> Result<T> {
    let values = rho.eigenvalues();
    let min = values.min();
    if min < -T::domain_tol() {
        return Err(Error::Domain(format!("entropy of a matrix with eigenvalue {min}")));
    }
    Ok(entropy_of([values[0], values[1], values[2], values[3]]))
}

/// `H(s) = −s log2 s − (1−s) log2(1−s)`.
pub fn binary_entropy<T: Real>(s: T) -> Result<T> {
    if !(s >= T::zero() && s <= T::one()) {
        return Err(Error::Domain(format!("binary entropy argument {s} outside [0, 1]")));
    }
    Ok(entropy_of([s, T::one() - s]))
}

fn check_psd<T: Real>(rho: &TwoQubitDensity<T>, what: &str) -> Result<()> {
    rho.check_hermitian()?;
    let min = rho.min_eigenvalue();
    if min < -T::clamp_tol() {
        return Err(Error::Domain(format!("{what} has negative eigenvalue {min}")));
    }
    Ok(())
}

/// Uhlmann fidelity `{Tr[(√ρ σ √ρ)^{1/2}]}²`, clamped to `[0, 1]`.
pub fn fidelity<T: Real>(rho: &TwoQubitDensity<T>, sigma: &TwoQubitDensity<T>) -> Result<T> {
    check_psd(rho, "first argument")?;
    check_psd(sigma, "second argument")?;
    Ok(SqrtReference::new(rho).fidelity(sigma.matrix()))
}

/// Caches a square-root factor of `ρ` for repeated fidelity evaluations.
///
/// The fidelity is taken as `(‖B_ρ† B_σ‖₁)²` with `B B† = ρ`, a sum of
/// singular values, which stays accurate to rounding on rank-deficient
/// states where the eigenvalues of `√ρ σ √ρ` would lose half their digits.
#[derive(Debug, Clone)]
pub struct SqrtReference<T: Real> {
    factor_adjoint: CMat4<T>,
}

impl<T: Real> SqrtReference<T> {
    pub fn new(rho: &TwoQubitDensity<T>) -> Self {
        Self {
            factor_adjoint: psd_factor(rho.matrix()).adjoint(),
        }
    }

    /// Fidelity with `sigma`, assumed to be a valid density matrix.
    pub fn fidelity(&self, sigma: &CMat4<T>) -> T {
        let overlap = self.factor_adjoint * psd_factor(sigma);
        let root = overlap.singular_values().sum();
        (root * root).max(T::zero()).min(T::one())
    }
}

/// Unnormalised trace norm `‖ρ − σ‖₁`.
pub fn trace_distance<T: Real>(rho: &TwoQubitDensity<T>, sigma: &TwoQubitDensity<T>) -> Result<T> {
    rho.check_hermitian()?;
    sigma.check_hermitian()?;
    Ok(trace_norm(&(rho.matrix() - sigma.matrix())))
}

/// Trace norm of a Hermitian matrix: sum of absolute eigenvalues.
pub fn trace_norm<T: Real>(m: &CMat4<T>) -> T {
    hermitian_eigenvalues(m).iter().fold(T::zero(), |a, &x| a + x.abs())
}

/// `‖M‖₂² = Tr[M†M]`.
pub fn hs_norm_sq<T: Real>(m: &CMat4<T>) -> T {
    m.iter().fold(T::zero(), |a, z| a + z.norm_sqr())
}

/// Squared Hilbert–Schmidt distance `‖ρ − σ‖₂²`.
pub fn hs_distance_sq<T: Real>(rho: &TwoQubitDensity<T>, sigma: &TwoQubitDensity<T>) -> Result<T> {
    rho.check_hermitian()?;
    sigma.check_hermitian()?;
    Ok(hs_norm_sq(&(rho.matrix() - sigma.matrix())))
}

/// `S(ρ‖σ) = Tr[ρ(log2 ρ − log2 σ)]`; `+∞` when the support of `ρ` is not
/// contained in that of `σ`.
pub fn relative_entropy<T: Real>(rho: &TwoQubitDensity<T>, sigma: &TwoQubitDensity<T>) -> Result<T> {
    rho.check_hermitian()?;
    sigma.check_hermitian()?;
    let neg_entropy = -von_neumann_entropy(rho)?;
    let cross = cross_log_term(rho.matrix(), sigma.matrix());
    Ok(match cross {
        Some(x) => (neg_entropy - x).max(T::zero()),
        None => T::lit(f64::INFINITY),
    })
}

/// `Tr[ρ log2 σ]`, or `None` if `ρ` has weight outside the support of `σ`.
pub(crate) fn cross_log_term<T: Real>(rho: &CMat4<T>, sigma: &CMat4<T>) -> Option<T> {
    let (values, vectors) = hermitian_eigen(sigma);
    let mut acc = T::zero();
    for k in 0..4 {
        let weight = expectation(rho, &vectors, k);
        if values[k] <= T::clamp_tol() {
            if weight > T::clamp_tol() {
                return None;
            }
            continue;
        }
        acc += weight * values[k].log2();
    }
    Some(acc)
}

/// `log2` of a positive-definite Hermitian matrix.
pub fn log2_psd<T: Real>(m: &CMat4<T>) -> CMat4<T> {
    let (values, vectors) = hermitian_eigen(m);
    compose(&values.map(|x| x.max(T::min_value().unwrap_or(T::zero())).log2()), &vectors)
}
