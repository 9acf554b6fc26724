use nalgebra::Vector3;

use crate::qcore::linalg::{bloch_operator, hermitian_deviation, identity2, kron, psd_sqrt, trace_product_re, CMat4};
use crate::qcore::TwoQubitDensity;
use crate::{Error, Real, Result};

/// Wigner–Yanase skew information `Tr[ρK² − √ρ K √ρ K]`.
pub fn skew_info<T: Real>(rho: &TwoQubitDensity<T>, k: &CMat4<T>) -> Result<T> {
    if hermitian_deviation(k) > T::state_tol() {
        return Err(Error::Domain("observable is not Hermitian".into()));
    }
    rho.validate()?;
    Ok(SkewReference::new(rho).skew_info(k))
}

/// Caches `ρ` and `√ρ` for repeated skew-information evaluations.
#[derive(Debug, Clone)]
pub struct SkewReference<T: Real> {
    rho: CMat4<T>,
    sqrt: CMat4<T>,
}

impl<T: Real> SkewReference<T> {
    pub fn new(rho: &TwoQubitDensity<T>) -> Self {
        Self {
            rho: *rho.matrix(),
            sqrt: psd_sqrt(rho.matrix()),
        }
    }

    pub fn skew_info(&self, k: &CMat4<T>) -> T {
        let k2 = k * k;
        let sk = self.sqrt * k;
        (trace_product_re(&self.rho, &k2) - trace_product_re(&sk, &sk)).max(T::zero())
    }

    /// Skew information of the local observable `(n·σ) ⊗ I`.
    pub fn local(&self, n: &Vector3<T>) -> T {
        self.skew_info(&local_observable(n))
    }
}

pub fn local_observable<T: Real>(n: &Vector3<T>) -> CMat4<T> {
    kron(&bloch_operator(n), &identity2())
}
