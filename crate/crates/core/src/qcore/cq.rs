use nalgebra::{Complex, Vector3};

use super::density::{BlochTriple, TwoQubitDensity};
use super::linalg::{kron, qubit_state, CMat4};
use crate::{Error, Real, Result};

/// Classical-quantum state `p P(e) ⊗ ρ1 + (1−p) P(−e) ⊗ ρ2`, where
/// `P(±e) = (I ± e·σ)/2` and `ρ_k = (I + r_k·σ)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CQStateParams<T: Real> {
    pub e: Vector3<T>,
    pub p: T,
    pub r1: Vector3<T>,
    pub r2: Vector3<T>,
}

impl<T: Real> CQStateParams<T> {
    pub fn new(e: Vector3<T>, p: T, r1: Vector3<T>, r2: Vector3<T>) -> Result<Self> {
        let params = Self { e, p, r1, r2 };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let tol = T::lit(1e-10).max(T::physical_tol());
        if (self.e.norm() - T::one()).abs() > tol {
            return Err(Error::InvalidCqParams(format!("|e| = {} is not 1", self.e.norm())));
        }
        if self.p < T::zero() || self.p > T::one() {
            return Err(Error::InvalidCqParams(format!("weight p = {} outside [0, 1]", self.p)));
        }
        for (name, r) in [("r1", &self.r1), ("r2", &self.r2)] {
            if r.norm() > T::one() + tol {
                return Err(Error::InvalidCqParams(format!("|{name}| = {} exceeds 1", r.norm())));
            }
        }
        Ok(())
    }

    /// The Bell-diagonal CQ state with correlations `s` along `axis` only.
    pub fn bd_axis(axis: usize, s: T) -> Self {
        let mut e = Vector3::zeros();
        e[axis] = T::one();
        Self {
            e,
            p: T::lit(0.5),
            r1: e * s,
            r2: -e * s,
        }
    }

    pub fn density_matrix(&self) -> CMat4<T> {
        let pa = qubit_state(&self.e);
        let ma = qubit_state(&(-self.e));
        let w = |x: T| Complex::new(x, T::zero());
        kron(&pa, &qubit_state(&self.r1)) * w(self.p)
            + kron(&ma, &qubit_state(&self.r2)) * w(T::one() - self.p)
    }

    /// `{(2p−1)e, s+, e s−ᵀ}` with `s± = p r1 ± (1−p) r2`.
    pub fn bloch_triple(&self) -> BlochTriple<T> {
        let q = T::one() - self.p;
        let s_plus = self.r1 * self.p + self.r2 * q;
        let s_minus = self.r1 * self.p - self.r2 * q;
        BlochTriple {
            x: self.e * (self.p + self.p - T::one()),
            y: s_plus,
            t: self.e * s_minus.transpose(),
        }
    }
}

pub fn cq_density<T: Real>(params: &CQStateParams<T>) -> Result<TwoQubitDensity<T>> {
    params.validate()?;
    Ok(TwoQubitDensity::new_unchecked(params.density_matrix()))
}

/// Applies the projective measurement `{P(e), P(−e)} ⊗ I` on qubit A.
pub fn dephase_a<T: Real>(m: &CMat4<T>, e: &Vector3<T>) -> CMat4<T> {
    let id = nalgebra::Matrix2::identity();
    let plus = kron(&qubit_state(e), &id);
    let minus = kron(&qubit_state(&(-e)), &id);
    plus * m * plus + minus * m * minus
}
