use nalgebra::{Complex, Matrix3, Vector3, Vector4};

use super::linalg::{self, hermitian_deviation, pauli_product, trace, trace_product_re, CMat4};
use crate::{Error, Real, Result};

/// A two-qubit density matrix in the basis `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitDensity<T: Real>(CMat4<T>);

impl<T: Real> TwoQubitDensity<T> {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: CMat4<T>) -> Result<Self> {
        let rho = Self(m);
        rho.validate()?;
        Ok(rho)
    }

    pub fn new_unchecked(m: CMat4<T>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &CMat4<T> {
        &self.0
    }

    pub fn into_matrix(self) -> CMat4<T> {
        self.0
    }

    pub fn check_hermitian(&self) -> Result<()> {
        let dev = hermitian_deviation(&self.0);
        if dev > T::state_tol() {
            return Err(Error::InvalidDensity(format!("not Hermitian (deviation {dev})")));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_hermitian()?;
        let tr = trace(&self.0);
        if (tr.re - T::one()).abs() > T::state_tol() || tr.im.abs() > T::state_tol() {
            return Err(Error::InvalidDensity(format!("trace {tr} differs from 1")));
        }
        let min = self.min_eigenvalue();
        if min < -T::clamp_tol() {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min}")));
        }
        Ok(())
    }

    pub fn eigenvalues(&self) -> Vector4<T> {
        linalg::hermitian_eigenvalues(&self.0)
    }

    pub fn min_eigenvalue(&self) -> T {
        self.eigenvalues().min()
    }

    pub fn purity(&self) -> T {
        trace_product_re(&self.0, &self.0)
    }

    /// Local Bloch vectors and correlation matrix of the state.
    pub fn bloch_triple(&self) -> BlochTriple<T> {
        let expect = |a, b| trace_product_re(&self.0, &pauli_product(a, b));
        BlochTriple {
            x: Vector3::from_fn(|i, _| expect(Some(i), None)),
            y: Vector3::from_fn(|i, _| expect(None, Some(i))),
            t: Matrix3::from_fn(|i, j| expect(Some(i), Some(j))),
        }
    }

    /// The state with the given Bloch triple; not validated.
    pub fn from_bloch_triple(triple: &BlochTriple<T>) -> Self {
        let mut m = CMat4::identity();
        let re = |v: T| Complex::new(v, T::zero());
        for i in 0..3 {
            m += pauli_product(Some(i), None) * re(triple.x[i]);
            m += pauli_product(None, Some(i)) * re(triple.y[i]);
            for j in 0..3 {
                m += pauli_product(Some(i), Some(j)) * re(triple.t[(i, j)]);
            }
        }
        Self(m * re(T::lit(0.25)))
    }
}

/// Bloch representation `{x, y, T}` of a two-qubit state:
/// `ρ = (I + Σ x_i σ_i⊗I + Σ y_i I⊗σ_i + Σ T_ij σ_i⊗σ_j) / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochTriple<T: Real> {
    pub x: Vector3<T>,
    pub y: Vector3<T>,
    pub t: Matrix3<T>,
}

impl<T: Real> BlochTriple<T> {
    /// Same correlation matrix with both local vectors removed.
    pub fn without_local_vectors(&self) -> Self {
        Self {
            x: Vector3::zeros(),
            y: Vector3::zeros(),
            t: self.t,
        }
    }
}
