use std::fmt::{Debug, Display};

use nalgebra::RealField;
use num_traits::ToPrimitive;

/// Scalar type the library computes in.
///
/// The tolerance hooks carry the thresholds used to validate states and to
/// clamp spectral noise; they are tight for `f64` and loosened for `f32`.
pub trait Real: RealField + Copy + ToPrimitive + Debug + Display + Send + Sync + 'static {
    /// Hermiticity and unit-trace tolerance of a valid density matrix.
    fn state_tol() -> Self;
    /// Eigenvalues within this distance below zero are treated as zero.
    fn clamp_tol() -> Self;
    /// Eigenvalues below minus this are a domain error for entropies.
    fn domain_tol() -> Self;
    /// Tolerance of the tetrahedron membership test.
    fn physical_tol() -> Self;

    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn state_tol() -> Self {
        1e-12
    }
    fn clamp_tol() -> Self {
        1e-10
    }
    fn domain_tol() -> Self {
        1e-8
    }
    fn physical_tol() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn state_tol() -> Self {
        1e-5
    }
    fn clamp_tol() -> Self {
        1e-5
    }
    fn domain_tol() -> Self {
        1e-4
    }
    fn physical_tol() -> Self {
        1e-6
    }
}
