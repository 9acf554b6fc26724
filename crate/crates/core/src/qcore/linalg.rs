//! Small dense complex linear algebra on two-qubit operators.

use nalgebra::{Complex, ComplexField, Matrix2, Matrix4, SymmetricEigen, Vector3, Vector4};

use crate::Real;

pub type CMat2<T> = Matrix2<Complex<T>>;
pub type CMat4<T> = Matrix4<Complex<T>>;

pub(crate) fn c<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// Pauli matrix `σ_axis` for `axis` in `0..3` (x, y, z).
pub fn pauli<T: Real>(axis: usize) -> CMat2<T> {
    let o = T::zero();
    let l = T::one();
    match axis {
        0 => Matrix2::new(c(o), c(l), c(l), c(o)),
        1 => Matrix2::new(c(o), Complex::new(o, -l), Complex::new(o, l), c(o)),
        2 => Matrix2::new(c(l), c(o), c(o), c(-l)),
        _ => panic!("pauli axis {axis} out of range"),
    }
}

pub fn identity2<T: Real>() -> CMat2<T> {
    Matrix2::identity()
}

/// `n · σ` for a real 3-vector `n`.
pub fn bloch_operator<T: Real>(n: &Vector3<T>) -> CMat2<T> {
    pauli::<T>(0) * c(n[0]) + pauli::<T>(1) * c(n[1]) + pauli::<T>(2) * c(n[2])
}

/// `(I + r · σ) / 2`, the qubit state with Bloch vector `r`.
pub fn qubit_state<T: Real>(r: &Vector3<T>) -> CMat2<T> {
    (identity2::<T>() + bloch_operator(r)) * c(T::lit(0.5))
}

pub fn kron<T: Real>(a: &CMat2<T>, b: &CMat2<T>) -> CMat4<T> {
    let mut out = CMat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// `σ_i ⊗ σ_j`, with `None` standing for the identity on that factor.
pub fn pauli_product<T: Real>(a: Option<usize>, b: Option<usize>) -> CMat4<T> {
    let fa = a.map_or_else(identity2, pauli);
    let fb = b.map_or_else(identity2, pauli);
    kron(&fa, &fb)
}

pub fn trace<T: Real>(m: &CMat4<T>) -> Complex<T> {
    m[(0, 0)] + m[(1, 1)] + m[(2, 2)] + m[(3, 3)]
}

/// `Re Tr(a b)` without forming the product.
pub fn trace_product_re<T: Real>(a: &CMat4<T>, b: &CMat4<T>) -> T {
    let mut acc = T::zero();
    for i in 0..4 {
        for k in 0..4 {
            let x = a[(i, k)] * b[(k, i)];
            acc += x.re;
        }
    }
    acc
}

/// Largest elementwise deviation from Hermiticity.
pub fn hermitian_deviation<T: Real>(m: &CMat4<T>) -> T {
    let mut worst = T::zero();
    for i in 0..4 {
        for j in i..4 {
            let d = (m[(i, j)] - m[(j, i)].conj()).modulus();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Spectral decomposition of a Hermitian matrix.
pub fn hermitian_eigen<T: Real>(m: &CMat4<T>) -> (Vector4<T>, CMat4<T>) {
    let eig = SymmetricEigen::new(*m);
    (eig.eigenvalues, eig.eigenvectors)
}

pub fn hermitian_eigenvalues<T: Real>(m: &CMat4<T>) -> Vector4<T> {
    m.symmetric_eigenvalues()
}

/// `V diag(f(λ)) V†` for Hermitian `m`.
pub fn hermitian_function<T: Real>(m: &CMat4<T>, f: impl Fn(T) -> T) -> CMat4<T> {
    let (values, vectors) = hermitian_eigen(m);
    compose(&values.map(f), &vectors)
}

pub(crate) fn compose<T: Real>(values: &Vector4<T>, vectors: &CMat4<T>) -> CMat4<T> {
    let mut scaled = *vectors;
    for (k, mut col) in scaled.column_iter_mut().enumerate() {
        col *= c(values[k]);
    }
    scaled * vectors.adjoint()
}

/// Expectation `⟨v|m|v⟩` (real part) for column `k` of `vectors`.
pub(crate) fn expectation<T: Real>(m: &CMat4<T>, vectors: &CMat4<T>, k: usize) -> T {
    let v = vectors.column(k);
    (v.adjoint() * m * v)[(0, 0)].re
}

/// Hermitian square root with eigenvalues below the clamp tolerance set to zero.
pub fn psd_sqrt<T: Real>(m: &CMat4<T>) -> CMat4<T> {
    hermitian_function(m, |x| if x > T::zero() { x.sqrt() } else { T::zero() })
}

/// Factor `B = V diag(√λ)` with `B B† = m` for positive semidefinite `m`.
///
/// Eigenvalues at the rounding floor are set to zero so that null
/// directions contribute nothing downstream.
pub fn psd_factor<T: Real>(m: &CMat4<T>) -> CMat4<T> {
    let (values, mut vectors) = hermitian_eigen(m);
    let floor = T::lit(16.0) * T::default_epsilon() * values.amax();
    for (k, mut col) in vectors.column_iter_mut().enumerate() {
        let x = values[k];
        col *= c(if x > floor { x.sqrt() } else { T::zero() });
    }
    vectors
}

pub fn partial_trace_b<T: Real>(m: &CMat4<T>) -> CMat2<T> {
    Matrix2::new(
        m[(0, 0)] + m[(1, 1)],
        m[(0, 2)] + m[(1, 3)],
        m[(2, 0)] + m[(3, 1)],
        m[(2, 2)] + m[(3, 3)],
    )
}

pub fn partial_trace_a<T: Real>(m: &CMat4<T>) -> CMat2<T> {
    Matrix2::new(
        m[(0, 0)] + m[(2, 2)],
        m[(0, 1)] + m[(2, 3)],
        m[(1, 0)] + m[(3, 2)],
        m[(1, 1)] + m[(3, 3)],
    )
}

/// Eigenvalues of a Hermitian 2×2 matrix, ascending.
pub fn hermitian_eigenvalues2<T: Real>(m: &CMat2<T>) -> [T; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)].modulus();
    let mean = (a + d) * T::lit(0.5);
    let half = (a - d) * T::lit(0.5);
    let r = (half * half + b * b).sqrt();
    [mean - r, mean + r]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let x = pauli::<f64>(0);
        let y = pauli::<f64>(1);
        let z = pauli::<f64>(2);
        let i = Complex::new(0.0, 1.0);
        assert!(((x * y) - z * i).norm() < 1e-15);
        assert!(((x * x) - identity2::<f64>()).norm() < 1e-15);
    }

    #[test]
    fn kron_ordering_is_a_major() {
        let z = pauli::<f64>(2);
        let zi = kron(&z, &identity2());
        let diag: Vec<f64> = (0..4).map(|k| zi[(k, k)].re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn sqrt_squares_back() {
        let m = pauli_product::<f64>(Some(0), Some(0)) * c(0.25) + CMat4::identity() * c(0.25);
        let r = psd_sqrt(&m);
        assert!((r * r - m).norm() < 1e-14);
    }

    #[test]
    fn partial_traces_of_product() {
        let a = qubit_state(&Vector3::new(0.1, 0.2, 0.3));
        let b = qubit_state(&Vector3::new(-0.4, 0.0, 0.5));
        let ab = kron(&a, &b);
        assert!((partial_trace_b(&ab) - a).norm() < 1e-15);
        assert!((partial_trace_a(&ab) - b).norm() < 1e-15);
    }
}
