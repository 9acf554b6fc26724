use nalgebra::Complex;
use rand::Rng;

use super::density::TwoQubitDensity;
use super::linalg::CMat4;
use super::sum::exact_sum;
use crate::{Error, Real, Result};

/// Correlation triple `(c1, c2, c3)` of a Bell-diagonal state
/// `(I + Σ c_i σ_i ⊗ σ_i) / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
}

impl<T: Real> BlochVector<T> {
    pub fn new(c1: T, c2: T, c3: T) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn from_array(c: [T; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn to_array(self) -> [T; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Component along `axis` (0-based).
    pub fn get(self, axis: usize) -> T {
        self.to_array()[axis]
    }

    pub fn with(self, axis: usize, value: T) -> Self {
        let mut c = self.to_array();
        c[axis] = value;
        Self::from_array(c)
    }

    pub fn map(self, f: impl Fn(T) -> T) -> Self {
        Self::new(f(self.c1), f(self.c2), f(self.c3))
    }

    pub fn to_f64(self) -> BlochVector<f64> {
        BlochVector::new(self.c1.to_f64_lossy(), self.c2.to_f64_lossy(), self.c3.to_f64_lossy())
    }
}

/// Bell-basis spectrum `λ_ab`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenQuad<T> {
    pub l00: T,
    pub l01: T,
    pub l10: T,
    pub l11: T,
}

pub const EIGEN_LABELS: [&str; 4] = ["λ_00", "λ_01", "λ_10", "λ_11"];

impl<T: Real> EigenQuad<T> {
    pub fn to_array(self) -> [T; 4] {
        [self.l00, self.l01, self.l10, self.l11]
    }

    pub fn min(self) -> T {
        self.to_array().into_iter().fold(self.l00, |a, b| a.min(b))
    }

    pub fn sum(self) -> T {
        self.l00 + self.l01 + self.l10 + self.l11
    }

    /// Von Neumann entropy in bits of the spectrum, `0 log 0 = 0`.
    pub fn entropy(self) -> T {
        entropy_of(self.to_array())
    }
}

pub(crate) fn entropy_of<T: Real, const N: usize>(values: [T; N]) -> T {
    let mut s = T::zero();
    for l in values {
        if l > T::zero() {
            s -= l * l.log2();
        }
    }
    s
}

/// `|c_i|` sorted in descending order, with the permutation that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderedCorrelations<T> {
    pub sigma: [T; 3],
    /// `perm[r]` is the 0-based index of `c` whose magnitude sits at rank `r`.
    pub perm: [usize; 3],
}

impl<T: Real> OrderedCorrelations<T> {
    pub fn s1(&self) -> T {
        self.sigma[0]
    }
    pub fn s2(&self) -> T {
        self.sigma[1]
    }
    pub fn s3(&self) -> T {
        self.sigma[2]
    }
}

/// Density matrix of the Bell-diagonal state with correlations `c`.
///
/// No physicality check is made, so points outside the tetrahedron produce
/// matrices with negative eigenvalues.
pub fn bd_density<T: Real>(c: BlochVector<T>) -> TwoQubitDensity<T> {
    let q = T::lit(0.25);
    let one = T::one();
    let re = |x: T| Complex::new(x * q, T::zero());
    let mut m = CMat4::zeros();
    m[(0, 0)] = re(one + c.c3);
    m[(3, 3)] = re(one + c.c3);
    m[(1, 1)] = re(one - c.c3);
    m[(2, 2)] = re(one - c.c3);
    m[(0, 3)] = re(c.c1 - c.c2);
    m[(3, 0)] = re(c.c1 - c.c2);
    m[(1, 2)] = re(c.c1 + c.c2);
    m[(2, 1)] = re(c.c1 + c.c2);
    TwoQubitDensity::new_unchecked(m)
}

/// `λ_ab = [1 + (−1)^a c1 − (−1)^(a+b) c2 + (−1)^b c3] / 4`.
pub fn bd_eigenvalues<T: Real>(c: BlochVector<T>) -> EigenQuad<T> {
    let q = T::lit(0.25);
    let one = T::one();
    // correctly rounded, so the multiset is exactly invariant under
    // relabelings and tiny eigenvalues on the faces are consistent
    EigenQuad {
        l00: q * exact_sum([one, c.c1, -c.c2, c.c3]),
        l01: q * exact_sum([one, c.c1, c.c2, -c.c3]),
        l10: q * exact_sum([one, -c.c1, c.c2, c.c3]),
        l11: q * exact_sum([one, -c.c1, -c.c2, -c.c3]),
    }
}

pub fn is_physical<T: Real>(c: BlochVector<T>) -> bool {
    bd_eigenvalues(c).min() >= -T::physical_tol()
}

/// Like [`is_physical`], but names the most negative eigenvalue on failure.
pub fn check_physical<T: Real>(c: BlochVector<T>) -> Result<()> {
    let lambdas = bd_eigenvalues(c).to_array();
    let (idx, worst) = lambdas
        .iter()
        .enumerate()
        .fold((0, lambdas[0]), |acc, (i, &l)| if l < acc.1 { (i, l) } else { acc });
    if worst >= -T::physical_tol() {
        return Ok(());
    }
    let c = c.to_f64();
    Err(Error::Unphysical {
        c1: c.c1,
        c2: c.c2,
        c3: c.c3,
        label: EIGEN_LABELS[idx],
        value: worst.to_f64_lossy(),
    })
}

/// Uniform sample from the tetrahedron of physical states.
pub fn random_bd<T: Real>(rng: &mut impl Rng) -> BlochVector<T> {
    loop {
        let c = BlochVector::new(
            rng.random_range(-1.0f64..=1.0),
            rng.random_range(-1.0f64..=1.0),
            rng.random_range(-1.0f64..=1.0),
        );
        if is_physical(c) {
            return BlochVector::new(T::lit(c.c1), T::lit(c.c2), T::lit(c.c3));
        }
    }
}

pub fn ordered_sigma<T: Real>(c: BlochVector<T>) -> OrderedCorrelations<T> {
    let abs = c.to_array().map(|x| x.abs());
    let mut perm = [0usize, 1, 2];
    // stable: equal magnitudes keep their original index order
    perm.sort_by(|&a, &b| abs[b].partial_cmp(&abs[a]).unwrap_or(std::cmp::Ordering::Equal));
    OrderedCorrelations {
        sigma: perm.map(|i| abs[i]),
        perm,
    }
}
