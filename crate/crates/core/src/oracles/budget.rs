use nalgebra::Vector3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qcore::CQStateParams;

/// Effort and seeding of a brute-force search.
///
/// Equal budgets produce bit-identical results on the same platform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    /// Points of the coarse Fibonacci grid on the sphere.
    pub coarse_grid_points: usize,
    /// Golden-section iterations per line search.
    pub refinement_iterations: usize,
    pub seed: u64,
    /// Improvement below which a local refinement counts as converged.
    pub tolerance: f64,
    /// Random starting points of multistart searches.
    pub starts: usize,
    /// Random states drawn when sampling for a certificate.
    pub random_samples: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            coarse_grid_points: 400,
            refinement_iterations: 30,
            seed: 0x5eed_f00d,
            tolerance: 1e-12,
            starts: 64,
            random_samples: 10_000,
        }
    }
}

impl SearchBudget {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    /// Generator used by every seeded search with this budget.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Where an oracle found its optimum.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleArgument<T: crate::Real> {
    /// Measurement direction on qubit A.
    Direction(Vector3<T>),
    Cq(CQStateParams<T>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult<T: crate::Real> {
    pub value: T,
    pub argument: OracleArgument<T>,
    pub converged: bool,
    pub evaluations: usize,
}
