//! Brute-force optimisation over classical-quantum states.

use nalgebra::{Complex, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::local::{compass_polish, nelder_mead, LocalMinimum};
use super::measurement::entropy4;
use super::sphere::golden_section;
use super::{OracleArgument, OracleResult, SearchBudget};
use crate::qcore::linalg::CMat4;
use crate::qcore::{cross_log_term, hs_norm_sq, trace_norm, CQStateParams, SqrtReference, TwoQubitDensity};
use crate::{Error, Real, Result};

/// Distance to the classical-quantum set being minimised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CqMetric {
    /// `‖ρ − χ‖₁`
    Trace,
    /// `‖ρ − χ‖₂²`
    HilbertSchmidt,
    /// `S(ρ‖χ)`
    RelativeEntropy,
}

/// Weight of the maximally mixed state mixed into relative-entropy
/// candidates so that every candidate has full rank.
pub const RELATIVE_ENTROPY_REGULARISATION: f64 = 1e-9;

const PARAMS: usize = 9;
const SCREEN_EVALS: usize = 400;
const REFINED_STARTS: usize = 4;
const REFINE_EVALS: usize = 6000;

fn ball<T: Real>(v: [T; 3]) -> Vector3<T> {
    let v = Vector3::from(v);
    let r = v.norm();
    if r == T::zero() {
        v
    } else {
        v * (r.tanh() / r)
    }
}

/// Unconstrained coordinates of a CQ state: two angles of `e`, an angle
/// fixing `p = sin²`, and two unbounded vectors squashed into the unit ball.
pub(crate) fn decode<T: Real>(x: &[T]) -> CQStateParams<T> {
    let (theta, phi) = (x[0], x[1]);
    let e = Vector3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos());
    let p = x[2].sin() * x[2].sin();
    CQStateParams {
        e,
        p,
        r1: ball([x[3], x[4], x[5]]),
        r2: ball([x[6], x[7], x[8]]),
    }
}

fn random_coordinates<T: Real>(rng: &mut ChaCha8Rng) -> Vec<T> {
    let mut x = Vec::with_capacity(PARAMS);
    x.push(T::lit(rng.random_range(-1.0f64..1.0).acos()));
    x.push(T::lit(rng.random_range(0.0..std::f64::consts::TAU)));
    x.push(T::lit(rng.random_range(0.0..std::f64::consts::FRAC_PI_2)));
    for _ in 0..6 {
        x.push(T::lit(rng.random_range(-1.5..1.5)));
    }
    x
}

struct Objective<T: Real> {
    rho: CMat4<T>,
    metric: CqMetric,
    neg_entropy: T,
}

impl<T: Real> Objective<T> {
    fn new(rho: &TwoQubitDensity<T>, metric: CqMetric) -> Self {
        Self {
            rho: *rho.matrix(),
            metric,
            neg_entropy: -entropy4(rho.matrix()),
        }
    }

    fn eval(&self, params: &CQStateParams<T>) -> T {
        let chi = params.density_matrix();
        match self.metric {
            CqMetric::Trace => trace_norm(&(self.rho - chi)),
            CqMetric::HilbertSchmidt => hs_norm_sq(&(self.rho - chi)),
            CqMetric::RelativeEntropy => {
                let eps = T::lit(RELATIVE_ENTROPY_REGULARISATION);
                let mixed = CMat4::identity() * Complex::new(eps * T::lit(0.25), T::zero());
                let regular = chi * Complex::new(T::one() - eps, T::zero()) + mixed;
                match cross_log_term(&self.rho, &regular) {
                    Some(cross) => self.neg_entropy - cross,
                    None => T::lit(f64::INFINITY),
                }
            }
        }
    }
}

/// Minimum of `metric(ρ, χ)` over classical-quantum `χ`, by seeded
/// multistart Nelder–Mead followed by a compass-search polish.
pub fn min_distance_cq<T: Real>(
    rho: &TwoQubitDensity<T>,
    metric: CqMetric,
    budget: &SearchBudget,
) -> Result<OracleResult<T>> {
    rho.validate()?;
    let objective = Objective::new(rho, metric);
    let mut f = |x: &[T]| objective.eval(&decode(x));
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let tol = T::lit(budget.tolerance);

    let mut screened: Vec<(usize, LocalMinimum<T>)> = (0..budget.starts.max(1))
        .map(|i| {
            let x0 = random_coordinates::<T>(&mut rng);
            (i, nelder_mead(&mut f, &x0, T::lit(0.3), SCREEN_EVALS, tol))
        })
        .collect();
    let mut evaluations: usize = screened.iter().map(|(_, m)| m.evaluations).sum();
    screened.sort_by(|a, b| {
        a.1.value
            .partial_cmp(&b.1.value)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.0.cmp(&b.0))
    });

    let mut best: Option<LocalMinimum<T>> = None;
    for (_, start) in screened.into_iter().take(REFINED_STARTS) {
        // restart the simplex around the current point until it stops moving
        let mut current = start;
        let mut step = T::lit(0.1);
        for _ in 0..4 {
            let next = nelder_mead(&mut f, &current.x, step, REFINE_EVALS, tol);
            evaluations += next.evaluations;
            let moved = current.value - next.value;
            current = LocalMinimum { evaluations: 0, ..next };
            if moved <= tol {
                break;
            }
            step *= T::lit(0.3);
        }
        let polished = compass_polish(&mut f, current, T::lit(1e-2), T::lit(1e-10), 20_000);
        evaluations += polished.evaluations;
        if best.as_ref().is_none_or(|b| polished.value < b.value) {
            best = Some(polished);
        }
    }
    let best = best.expect("at least one start");
    Ok(OracleResult {
        value: best.value,
        argument: OracleArgument::Cq(decode(&best.x)),
        converged: best.converged,
        evaluations,
    })
}

/// Outcome of [`fmax_cq_search`].
#[derive(Debug, Clone, PartialEq)]
pub struct FmaxSearch<T: Real> {
    /// Best fidelity within the Bell-diagonal CQ family.
    pub result: OracleResult<T>,
    /// Best fidelity among the random general CQ samples.
    pub sampled_best: T,
    pub sampled_argument: Option<CQStateParams<T>>,
}

/// Allowed excess of a random CQ sample over the Bell-diagonal optimum.
pub const FMAX_CERTIFICATE_TOLERANCE: f64 = 1e-6;

/// Uniformly distributed classical-quantum state.
pub fn random_cq_params<T: Real>(rng: &mut impl Rng) -> CQStateParams<T> {
    let mut unit = || loop {
        let v = Vector3::new(
            rng.random_range(-1.0f64..1.0),
            rng.random_range(-1.0f64..1.0),
            rng.random_range(-1.0f64..1.0),
        );
        if v.norm_squared() <= 1.0 {
            return v;
        }
    };
    let e = loop {
        let v = unit();
        if v.norm() > 1e-3 {
            break v.normalize();
        }
    };
    let r1 = unit();
    let r2 = unit();
    let p = rng.random_range(0.0..=1.0);
    CQStateParams {
        e: e.map(T::lit),
        p: T::lit(p),
        r1: r1.map(T::lit),
        r2: r2.map(T::lit),
    }
}

/// Maximal fidelity between `ρ` and a classical-quantum state.
///
/// Phase one maximises over the one-parameter Bell-diagonal CQ family along
/// each axis; phase two draws `budget.random_samples` general CQ states and
/// fails if any beats phase one by more than [`FMAX_CERTIFICATE_TOLERANCE`].
pub fn fmax_cq_search<T: Real>(rho: &TwoQubitDensity<T>, budget: &SearchBudget) -> Result<FmaxSearch<T>> {
    rho.validate()?;
    let reference = SqrtReference::new(rho);
    let mut evaluations = 0;
    let mut best: Option<(T, CQStateParams<T>)> = None;
    for axis in 0..3 {
        let mut g = |s: T| {
            evaluations += 1;
            -reference.fidelity(&CQStateParams::bd_axis(axis, s).density_matrix())
        };
        let (s, neg) = golden_section(&mut g, -T::one(), T::one(), 90);
        let mut candidates = vec![(s, -neg)];
        for edge in [-T::one(), T::one()] {
            candidates.push((edge, -g(edge)));
        }
        for (s, f) in candidates {
            if best.as_ref().is_none_or(|b| f > b.0) {
                best = Some((f, CQStateParams::bd_axis(axis, s)));
            }
        }
    }
    let (family_best, family_arg) = best.expect("three axes searched");

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut sampled_best = T::zero();
    let mut sampled_argument = None;
    for _ in 0..budget.random_samples {
        let params = random_cq_params::<T>(&mut rng);
        let f = reference.fidelity(&params.density_matrix());
        evaluations += 1;
        if f > sampled_best {
            sampled_best = f;
            sampled_argument = Some(params);
        }
    }
    if sampled_best > family_best + T::lit(FMAX_CERTIFICATE_TOLERANCE) {
        return Err(Error::CertificationFailed(format!(
            "general CQ sample reaches fidelity {sampled_best}, above the Bell-diagonal optimum {family_best}"
        )));
    }
    Ok(FmaxSearch {
        result: OracleResult {
            value: family_best,
            argument: OracleArgument::Cq(family_arg),
            converged: true,
            evaluations,
        },
        sampled_best,
        sampled_argument,
    })
}
