//! Minimisation of smooth functions over the unit sphere: a Fibonacci grid
//! followed by cyclic golden-section searches in the tangent plane.

use nalgebra::Vector3;

use super::SearchBudget;
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereMinimum<T: Real> {
    pub direction: Vector3<T>,
    pub value: T,
    pub converged: bool,
    pub evaluations: usize,
}

/// `n` nearly uniform points on the unit sphere.
pub fn fibonacci_sphere<T: Real>(n: usize) -> Vec<Vector3<T>> {
    let golden_angle = T::pi() * (T::lit(3.0) - T::lit(5.0).sqrt());
    let count = T::lit(n as f64);
    (0..n)
        .map(|k| {
            let kf = T::lit(k as f64);
            let z = T::one() - (kf + kf + T::one()) / count;
            let r = (T::one() - z * z).max(T::zero()).sqrt();
            let phi = golden_angle * kf;
            Vector3::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}

/// Golden-section search for a minimum of `g` on `[lo, hi]`.
pub fn golden_section<T: Real>(g: &mut impl FnMut(T) -> T, lo: T, hi: T, iterations: usize) -> (T, T) {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = g(x1);
    let mut f2 = g(x2);
    for _ in 0..iterations {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = g(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn tangent_basis<T: Real>(n: &Vector3<T>) -> (Vector3<T>, Vector3<T>) {
    let helper = if n.x.abs() < T::lit(0.9) { Vector3::x() } else { Vector3::y() };
    let t1 = n.cross(&helper).normalize();
    let t2 = n.cross(&t1);
    (t1, t2)
}

const REFINED_CANDIDATES: usize = 4;
const MAX_SWEEPS: usize = 200;

pub fn minimize_on_sphere<T: Real>(f: impl Fn(&Vector3<T>) -> T, budget: &SearchBudget) -> SphereMinimum<T> {
    let grid = fibonacci_sphere::<T>(budget.coarse_grid_points.max(4));
    let mut evaluations = 0;
    let mut scored: Vec<(T, usize)> = grid
        .iter()
        .enumerate()
        .map(|(i, n)| {
            evaluations += 1;
            (f(n), i)
        })
        .collect();
    scored.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal).then(a.1.cmp(&b.1)));

    let spacing = (T::lit(4.0) * T::pi() / T::lit(grid.len() as f64)).sqrt();
    let tol = T::lit(budget.tolerance);
    let mut best: Option<SphereMinimum<T>> = None;
    for &(start_value, idx) in scored.iter().take(REFINED_CANDIDATES) {
        let mut n = grid[idx];
        let mut value = start_value;
        let mut h = spacing + spacing;
        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            let before = value;
            let (t1, t2) = tangent_basis(&n);
            let mut largest_step = T::zero();
            for axis in [t1, t2] {
                let base = n;
                let mut g = |u: T| {
                    evaluations += 1;
                    f(&(base + axis * u).normalize())
                };
                let (u, gu) = golden_section(&mut g, -h, h, budget.refinement_iterations);
                if gu < value {
                    n = (base + axis * u).normalize();
                    value = gu;
                    largest_step = largest_step.max(u.abs());
                }
            }
            let improvement = before - value;
            if improvement <= tol && largest_step < h * T::lit(0.5) {
                converged = true;
                break;
            }
            h = (largest_step * T::lit(3.0)).max(h * T::lit(1e-3)).min(h);
        }
        let candidate = SphereMinimum {
            direction: n,
            value,
            converged,
            evaluations: 0,
        };
        if best.is_none_or(|b| candidate.value < b.value) {
            best = Some(candidate);
        }
    }
    let mut best = best.expect("grid is non-empty");
    best.evaluations = evaluations;
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_on_sphere() {
        let grid = fibonacci_sphere::<f64>(400);
        assert_eq!(grid.len(), 400);
        assert!(grid.iter().all(|n| (n.norm() - 1.0).abs() < 1e-14));
        let mean: Vector3<f64> = grid.iter().sum::<Vector3<f64>>() / 400.0;
        assert!(mean.norm() < 1e-2);
    }

    #[test]
    fn golden_section_finds_parabola_minimum() {
        let mut g = |x: f64| (x - 0.3) * (x - 0.3);
        let (x, _) = golden_section(&mut g, -1.0, 1.0, 60);
        assert!((x - 0.3).abs() < 1e-9);
    }

    #[test]
    fn finds_quadratic_form_minimum() {
        // minimum of nᵀAn is the smallest eigenvalue, attained off-grid
        let target = Vector3::new(0.3, -0.5, 0.8).normalize();
        let f = |n: &Vector3<f64>| 1.0 - n.dot(&target).powi(2) + 0.2 * n.x * n.x;
        let m = minimize_on_sphere(f, &SearchBudget::default());
        let brute = {
            let mut best = f64::INFINITY;
            for n in fibonacci_sphere::<f64>(200_000) {
                best = best.min(f(&n));
            }
            best
        };
        assert!(m.converged);
        assert!(m.value <= brute + 1e-9);
        assert!(brute - m.value < 1e-4);
    }
}
