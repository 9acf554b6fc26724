//! Derivative-free local minimisers used by the multistart searches.

use crate::Real;

pub(crate) struct LocalMinimum<T> {
    pub x: Vec<T>,
    pub value: T,
    pub evaluations: usize,
    pub converged: bool,
}

/// Nelder–Mead with the standard coefficients, started from an axis-aligned
/// simplex of edge `step` around `x0`.
pub(crate) fn nelder_mead<T: Real>(
    f: &mut impl FnMut(&[T]) -> T,
    x0: &[T],
    step: T,
    max_evals: usize,
    ftol: T,
) -> LocalMinimum<T> {
    let n = x0.len();
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let mut evals = 0;
    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    let mut eval = |x: &[T], evals: &mut usize| {
        *evals += 1;
        f(x)
    };
    simplex.push((x0.to_vec(), eval(x0, &mut evals)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let v = eval(&x, &mut evals);
        simplex.push((x, v));
    }
    let mut converged = false;
    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let best = simplex[0].1;
        let worst = simplex[n].1;
        if (worst - best).abs() <= ftol {
            converged = true;
            break;
        }
        let mut centroid = vec![T::zero(); n];
        for (x, _) in &simplex[..n] {
            for (c, &xi) in centroid.iter_mut().zip(x) {
                *c += xi;
            }
        }
        let scale = T::one() / T::lit(n as f64);
        centroid.iter_mut().for_each(|c| *c *= scale);
        let along = |t: T| -> Vec<T> {
            centroid
                .iter()
                .zip(&simplex[n].0)
                .map(|(&c, &w)| c + t * (w - c))
                .collect()
        };
        let reflected = along(-T::one());
        let fr = eval(&reflected, &mut evals);
        if fr < best {
            let expanded = along(-two);
            let fe = eval(&expanded, &mut evals);
            simplex[n] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let contracted = if fr < worst { along(-half) } else { along(half) };
            let fc = eval(&contracted, &mut evals);
            if fc < worst.min(fr) {
                simplex[n] = (contracted, fc);
            } else {
                let anchor = simplex[0].0.clone();
                for entry in simplex.iter_mut().skip(1) {
                    let x: Vec<T> = anchor.iter().zip(&entry.0).map(|(&a, &b)| a + half * (b - a)).collect();
                    let v = eval(&x, &mut evals);
                    *entry = (x, v);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    let (x, value) = simplex.swap_remove(0);
    LocalMinimum {
        x,
        value,
        evaluations: evals,
        converged,
    }
}

/// Compass search: poll `±step` along every coordinate, halve on failure.
pub(crate) fn compass_polish<T: Real>(
    f: &mut impl FnMut(&[T]) -> T,
    start: LocalMinimum<T>,
    step: T,
    min_step: T,
    max_evals: usize,
) -> LocalMinimum<T> {
    let LocalMinimum {
        mut x,
        mut value,
        mut evaluations,
        ..
    } = start;
    let mut h = step;
    let mut used = 0;
    while h > min_step && used < max_evals {
        let mut improved = false;
        for i in 0..x.len() {
            for sign in [T::one(), -T::one()] {
                let mut trial = x.clone();
                trial[i] += sign * h;
                used += 1;
                let v = f(&trial);
                if v < value {
                    x = trial;
                    value = v;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            h *= T::lit(0.5);
        }
    }
    evaluations += used;
    LocalMinimum {
        x,
        value,
        evaluations,
        converged: h <= min_step,
    }
}
