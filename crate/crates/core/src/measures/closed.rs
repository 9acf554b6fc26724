//! Closed forms of the correlation measures on Bell-diagonal states.

use crate::qcore::{bd_eigenvalues, binary_entropy, check_physical, exact_sum, ordered_sigma, BlochVector};
use crate::{Real, Result};

/// `D = 1 − S(ρ) + H((1 + ς1)/2)`.
pub fn discord_entropic<T: Real>(c: BlochVector<T>) -> Result<T> {
    check_physical(c)?;
    let s1 = ordered_sigma(c).s1().min(T::one());
    let h = binary_entropy((T::one() + s1) * T::lit(0.5))?;
    Ok(T::one() - bd_eigenvalues(c).entropy() + h)
}

/// One-way deficit; coincides with [`discord_entropic`] on Bell-diagonal states.
pub fn one_way_deficit<T: Real>(c: BlochVector<T>) -> Result<T> {
    discord_entropic(c)
}

/// Relative entropy of discord; coincides with the one-way deficit.
pub fn relative_entropy_discord<T: Real>(c: BlochVector<T>) -> Result<T> {
    one_way_deficit(c)
}

/// `D̃_G = 2(ς2² + ς3²) / (1 + ς1² + ς2² + ς3²)`.
pub fn adjusted_geometric<T: Real>(c: BlochVector<T>) -> Result<T> {
    check_physical(c)?;
    let [s1, s2, s3] = ordered_sigma(c).sigma;
    let tail = s2 * s2 + s3 * s3;
    Ok((tail + tail) / (T::one() + s1 * s1 + tail))
}

/// `D_1 = ς2`.
pub fn trace_distance_discord<T: Real>(c: BlochVector<T>) -> Result<T> {
    check_physical(c)?;
    Ok(ordered_sigma(c).s2())
}

/// Equal to [`trace_distance_discord`] when the measured party is a qubit.
pub fn negativity_of_quantumness<T: Real>(c: BlochVector<T>) -> Result<T> {
    trace_distance_discord(c)
}

fn clamped_sqrt<T: Real>(x: T) -> T {
    // radicands vanish on tetrahedron faces and may come out as −ε
    if x > T::zero() {
        x.sqrt()
    } else {
        T::zero()
    }
}

/// Maximal fidelity with a classical-quantum state,
/// `1/2 + 1/4 max_⟨ijk⟩ [√((1+c_i)² − (c_j−c_k)²) + √((1−c_i)² − (c_j+c_k)²)]`
/// over cyclic `⟨i, j, k⟩`.
pub fn fmax_bd<T: Real>(c: BlochVector<T>) -> Result<T> {
    check_physical(c)?;
    let c = c.to_array();
    let one = T::one();
    let mut best = T::zero();
    for i in 0..3 {
        let (ci, cj, ck) = (c[i], c[(i + 1) % 3], c[(i + 2) % 3]);
        // differences of squares in factored form with correctly rounded
        // factors, which stays accurate on the faces of the tetrahedron
        let f = |x: [T; 4]| exact_sum(x).max(T::zero());
        let term = (f([one, ci, -cj, ck]) * f([one, ci, cj, -ck])).sqrt()
            + (f([one, -ci, -cj, -ck]) * f([one, -ci, cj, ck])).sqrt();
        best = best.max(term);
    }
    Ok(T::lit(0.5) + T::lit(0.25) * best)
}

/// `D_F = 2(1 − F_max)`.
pub fn fidelity_discord<T: Real>(c: BlochVector<T>) -> Result<T> {
    let f = fmax_bd(c)?;
    Ok((T::one() - f) * T::lit(2.0))
}

/// `D_F` as `min{q1, q2, q3}` from the Bell-basis spectrum `(α, β, γ, δ)`,
/// `q1 = 1 − 2(√(αδ) + √(βγ))` and cyclic partners.
pub fn fidelity_discord_min_form<T: Real>(c: BlochVector<T>) -> Result<T> {
    check_physical(c)?;
    let [a, b, g, d] = bd_eigenvalues(c).to_array().map(|l| l.max(T::zero()));
    let two = T::lit(2.0);
    let q1 = T::one() - two * ((a * d).sqrt() + (b * g).sqrt());
    let q2 = T::one() - two * ((a * g).sqrt() + (b * d).sqrt());
    let q3 = T::one() - two * ((a * b).sqrt() + (g * d).sqrt());
    Ok(q1.min(q2).min(q3))
}

/// `D_B = [(2 + √2)(1 − √F_max)]^{1/2}`.
pub fn bures_discord<T: Real>(c: BlochVector<T>) -> Result<T> {
    let f = fmax_bd(c)?;
    let scale = T::lit(2.0) + T::lit(2.0).sqrt();
    Ok(clamped_sqrt(scale * (T::one() - f.sqrt())))
}

/// Local quantum uncertainty of a Bell-diagonal state, which equals `D_F`.
pub fn lqu_bd<T: Real>(c: BlochVector<T>) -> Result<T> {
    fidelity_discord(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(c1: f64, c2: f64, c3: f64) -> BlochVector<f64> {
        BlochVector::new(c1, c2, c3)
    }

    // independent hand evaluations
    fn h(p: f64) -> f64 {
        -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
    }

    #[test]
    fn entropic() {
        assert!(discord_entropic(bv(0.0, 0.0, 0.0)).unwrap().abs() < 1e-15);
        assert!((discord_entropic(bv(1.0, -1.0, 1.0)).unwrap() - 1.0).abs() < 1e-15);
        let d = discord_entropic(bv(1.0, -0.6, 0.6)).unwrap();
        assert!((d - (1.0 - h(0.2))).abs() < 1e-14);
        assert!((d - 0.278072).abs() < 1e-6);
        assert!(discord_entropic(bv(0.9, 0.9, 0.0)).is_err());
    }

    #[test]
    fn geometric_and_trace() {
        assert_eq!(adjusted_geometric(bv(0.0, 0.0, 0.0)).unwrap(), 0.0);
        assert!((adjusted_geometric(bv(1.0, -1.0, 1.0)).unwrap() - 1.0).abs() < 1e-15);
        let g = adjusted_geometric(bv(1.0, -0.6, 0.6)).unwrap();
        assert!((g - 1.44 / 2.72).abs() < 1e-15);
        assert!((g - 0.529412).abs() < 1e-6);
        assert_eq!(trace_distance_discord(bv(0.1, 0.5, -0.3)).unwrap(), 0.3);
        assert_eq!(trace_distance_discord(bv(1.0, -0.6, 0.6)).unwrap(), 0.6);
        assert_eq!(negativity_of_quantumness(bv(1.0, -0.6, 0.6)).unwrap(), 0.6);
    }

    #[test]
    fn fidelity_family() {
        assert!((fmax_bd(bv(0.0, 0.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((fmax_bd(bv(1.0, -0.6, 0.6)).unwrap() - 0.9).abs() < 1e-15);
        assert!((fmax_bd(bv(1.0, -1.0, 1.0)).unwrap() - 0.5).abs() < 1e-15);
        assert!((fidelity_discord(bv(1.0, -0.6, 0.6)).unwrap() - 0.2).abs() < 1e-14);
        assert!((fidelity_discord_min_form(bv(1.0, -0.6, 0.6)).unwrap() - 0.2).abs() < 1e-14);
        let db = bures_discord(bv(1.0, -0.6, 0.6)).unwrap();
        let expected = ((2.0 + 2f64.sqrt()) * (1.0 - 0.9f64.sqrt())).sqrt();
        assert!((db - expected).abs() < 1e-14);
        assert!((db - 0.41858).abs() < 1e-5);
        assert!((bures_discord(bv(1.0, -1.0, 1.0)).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(bures_discord(bv(0.0, 0.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn min_form_agrees_on_random_states() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut n = 0;
        while n < 1000 {
            let c = bv(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            if !crate::qcore::is_physical(c) {
                continue;
            }
            n += 1;
            let a = fidelity_discord(c).unwrap();
            let b = fidelity_discord_min_form(c).unwrap();
            assert!((a - b).abs() < 1e-10, "{c:?}: {a} vs {b}");
        }
    }

    #[test]
    fn generic_f32() {
        let c = BlochVector::<f32>::new(1.0, -0.6, 0.6);
        assert!((discord_entropic(c).unwrap() - 0.278072).abs() < 1e-5);
        assert!((fidelity_discord(c).unwrap() - 0.2).abs() < 1e-5);
    }
}
