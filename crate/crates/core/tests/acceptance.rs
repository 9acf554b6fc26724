//! End-to-end acceptance checks, one line of output per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bdfreeze::dynamics::{
    detect_freezing, freezing_initial, threshold_time, time_grid, trajectory, ChannelSpec, FlipChannel, FreezingInit,
    SampledKernel, DEFAULT_FREEZING_TOLERANCE,
};
use bdfreeze::geometry::{contour_grid, find_freezing_lines, LineSearch};
use bdfreeze::measures::{
    adjusted_geometric, discord_entropic, fidelity_discord, fidelity_discord_min_form, fmax_bd, frozen_profile,
    frozen_value, lqu_bd, lqu_general, one_way_deficit, relative_entropy_discord, trace_distance_discord,
    negativity_of_quantumness, evaluate_all,
};
use bdfreeze::oracles::{fmax_cq_search, measurement_deficit, measurement_discord, min_distance_cq, random_cq_params, CqMetric};
use bdfreeze::qcore::{bd_density, fidelity, ordered_sigma, random_bd};
use bdfreeze::{BlochVector64, MeasureKind, SearchBudget, TwoQubitDensity64};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn universal_freezing() -> Outcome {
    let start = Instant::now();
    let mut worst_frozen = 0.0f64;
    let mut worst_decay = 0.0f64;
    let mut runs = 0;
    for channel in FlipChannel::ALL {
        let spec = ChannelSpec::markovian(channel, 1.0).unwrap();
        for variant in 1..=4 {
            for c in [0.1f64, 0.3, 0.6, 0.9] {
                let c0 = freezing_initial(FreezingInit::new(channel, c, variant).unwrap()).unwrap();
                let t_star = threshold_time(c, &spec).unwrap()[0];
                let grid = time_grid(0.0, 3.0 * t_star, t_star / 100.0).unwrap();
                let samples = trajectory(c0, &spec, &grid, &MeasureKind::ALL).unwrap();
                for s in &samples {
                    for kind in MeasureKind::ALL {
                        let v = s.values.get(kind);
                        if s.t < t_star {
                            worst_frozen = worst_frozen.max((v - samples[0].values.get(kind)).abs());
                            worst_frozen = worst_frozen.max((v - frozen_value(kind, c).unwrap()).abs());
                        } else {
                            // the tabulated Bures row is the square of the discord
                            let f = frozen_profile(kind, (-2.0 * s.t).exp()).unwrap();
                            let f = if kind == MeasureKind::Bures { f.sqrt() } else { f };
                            worst_decay = worst_decay.max((v - f).abs());
                        }
                    }
                }
                runs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst_frozen < 1e-9 && worst_decay < 1e-9 && elapsed < Duration::from_secs(10),
        format!("{runs} runs, frozen dev {worst_frozen:.2e}, decay dev {worst_decay:.2e}, {elapsed:.2?}"),
    )
}

fn spot_values() -> Outcome {
    let c = BlochVector64::new(1.0, -0.6, 0.6);
    let spec = ChannelSpec::markovian(FlipChannel::PhaseFlip, 1.0).unwrap();
    let checks = [
        ("D", discord_entropic(c).unwrap(), 0.278072),
        ("Deficit", one_way_deficit(c).unwrap(), 0.278072),
        ("DR", relative_entropy_discord(c).unwrap(), 0.278072),
        ("AdjGeo", adjusted_geometric(c).unwrap(), 0.529412),
        ("D1", trace_distance_discord(c).unwrap(), 0.6),
        ("QN", negativity_of_quantumness(c).unwrap(), 0.6),
        ("DF", fidelity_discord(c).unwrap(), 0.2),
        ("U", lqu_bd(c).unwrap(), 0.2),
        ("Fmax", fmax_bd(c).unwrap(), 0.9),
        ("t*", threshold_time(0.6, &spec).unwrap()[0], 0.255413),
    ];
    let worst = checks.iter().map(|(_, v, e)| (v - e).abs()).fold(0.0, f64::max);
    let bad: Vec<&str> = checks.iter().filter(|(_, v, e)| (v - e).abs() >= 1e-6).map(|x| x.0).collect();
    outcome(bad.is_empty(), format!("max dev {worst:.2e}{}", if bad.is_empty() { String::new() } else { format!(", off: {bad:?}") }))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let budget = SearchBudget::default().with_seed(2024);
    let mut rng = budget.rng();
    let mut worst = [0.0f64; 5];
    for _ in 0..100 {
        let c: BlochVector64 = random_bd(&mut rng);
        let rho = bd_density(c);
        let d = discord_entropic(c).unwrap();
        let devs = [
            (measurement_discord(&rho, &budget).unwrap().value - d).abs(),
            (measurement_deficit(&rho, &budget).unwrap().value - d).abs(),
            (min_distance_cq(&rho, CqMetric::Trace, &budget).unwrap().value - ordered_sigma(c).s2()).abs(),
            (2.0 * min_distance_cq(&rho, CqMetric::HilbertSchmidt, &budget).unwrap().value / rho.purity()
                - adjusted_geometric(c).unwrap())
            .abs(),
            (min_distance_cq(&rho, CqMetric::RelativeEntropy, &budget).unwrap().value - d).abs(),
        ];
        for (w, x) in worst.iter_mut().zip(devs) {
            *w = w.max(x);
        }
    }
    let elapsed = start.elapsed();
    let pass = worst[0] < 1e-6
        && worst[1] < 1e-6
        && worst[2] < 1e-4
        && worst[3] < 1e-4
        && worst[4] < 1e-3
        && elapsed < Duration::from_secs(300);
    outcome(
        pass,
        format!(
            "100 states: discord {:.1e}, deficit {:.1e}, trace {:.1e}, HS {:.1e}, relent {:.1e}, {elapsed:.2?}",
            worst[0], worst[1], worst[2], worst[3], worst[4]
        ),
    )
}

fn fidelity_witnesses() -> Outcome {
    let budget = SearchBudget::default().with_seed(99);
    let mut rng = budget.rng();

    let mut local_gap = f64::NEG_INFINITY;
    for _ in 0..1000 {
        let rho = bd_density(random_bd::<f64>(&mut rng));
        let params = random_cq_params::<f64>(&mut rng);
        let sigma = TwoQubitDensity64::new(params.density_matrix()).unwrap();
        let triple = sigma.bloch_triple().without_local_vectors();
        let sigma0 = TwoQubitDensity64::new(TwoQubitDensity64::from_bloch_triple(&triple).into_matrix()).unwrap();
        local_gap = local_gap.max(fidelity(&rho, &sigma).unwrap() - fidelity(&rho, &sigma0).unwrap());
    }

    let mut sampled_excess = f64::NEG_INFINITY;
    let mut failures = 0;
    for _ in 0..20 {
        let c = random_bd::<f64>(&mut rng);
        match fmax_cq_search(&bd_density(c), &budget) {
            Ok(r) => sampled_excess = sampled_excess.max(r.sampled_best - r.result.value),
            Err(_) => failures += 1,
        }
    }

    let mut min_form = 0.0f64;
    let mut df_u = 0.0f64;
    for i in 0..1000 {
        let c = random_bd::<f64>(&mut rng);
        let df = fidelity_discord(c).unwrap();
        min_form = min_form.max((fidelity_discord_min_form(c).unwrap() - 2.0 * (1.0 - fmax_bd(c).unwrap())).abs());
        df_u = df_u.max((lqu_bd(c).unwrap() - df).abs());
        if i < 50 {
            df_u = df_u.max((lqu_general(&bd_density(c)).unwrap() - df).abs());
        }
    }
    outcome(
        local_gap <= 1e-9 && failures == 0 && sampled_excess <= 1e-6 && min_form <= 1e-10 && df_u <= 1e-7,
        format!(
            "F(σ)−F(σ0) max {local_gap:.2e}; sampled excess max {sampled_excess:.2e} ({failures} failures); min-form {min_form:.1e}; DF−U {df_u:.1e}"
        ),
    )
}

fn freezing_lines() -> Outcome {
    let search = LineSearch::default();
    let mut pass = true;
    let mut notes = Vec::new();
    for c in [0.3f64, 0.6] {
        let found = find_freezing_lines(FlipChannel::PhaseFlip, c, 1e-7, &search).unwrap();
        let off = |m: f64, a: f64| (m.abs() - c).abs().max(a.abs());
        let centre = found.clusters.iter().map(|cl| off(cl.center.0, cl.center.1)).fold(0.0, f64::max);
        let spread = found.survivors.iter().map(|l| off(l.m, l.a)).fold(0.0, f64::max);
        let both = [1.0, -1.0].iter().all(|s| found.clusters.iter().any(|cl| (cl.center.0 - s * c).abs() < 0.02));
        pass &= !found.clusters.is_empty() && both && centre < 0.02 && spread <= 0.02 + 1e-12;
        notes.push(format!("c={c}: {} clusters, centre dev {centre:.1e}, survivor spread {spread:.1e}", found.clusters.len()));
    }
    outcome(pass, notes.join("; "))
}

fn geometric_contrast() -> Outcome {
    let spec = ChannelSpec::markovian(FlipChannel::PhaseFlip, 1.0).unwrap();
    let c0 = freezing_initial(FreezingInit::new(FlipChannel::PhaseFlip, 0.6, 1).unwrap()).unwrap();
    let t_star = threshold_time(0.6, &spec).unwrap()[0];
    let budget = SearchBudget::default();
    let samples = trajectory(c0, &spec, &[0.0, t_star / 2.0], &[MeasureKind::AdjustedGeometric]).unwrap();
    let hs: Vec<f64> = samples
        .iter()
        .map(|s| min_distance_cq(&bd_density(s.c), CqMetric::HilbertSchmidt, &budget).unwrap().value)
        .collect();
    let dg = (samples[1].values.get(MeasureKind::AdjustedGeometric) - samples[0].values.get(MeasureKind::AdjustedGeometric)).abs();
    outcome(
        hs[0] - hs[1] > 1e-6 && dg < 1e-9,
        format!("HS distance² {:.6} → {:.6}, AdjGeo change {dg:.1e}", hs[0], hs[1]),
    )
}

fn non_markovian_windows() -> Outcome {
    let c = 0.6f64;
    let level = -c.ln();
    let kernel = SampledKernel::new(vec![(0.0, 0.0), (1.0, 2.0 * level), (2.0, 0.5 * level), (3.0, 2.0 * level)]).unwrap();
    let spec = ChannelSpec::kernel(FlipChannel::PhaseFlip, kernel);
    let crossings = threshold_time(c, &spec).unwrap();
    let step = 0.01;
    let c0 = freezing_initial(FreezingInit::new(FlipChannel::PhaseFlip, c, 2).unwrap()).unwrap();
    let samples = trajectory(c0, &spec, &time_grid(0.0, 3.0, step).unwrap(), &MeasureKind::ALL).unwrap();
    let found = detect_freezing(&samples, DEFAULT_FREEZING_TOLERANCE).unwrap();
    let mut pass = crossings.len() == 3 && found.len() == 9;
    let mut worst = 0.0f64;
    for intervals in found.values() {
        if intervals.len() != 2 || crossings.len() != 3 {
            pass = false;
            continue;
        }
        let ends = [
            (intervals[0].start, 0.0),
            (intervals[0].end, crossings[0]),
            (intervals[1].start, crossings[1]),
            (intervals[1].end, crossings[2]),
        ];
        for (got, want) in ends {
            worst = worst.max((got - want).abs());
        }
    }
    pass &= worst <= step + 1e-12;
    outcome(pass, format!("crossings {crossings:.4?}, max endpoint offset {worst:.4}"))
}

fn contour_reproduction() -> Outcome {
    let n = 201;
    let grid = contour_grid(&[MeasureKind::TraceDistance, MeasureKind::AdjustedGeometric], 2, 0.25f64, n).unwrap();
    let mut exact = true;
    let mut radial = 0.0f64;
    let mut mask_ok = true;
    let mut inner = 0;
    for row in 0..n {
        for col in 0..n {
            let c = grid.point(row, col);
            let (c1, c2, c3) = (c.c1, c.c2, c.c3);
            let lambdas = [
                1.0 + c1 - c2 + c3,
                1.0 + c1 + c2 - c3,
                1.0 - c1 + c2 + c3,
                1.0 - c1 - c2 - c3,
            ];
            let physical = lambdas.iter().all(|&l| l / 4.0 >= -1e-12);
            mask_ok &= physical == grid.is_physical(row, col);
            mask_ok &= physical == grid.value(MeasureKind::TraceDistance, row, col).is_some();
            if c1.abs() < 0.25 && c2.abs() < 0.25 {
                inner += 1;
                exact &= grid.value(MeasureKind::TraceDistance, row, col) == Some(c1.abs().max(c2.abs()));
                let r2 = c1 * c1 + c2 * c2;
                let dg = grid.value(MeasureKind::AdjustedGeometric, row, col).unwrap();
                radial = radial.max((dg - 2.0 * r2 / (1.0 + 0.0625 + r2)).abs());
                // same value at every cell with the same radius under the square's symmetries
                let mirror = grid.value(MeasureKind::AdjustedGeometric, col, row).unwrap();
                let flipped = grid.value(MeasureKind::AdjustedGeometric, row, n - 1 - col).unwrap();
                radial = radial.max((dg - mirror).abs()).max((dg - flipped).abs());
            }
        }
    }
    outcome(
        exact && radial <= 1e-12 && mask_ok,
        format!("{inner} inner cells, D1 exact {exact}, AdjGeo radial dev {radial:.1e}, mask agrees {mask_ok}"),
    )
}

fn main() -> ExitCode {
    // sanity: the library evaluates every measure on the reference state
    assert_eq!(evaluate_all(BlochVector64::new(1.0, -0.6, 0.6)).unwrap().values.len(), 9);

    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("universal freezing", universal_freezing),
        ("closed-form spot values", spot_values),
        ("oracle equivalence", oracle_equivalence),
        ("fidelity witnesses", fidelity_witnesses),
        ("straight freezing lines", freezing_lines),
        ("geometric contrast", geometric_contrast),
        ("non-Markovian windows", non_markovian_windows),
        ("contour reproduction", contour_reproduction),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("[{}] {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
