use bdfreeze::dynamics::{
    detect_freezing, freezing_initial, threshold_time, time_grid, trajectory, ChannelSpec, FlipChannel, FreezingInit,
    DEFAULT_FREEZING_TOLERANCE,
};
use bdfreeze::geometry::{find_freezing_lines, LineSearch};
use bdfreeze::measures::{
    adjusted_geometric, discord_entropic, fidelity_discord, fidelity_discord_min_form, fmax_bd, frozen_value, lqu_bd,
    lqu_general_with, one_way_deficit, relative_entropy_discord, trace_distance_discord,
};
use bdfreeze::oracles::{fmax_cq_search, measurement_deficit, measurement_discord, min_distance_cq, CqMetric};
use bdfreeze::qcore::{bd_density, ordered_sigma, random_bd};
use bdfreeze::{BlochVector64, MeasureKind, SearchBudget};
use serde_json::{json, Value};

use crate::args::{Format, Suite, VerifyArgs};
use crate::output::{csv_text, emit, json_num, json_text, num};
use crate::Failure;

struct Check {
    suite: &'static str,
    name: String,
    target: f64,
    achieved: f64,
    pass: bool,
    detail: String,
}

impl Check {
    /// Passes when `achieved ≤ target`.
    fn bound(suite: &'static str, name: impl Into<String>, target: f64, achieved: f64) -> Self {
        Self { suite, name: name.into(), target, achieved, pass: achieved <= target, detail: String::new() }
    }
}

fn lib(e: bdfreeze::Error) -> Failure {
    Failure::Validation(e.to_string())
}

fn random_states(seed: u64, n: usize) -> Vec<BlochVector64> {
    let mut rng = SearchBudget::default().with_seed(seed).rng();
    (0..n).map(|_| random_bd(&mut rng)).collect()
}

fn identities(seed: u64) -> Result<Vec<Check>, Failure> {
    let (mut same_d, mut same_q, mut df_u, mut min_form) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for c in random_states(seed, 1000) {
        let d = discord_entropic(c).map_err(lib)?;
        same_d = same_d
            .max((one_way_deficit(c).map_err(lib)? - d).abs())
            .max((relative_entropy_discord(c).map_err(lib)? - d).abs());
        let d1 = trace_distance_discord(c).map_err(lib)?;
        same_q = same_q.max((bdfreeze::measures::negativity_of_quantumness(c).map_err(lib)? - d1).abs());
        let df = fidelity_discord(c).map_err(lib)?;
        df_u = df_u.max((lqu_bd(c).map_err(lib)? - df).abs());
        min_form = min_form.max((fidelity_discord_min_form(c).map_err(lib)? - 2.0 * (1.0 - fmax_bd(c).map_err(lib)?)).abs());
    }
    Ok(vec![
        Check::bound("identities", "D = Deficit = DR", 0.0, same_d),
        Check::bound("identities", "D1 = QN", 0.0, same_q),
        Check::bound("identities", "DF = U", 1e-7, df_u),
        Check::bound("identities", "DF eigenvalue form = 2(1 - Fmax)", 1e-10, min_form),
    ])
}

fn oracles(seed: u64, states: usize) -> Result<Vec<Check>, Failure> {
    let budget = SearchBudget::default().with_seed(seed);
    let mut worst = [0.0f64; 6];
    for c in random_states(seed ^ 0x0dd5, states) {
        let rho = bd_density(c);
        let d = discord_entropic(c).map_err(lib)?;
        let devs = [
            (measurement_discord(&rho, &budget).map_err(lib)?.value - d).abs(),
            (measurement_deficit(&rho, &budget).map_err(lib)?.value - d).abs(),
            (min_distance_cq(&rho, CqMetric::Trace, &budget).map_err(lib)?.value - ordered_sigma(c).s2()).abs(),
            (2.0 * min_distance_cq(&rho, CqMetric::HilbertSchmidt, &budget).map_err(lib)?.value / rho.purity()
                - adjusted_geometric(c).map_err(lib)?)
            .abs(),
            (min_distance_cq(&rho, CqMetric::RelativeEntropy, &budget).map_err(lib)?.value - d).abs(),
            (lqu_general_with(&rho, &budget).map_err(lib)? - lqu_bd(c).map_err(lib)?).abs(),
        ];
        for (w, d) in worst.iter_mut().zip(devs) {
            *w = w.max(d);
        }
    }
    let names = [
        ("measurement discord vs D", 1e-6),
        ("measurement deficit vs Deficit", 1e-6),
        ("closest CQ state, trace distance vs D1", 1e-4),
        ("closest CQ state, adjusted Hilbert-Schmidt vs AdjGeo", 1e-4),
        ("closest CQ state, relative entropy vs DR", 1e-3),
        ("local skew information vs U", 1e-7),
    ];
    Ok(names.iter().zip(worst).map(|(&(n, t), w)| Check::bound("oracles", n, t, w)).collect())
}

fn fmax(seed: u64, states: usize, samples: usize) -> Result<Vec<Check>, Failure> {
    let budget = SearchBudget { random_samples: samples, ..SearchBudget::default().with_seed(seed) };
    let (mut excess, mut closed) = (f64::NEG_INFINITY, 0.0f64);
    let mut failures = Vec::new();
    for (idx, c) in random_states(seed ^ 0xf1de, states).into_iter().enumerate() {
        match fmax_cq_search(&bd_density(c), &budget) {
            Ok(r) => {
                excess = excess.max(r.sampled_best - r.result.value);
                closed = closed.max((r.result.value - fmax_bd(c).map_err(lib)?).abs());
            }
            Err(e) => failures.push(format!("state {idx}: {e}")),
        }
    }
    let mut sampled = Check::bound("fmax", format!("{samples} random CQ states never beat the Bell-diagonal family"), 1e-6, excess);
    if !failures.is_empty() {
        sampled.pass = false;
        sampled.detail = failures.join("; ");
    }
    Ok(vec![sampled, Check::bound("fmax", "Bell-diagonal family optimum vs closed form", 1e-6, closed)])
}

fn freezing() -> Result<Vec<Check>, Failure> {
    let mut worst = 0.0f64;
    for channel in FlipChannel::ALL {
        let spec = ChannelSpec::markovian(channel, 1.0).map_err(lib)?;
        for variant in 1..=4 {
            for c in [0.1f64, 0.3, 0.6, 0.9] {
                let c0 = freezing_initial(FreezingInit::new(channel, c, variant).map_err(lib)?).map_err(lib)?;
                let t_star = threshold_time(c, &spec).map_err(lib)?[0];
                let grid = time_grid(0.0, 3.0 * t_star, t_star / 100.0).map_err(lib)?;
                for s in trajectory(c0, &spec, &grid, &MeasureKind::ALL).map_err(lib)? {
                    let arg = if s.t < t_star { c } else { (-2.0 * s.t).exp() };
                    for kind in MeasureKind::ALL {
                        let expected = frozen_value(kind, arg.min(1.0)).map_err(lib)?;
                        worst = worst.max((s.values.get(kind) - expected).abs());
                    }
                }
            }
        }
    }
    let spec = ChannelSpec::markovian(FlipChannel::PhaseFlip, 1.0).map_err(lib)?;
    let c0 = freezing_initial(FreezingInit::new(FlipChannel::PhaseFlip, 0.6, 1).map_err(lib)?).map_err(lib)?;
    let samples = trajectory(c0, &spec, &time_grid(0.0, 1.0, 0.01).map_err(lib)?, &MeasureKind::ALL).map_err(lib)?;
    let t_star = threshold_time(0.6, &spec).map_err(lib)?[0];
    let mut endpoint = 0.0f64;
    let mut shape_ok = true;
    for intervals in detect_freezing(&samples, DEFAULT_FREEZING_TOLERANCE).map_err(lib)?.values() {
        shape_ok &= intervals.len() == 1 && intervals[0].start == 0.0;
        if let Some(i) = intervals.first() {
            endpoint = endpoint.max((i.end - t_star).abs());
        }
    }
    let mut detected = Check::bound("freezing", "detected threshold within one grid step (c = 0.6, step 0.01)", 0.01, endpoint);
    if !shape_ok {
        detected.pass = false;
        detected.detail = "expected exactly one interval starting at t = 0 per measure".into();
    }
    Ok(vec![
        Check::bound("freezing", "all channels, variants and c: values match frozen profile", 1e-9, worst),
        detected,
    ])
}

fn theorem3(cs: &[f64]) -> Result<Vec<Check>, Failure> {
    let search = LineSearch::default();
    let mut checks = Vec::new();
    for &c in cs {
        let found = find_freezing_lines(FlipChannel::PhaseFlip, c, 1e-7, &search).map_err(lib)?;
        let offset = |m: f64, a: f64| ((m.abs() - c).abs()).max(a.abs());
        let centre = found.clusters.iter().map(|cl| offset(cl.center.0, cl.center.1)).fold(0.0f64, f64::max);
        let spread = found.survivors.iter().map(|l| offset(l.m, l.a)).fold(0.0f64, f64::max);
        let full = |cl: &&bdfreeze::geometry::LineCluster<f64>| cl.coverage >= 1.0;
        let flat = found
            .clusters
            .iter()
            .filter(full)
            .flat_map(|cl| cl.residuals.values().copied())
            .fold(0.0f64, f64::max);
        let partial: Vec<String> = found
            .clusters
            .iter()
            .filter(|cl| !full(cl))
            .map(|cl| {
                let worst = cl.residuals.values().copied().fold(0.0f64, f64::max);
                format!("({:.4}, {:.4}) coverage {:.3} max residual {:.3e}", cl.center.0, cl.center.1, cl.coverage, worst)
            })
            .collect();
        let has = |sign: f64| found.clusters.iter().any(|cl| (cl.center.0 - sign * c).abs() <= 0.02);
        let centres: Vec<String> = found
            .clusters
            .iter()
            .map(|cl| format!("({:.4}, {:.4})", cl.center.0, cl.center.1))
            .collect();
        let mut clusters = Check::bound("theorem3", format!("c = {c}: cluster centres at (+-c, 0)"), 0.02, centre);
        clusters.pass &= has(1.0) && has(-1.0);
        clusters.detail = format!("centres {}", centres.join(" "));
        checks.push(clusters);
        checks.push(Check::bound(
            "theorem3",
            format!("c = {c}: no surviving line further than two grid steps"),
            2.0 * search.m_step.max(search.a_step) + 1e-12,
            spread,
        ));
        let mut universal = Check::bound("theorem3", format!("c = {c}: all nine measures flat on full-length cluster lines"), 1e-9, flat);
        universal.pass &= found.clusters.iter().any(|cl| full(&cl));
        if !partial.is_empty() {
            universal.detail = format!("partial segments flat for the witnesses only: {}", partial.join("; "));
        }
        checks.push(universal);
    }
    Ok(checks)
}

pub fn run(args: &VerifyArgs, seed: u64) -> Result<(), Failure> {
    if args.states == 0 || args.samples == 0 {
        return Err(Failure::Validation("--states and --samples must be positive".into()));
    }
    let cs = match args.c {
        Some(c) if c > 0.0 && c < 1.0 => vec![c],
        Some(c) => return Err(Failure::Validation(format!("--c {c} outside (0, 1)"))),
        None => vec![0.3, 0.6],
    };
    let wants = |s: Suite| args.suite == Suite::All || args.suite == s;
    let mut checks = Vec::new();
    if wants(Suite::Identities) {
        checks.extend(identities(seed)?);
    }
    if wants(Suite::Oracles) {
        checks.extend(oracles(seed, args.states)?);
    }
    if wants(Suite::Fmax) {
        checks.extend(fmax(seed, args.states, args.samples)?);
    }
    if wants(Suite::Freezing) {
        checks.extend(freezing()?);
    }
    if wants(Suite::Theorem3) {
        checks.extend(theorem3(&cs)?);
    }
    let passed = checks.iter().all(|c| c.pass);
    for c in &checks {
        eprintln!("{} {}: {} (target {})", if c.pass { "PASS" } else { "FAIL" }, c.name, num(c.achieved), num(c.target));
    }

    let text = match args.format {
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite,
                        "check": c.name,
                        "target": json_num(c.target),
                        "achieved": json_num(c.achieved),
                        "pass": c.pass,
                        "detail": c.detail,
                    })
                })
                .collect();
            json_text(&json!({ "seed": seed, "passed": passed, "checks": list }))
        }
        Format::Csv => {
            let mut rows = vec![["suite", "check", "target", "achieved", "pass", "detail"].map(String::from).to_vec()];
            for c in &checks {
                rows.push(vec![c.suite.into(), c.name.clone(), num(c.target), num(c.achieved), c.pass.to_string(), c.detail.clone()]);
            }
            csv_text(&rows)?
        }
    };
    emit(args.out.output.as_deref(), &text)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification(checks.iter().filter(|c| !c.pass).count()))
    }
}
