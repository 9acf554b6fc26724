use std::collections::BTreeMap;

use super::trajectory::TrajectorySample;
use crate::measures::MeasureKind;
use crate::{Error, Real, Result};

/// Default threshold on consecutive differences for closed-form trajectories.
pub const DEFAULT_FREEZING_TOLERANCE: f64 = 1e-7;

/// Closed time interval spanned by grid samples `first..=last`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreezingInterval<T: Real> {
    pub start: T,
    pub end: T,
    pub first: usize,
    pub last: usize,
}

/// Maximal runs of samples whose consecutive values differ by less than
/// `tol`, per measure present in the first sample.
pub fn detect_freezing<T: Real>(
    samples: &[TrajectorySample<T>],
    tol: T,
) -> Result<BTreeMap<MeasureKind, Vec<FreezingInterval<T>>>> {
    if samples.len() < 3 {
        return Err(Error::TooFewSamples { needed: 3, got: samples.len() });
    }
    let mut out = BTreeMap::new();
    for &kind in samples[0].values.values.keys() {
        let mut intervals = Vec::new();
        let mut run_start: Option<usize> = None;
        for i in 1..samples.len() {
            let a = value(samples, i - 1, kind)?;
            let b = value(samples, i, kind)?;
            if (b - a).abs() < tol {
                run_start.get_or_insert(i - 1);
            } else if let Some(first) = run_start.take() {
                intervals.push(interval(samples, first, i - 1));
            }
        }
        if let Some(first) = run_start {
            intervals.push(interval(samples, first, samples.len() - 1));
        }
        out.insert(kind, intervals);
    }
    Ok(out)
}

fn value<T: Real>(samples: &[TrajectorySample<T>], i: usize, kind: MeasureKind) -> Result<T> {
    samples[i]
        .values
        .values
        .get(&kind)
        .copied()
        .ok_or_else(|| Error::Domain(format!("sample {i} has no value for {kind}")))
}

fn interval<T: Real>(samples: &[TrajectorySample<T>], first: usize, last: usize) -> FreezingInterval<T> {
    FreezingInterval { start: samples[first].t, end: samples[last].t, first, last }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{freezing_initial, threshold_time, time_grid, trajectory, ChannelSpec, FlipChannel, FreezingInit, SampledKernel};
    use crate::qcore::BlochVector;

    #[test]
    fn constant_sequence_single_interval() {
        let ch = ChannelSpec::markovian(FlipChannel::PhaseFlip, 1.0f64).unwrap();
        let s = trajectory(BlochVector::zero(), &ch, &[0.0, 1.0, 2.0, 3.0], &MeasureKind::ALL).unwrap();
        let found = detect_freezing(&s, 1e-7).unwrap();
        for v in found.values() {
            assert_eq!(v, &[FreezingInterval { start: 0.0, end: 3.0, first: 0, last: 3 }]);
        }
        assert!(matches!(detect_freezing(&s[..2], 1e-7), Err(Error::TooFewSamples { .. })));
    }

    #[test]
    fn markovian_endpoint() {
        let ch = ChannelSpec::markovian(FlipChannel::PhaseFlip, 1.0f64).unwrap();
        let c0 = freezing_initial(FreezingInit::new(FlipChannel::PhaseFlip, 0.6, 1).unwrap()).unwrap();
        let s = trajectory(c0, &ch, &time_grid(0.0, 1.0, 0.01).unwrap(), &MeasureKind::ALL).unwrap();
        let found = detect_freezing(&s, DEFAULT_FREEZING_TOLERANCE).unwrap();
        assert_eq!(found.len(), 9);
        for (kind, v) in found {
            assert_eq!(v.len(), 1, "{kind}");
            assert_eq!(v[0].start, 0.0);
            assert!(v[0].end >= 0.25 - 1e-12 && v[0].end <= 0.26 + 1e-12, "{kind}: {}", v[0].end);
        }
    }

    #[test]
    fn kernel_with_two_crossings() {
        let c = 0.6f64;
        let level = -c.ln();
        // rises above the level, falls back below it, then rises again
        let kernel = SampledKernel::new(vec![(0.0, 0.0), (1.0, 2.0 * level), (2.0, 0.5 * level), (3.0, 0.8 * level)]).unwrap();
        let ch = ChannelSpec::kernel(FlipChannel::BitFlip, kernel);
        let crossings = threshold_time(c, &ch).unwrap();
        assert_eq!(crossings.len(), 2);
        let c0 = freezing_initial(FreezingInit::new(FlipChannel::BitFlip, c, 3).unwrap()).unwrap();
        let step = 0.01;
        let s = trajectory(c0, &ch, &time_grid(0.0, 3.0, step).unwrap(), &MeasureKind::ALL).unwrap();
        for (kind, v) in detect_freezing(&s, DEFAULT_FREEZING_TOLERANCE).unwrap() {
            assert_eq!(v.len(), 2, "{kind}");
            assert!((v[0].end - crossings[0]).abs() <= step);
            assert!((v[1].start - crossings[1]).abs() <= step);
            assert!((v[1].end - 3.0).abs() < 1e-12);
        }
    }
}
