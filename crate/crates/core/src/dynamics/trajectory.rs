use std::collections::BTreeMap;

use super::channel::{evolve_c, ChannelSpec};
use super::freezing::{freezing_parameter, predicted_measure};
use crate::measures::{evaluate_kinds, MeasureKind, MeasureReport};
use crate::qcore::{check_physical, BlochVector};
use crate::{Error, Real, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySample<T: Real> {
    pub t: T,
    pub c: BlochVector<T>,
    pub values: MeasureReport<T>,
    /// Frozen/decay profile prediction; empty unless the initial state is a
    /// freezing initial condition for the channel.
    pub frozen_prediction: BTreeMap<MeasureKind, T>,
}

pub fn trajectory<T: Real>(
    c0: BlochVector<T>,
    channel: &ChannelSpec<T>,
    t_grid: &[T],
    kinds: &[MeasureKind],
) -> Result<Vec<TrajectorySample<T>>> {
    check_physical(c0)?;
    if let Some(&t) = t_grid.first() {
        if !(t >= T::zero()) {
            return Err(Error::Domain(format!("time grid starts at negative time {t}")));
        }
    }
    if let Some(w) = t_grid.windows(2).find(|w| !(w[1] > w[0])) {
        return Err(Error::Domain(format!("time grid not increasing at t = {}", w[1])));
    }
    let frozen_c = freezing_parameter(c0, channel.channel);
    t_grid
        .iter()
        .map(|&t| {
            let c = evolve_c(c0, channel, t)?;
            let values = evaluate_kinds(c, kinds)?;
            let mut frozen_prediction = BTreeMap::new();
            if let Some(fc) = frozen_c {
                for &kind in kinds {
                    frozen_prediction.insert(kind, predicted_measure(kind, fc, channel, t)?);
                }
            }
            Ok(TrajectorySample { t, c, values, frozen_prediction })
        })
        .collect()
}

/// `start:stop:step` grid, inclusive of `stop` up to half a step.
pub fn time_grid<T: Real>(start: T, stop: T, step: T) -> Result<Vec<T>> {
    if !(step > T::zero()) || !(stop >= start) || !(start >= T::zero()) {
        return Err(Error::Domain(format!("invalid time grid {start}:{stop}:{step}")));
    }
    let n = ((stop - start) / step + T::lit(0.5)).floor().to_f64_lossy() as usize;
    Ok((0..=n).map(|i| start + step * T::lit(i as f64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{freezing_initial, FlipChannel, FreezingInit};

    fn phase() -> ChannelSpec<f64> {
        ChannelSpec::markovian(FlipChannel::PhaseFlip, 1.0).unwrap()
    }

    #[test]
    fn origin_stays_zero() {
        let s = trajectory(BlochVector::zero(), &phase(), &[0.0, 0.5, 1.0], &MeasureKind::ALL).unwrap();
        for sample in &s {
            assert!(sample.values.values.values().all(|v| v.abs() < 1e-15));
            assert!(sample.frozen_prediction.is_empty());
        }
    }

    #[test]
    fn trace_distance_examples() {
        let c0 = BlochVector::new(1.0, -0.6, 0.6);
        let k = [MeasureKind::TraceDistance];
        let s = trajectory(c0, &phase(), &[0.0, 0.1, 0.2], &k).unwrap();
        assert!(s.iter().all(|x| (x.values.get(k[0]) - 0.6).abs() < 1e-12));
        let s = trajectory(c0, &phase(), &[0.3, 0.5], &k).unwrap();
        assert!((s[0].values.get(k[0]) - (-0.6f64).exp()).abs() < 1e-12);
        assert!((s[1].values.get(k[0]) - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn values_match_prediction() {
        let c0 = freezing_initial(FreezingInit::new(FlipChannel::PhaseFlip, 0.6, 1).unwrap()).unwrap();
        let grid = time_grid(0.0, 1.0, 0.01).unwrap();
        assert_eq!(grid.len(), 101);
        for s in trajectory(c0, &phase(), &grid, &MeasureKind::ALL).unwrap() {
            for kind in MeasureKind::ALL {
                assert!((s.values.get(kind) - s.frozen_prediction[&kind]).abs() < 1e-9, "{kind} at {}", s.t);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let ch = phase();
        assert!(trajectory(BlochVector::new(1.0, 1.0, 1.0), &ch, &[0.0], &MeasureKind::ALL).is_err());
        assert!(trajectory(BlochVector::zero(), &ch, &[0.2, 0.1], &MeasureKind::ALL).is_err());
        assert!(trajectory(BlochVector::zero(), &ch, &[-0.1, 0.1], &MeasureKind::ALL).is_err());
        assert!(time_grid(0.0, 1.0, 0.0f64).is_err());
    }
}
