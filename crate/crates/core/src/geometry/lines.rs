use std::collections::BTreeMap;

use crate::dynamics::FlipChannel;
use crate::measures::{evaluate, MeasureKind};
use crate::qcore::{is_physical, BlochVector};
use crate::{Error, Real, Result};

/// Straight segment in a fixed-`c_k` plane: the major axis carries
/// `s ∈ [s_start, s_end]` and the other free axis is `m·s + a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSpec<T: Real> {
    pub channel: FlipChannel,
    pub ck: T,
    /// 0-based axis carrying `s`; must be one of the channel's decaying axes.
    pub major: usize,
    pub m: T,
    pub a: T,
    pub s_start: T,
    pub s_end: T,
}

impl<T: Real> LineSpec<T> {
    pub fn minor(&self) -> usize {
        let [lo, hi] = self.channel.decaying_axes();
        if self.major == lo {
            hi
        } else {
            lo
        }
    }

    pub fn point(&self, s: T) -> BlochVector<T> {
        let mut c = [T::zero(); 3];
        c[self.channel.axis()] = self.ck;
        c[self.major] = s;
        c[self.minor()] = self.m * s + self.a;
        BlochVector::from_array(c)
    }

    fn validate(&self) -> Result<()> {
        if !self.channel.decaying_axes().contains(&self.major) {
            return Err(Error::Domain(format!(
                "major axis {} is not a decaying axis of channel {}",
                self.major + 1,
                self.channel.index()
            )));
        }
        if !(self.s_end >= self.s_start) {
            return Err(Error::Domain(format!("empty parameter range [{}, {}]", self.s_start, self.s_end)));
        }
        Ok(())
    }

    fn samples(&self, n: usize) -> Vec<T> {
        if n < 2 || self.s_end == self.s_start {
            return vec![self.s_start];
        }
        let span = self.s_end - self.s_start;
        (0..n)
            .map(|q| self.s_start + span * T::lit(q as f64 / (n - 1) as f64))
            .collect()
    }
}

fn spread<T: Real>(values: &[T]) -> T {
    let lo = values.iter().copied().fold(T::lit(f64::INFINITY), |x, y| x.min(y));
    let hi = values.iter().copied().fold(T::lit(f64::NEG_INFINITY), |x, y| x.max(y));
    if values.is_empty() {
        T::zero()
    } else {
        hi - lo
    }
}

/// Residuals over the physical samples only, and how many there were.
fn physical_residuals<T: Real>(
    line: &LineSpec<T>,
    kinds: &[MeasureKind],
    n_samples: usize,
) -> Result<(BTreeMap<MeasureKind, T>, usize, usize)> {
    let ss = line.samples(n_samples);
    let points: Vec<_> = ss.iter().map(|&s| line.point(s)).filter(|&c| is_physical(c)).collect();
    let mut residuals = BTreeMap::new();
    for &kind in kinds {
        let values = points.iter().map(|&c| evaluate(kind, c)).collect::<Result<Vec<_>>>()?;
        residuals.insert(kind, spread(&values));
    }
    Ok((residuals, points.len(), ss.len()))
}

/// `max − min` of each measure over `n_samples` equally spaced points.
pub fn line_scan<T: Real>(
    line: &LineSpec<T>,
    kinds: &[MeasureKind],
    n_samples: usize,
) -> Result<BTreeMap<MeasureKind, T>> {
    line.validate()?;
    let ss = line.samples(n_samples);
    let physical: Vec<T> = ss.iter().copied().filter(|&s| is_physical(line.point(s))).collect();
    if physical.len() < ss.len() {
        let clipped = match (physical.first(), physical.last()) {
            (Some(a), Some(b)) => Some((a.to_f64_lossy(), b.to_f64_lossy())),
            _ => None,
        };
        return Err(Error::LeavesPhysicalRegion { clipped });
    }
    Ok(physical_residuals(line, kinds, n_samples)?.0)
}

/// Grid of candidate lines for [`find_freezing_lines`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSearch {
    pub m_range: (f64, f64),
    pub m_step: f64,
    pub a_range: (f64, f64),
    pub a_step: f64,
    pub n_samples: usize,
    /// Lines with a smaller physical fraction of samples are skipped.
    pub min_coverage: f64,
}

impl Default for LineSearch {
    fn default() -> Self {
        Self {
            m_range: (-1.0, 1.0),
            m_step: 0.01,
            a_range: (-0.5, 0.5),
            a_step: 0.01,
            n_samples: 41,
            min_coverage: 0.25,
        }
    }
}

/// The two witnesses every candidate line must keep constant.
pub const WITNESSES: [MeasureKind; 2] = [MeasureKind::TraceDistance, MeasureKind::AdjustedGeometric];

/// Connected set of surviving lines in one scan group.
#[derive(Debug, Clone, PartialEq)]
pub struct LineCluster<T: Real> {
    /// Mean `(m, a)` of the members.
    pub center: (T, T),
    /// Member with the smallest witness residual.
    pub representative: LineSpec<T>,
    pub members: usize,
    /// Fraction of the representative's samples that are physical.
    pub coverage: T,
    /// All nine measures evaluated on the representative.
    pub residuals: BTreeMap<MeasureKind, T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FreezingLines<T: Real> {
    pub survivors: Vec<LineSpec<T>>,
    pub clusters: Vec<LineCluster<T>>,
}

fn index_range(range: (f64, f64), step: f64) -> Result<std::ops::RangeInclusive<i64>> {
    if !(step > 0.0) || !(range.1 >= range.0) {
        return Err(Error::Domain(format!("invalid scan range {range:?} with step {step}")));
    }
    Ok((range.0 / step).round() as i64..=(range.1 / step).round() as i64)
}

/// Scans lines through the plane `|c_k| = c` with the major coordinate
/// running over `[c, 1]`, keeping those along which both [`WITNESSES`] vary
/// by less than `tol`. Groups are the choice of major axis and the sign of
/// `c_k`; survivors are clustered per group.
pub fn find_freezing_lines<T: Real>(
    channel: FlipChannel,
    c: T,
    tol: T,
    search: &LineSearch,
) -> Result<FreezingLines<T>> {
    if !(c > T::zero() && c < T::one()) {
        return Err(Error::Domain(format!("freezing parameter c = {c} outside (0, 1)")));
    }
    let m_idx = index_range(search.m_range, search.m_step)?;
    let a_idx = index_range(search.a_range, search.a_step)?;
    let mut survivors = Vec::new();
    let mut clusters = Vec::new();
    for major in channel.decaying_axes() {
        for ck in [c, -c] {
            let mut group: Vec<(i64, i64, LineSpec<T>, T)> = Vec::new();
            for mi in m_idx.clone() {
                for ai in a_idx.clone() {
                    let line = LineSpec {
                        channel,
                        ck,
                        major,
                        m: T::lit(mi as f64 * search.m_step),
                        a: T::lit(ai as f64 * search.a_step),
                        s_start: c,
                        s_end: T::one(),
                    };
                    let (res, physical, total) = physical_residuals(&line, &WITNESSES, search.n_samples)?;
                    if (physical as f64) < search.min_coverage * total as f64 || physical < 2 {
                        continue;
                    }
                    let worst = res.values().copied().fold(T::zero(), |x, y| x.max(y));
                    if worst < tol {
                        group.push((mi, ai, line, worst));
                    }
                }
            }
            survivors.extend(group.iter().map(|g| g.2));
            for members in components(&group) {
                clusters.push(cluster(&members, search.n_samples)?);
            }
        }
    }
    Ok(FreezingLines { survivors, clusters })
}

/// Connected components with index distance at most 2 in both directions.
fn components<T: Real>(group: &[(i64, i64, LineSpec<T>, T)]) -> Vec<Vec<(LineSpec<T>, T)>> {
    let mut seen = vec![false; group.len()];
    let mut out = Vec::new();
    for start in 0..group.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(p) = stack.pop() {
            members.push((group[p].2, group[p].3));
            for q in 0..group.len() {
                if !seen[q] && (group[p].0 - group[q].0).abs() <= 2 && (group[p].1 - group[q].1).abs() <= 2 {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        out.push(members);
    }
    out
}

fn cluster<T: Real>(members: &[(LineSpec<T>, T)], n_samples: usize) -> Result<LineCluster<T>> {
    let count = T::lit(members.len() as f64);
    let m = members.iter().fold(T::zero(), |acc, x| acc + x.0.m) / count;
    let a = members.iter().fold(T::zero(), |acc, x| acc + x.0.a) / count;
    let representative = members
        .iter()
        .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(std::cmp::Ordering::Equal))
        .map(|x| x.0)
        .expect("components are non-empty");
    let (residuals, physical, total) = physical_residuals(&representative, &MeasureKind::ALL, n_samples)?;
    let coverage = T::lit(physical as f64 / total as f64);
    Ok(LineCluster { center: (m, a), representative, members: members.len(), coverage, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(ck: f64, m: f64, a: f64, s: (f64, f64)) -> LineSpec<f64> {
        LineSpec { channel: FlipChannel::PhaseFlip, ck, major: 0, m, a, s_start: s.0, s_end: s.1 }
    }

    #[test]
    fn freezing_line_is_flat() {
        for c in [0.3, 0.6] {
            let res = line_scan(&line(c, -c, 0.0, (c, 1.0)), &MeasureKind::ALL, 101).unwrap();
            assert!(res.values().all(|&r| r < 1e-9), "{res:?}");
        }
    }

    #[test]
    fn horizontal_line_is_not() {
        let res = line_scan(&line(-0.3, 0.0, 0.2, (0.3, 0.9)), &MeasureKind::ALL, 101).unwrap();
        assert!(res[&MeasureKind::AdjustedGeometric] > 1e-3);
    }

    #[test]
    fn zero_length_and_exit() {
        let res = line_scan(&line(0.6, 0.1, 0.0, (0.2, 0.2)), &MeasureKind::ALL, 11).unwrap();
        assert!(res.values().all(|&r| r == 0.0));
        let err = line_scan(&line(0.3, 0.3, 0.0, (0.3, 1.0)), &MeasureKind::ALL, 71).unwrap_err();
        match err {
            Error::LeavesPhysicalRegion { clipped: Some((lo, hi)) } => {
                assert_eq!(lo, 0.3);
                assert!(hi <= 0.7 / 1.3 && hi > 0.5);
            }
            other => panic!("{other:?}"),
        }
        let mut bad = line(0.3, 0.3, 0.0, (0.3, 1.0));
        bad.major = 2;
        assert!(line_scan(&bad, &MeasureKind::ALL, 11).is_err());
    }

    #[test]
    fn coarse_search_recovers_diagonals() {
        let search = LineSearch { m_step: 0.05, a_step: 0.05, n_samples: 21, ..LineSearch::default() };
        let found = find_freezing_lines(FlipChannel::PhaseFlip, 0.6f64, 1e-7, &search).unwrap();
        assert!(!found.clusters.is_empty());
        for cl in &found.clusters {
            assert!((cl.center.0.abs() - 0.6).abs() < 1e-9 && cl.center.1.abs() < 1e-9, "{cl:?}");
            assert_eq!(cl.coverage, 1.0);
            assert!(cl.residuals.values().all(|&r| r < 1e-9));
        }
    }

    #[test]
    fn partial_segment_flat_only_for_witnesses() {
        // (s, cs, c) is physical only up to s = (1−c)/(1+c); it shares ς with
        // the freezing line but not the spectrum
        let search = LineSearch { m_step: 0.05, a_step: 0.05, n_samples: 21, ..LineSearch::default() };
        let found = find_freezing_lines(FlipChannel::PhaseFlip, 0.3f64, 1e-7, &search).unwrap();
        let partial: Vec<_> = found.clusters.iter().filter(|cl| cl.coverage < 1.0).collect();
        assert!(!partial.is_empty());
        for cl in partial {
            assert!(WITNESSES.iter().all(|k| cl.residuals[k] < 1e-9));
            assert!(cl.residuals[&MeasureKind::Discord] > 1e-6);
        }
    }
}
