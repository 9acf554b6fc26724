use crate::qcore::BlochVector;
use crate::{Error, Real, Result};

/// Local nondissipative flip channel acting on both qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlipChannel {
    /// `k = 1`, preserves `c1`.
    BitFlip,
    /// `k = 2`, preserves `c2`.
    BitPhaseFlip,
    /// `k = 3`, preserves `c3`.
    PhaseFlip,
}

impl FlipChannel {
    pub const ALL: [FlipChannel; 3] = [FlipChannel::BitFlip, FlipChannel::BitPhaseFlip, FlipChannel::PhaseFlip];

    /// Channel from its 1-based index `k`.
    pub fn from_index(k: usize) -> Result<Self> {
        match k {
            1 => Ok(FlipChannel::BitFlip),
            2 => Ok(FlipChannel::BitPhaseFlip),
            3 => Ok(FlipChannel::PhaseFlip),
            _ => Err(Error::InvalidChannel(format!("channel index {k} not in 1..=3"))),
        }
    }

    pub fn index(self) -> usize {
        self.axis() + 1
    }

    /// 0-based index of the preserved correlation component.
    pub fn axis(self) -> usize {
        match self {
            FlipChannel::BitFlip => 0,
            FlipChannel::BitPhaseFlip => 1,
            FlipChannel::PhaseFlip => 2,
        }
    }

    /// The two decaying axes, in increasing order.
    pub fn decaying_axes(self) -> [usize; 2] {
        match self.axis() {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    }
}

/// Decay exponent `Λ(t)` given as samples and interpolated linearly.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledKernel<T: Real> {
    samples: Vec<(T, T)>,
}

impl<T: Real> SampledKernel<T> {
    /// Requires strictly increasing times starting at `t = 0`, `Λ(0) = 0`
    /// and `Λ ≥ 0`.
    pub fn new(samples: Vec<(T, T)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidChannel("kernel needs at least two samples".into()));
        }
        let tol = T::lit(1e-12);
        let (t0, l0) = samples[0];
        if t0.abs() > tol || l0.abs() > tol {
            return Err(Error::InvalidChannel(format!("kernel must start at (0, 0), got ({t0}, {l0})")));
        }
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::InvalidChannel(format!("kernel times not increasing at t = {}", w[1].0)));
            }
        }
        if let Some(&(t, l)) = samples.iter().find(|s| s.1 < -tol || !s.1.is_finite()) {
            return Err(Error::InvalidChannel(format!("kernel value {l} at t = {t} is negative")));
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[(T, T)] {
        &self.samples
    }

    pub fn range(&self) -> (T, T) {
        (self.samples[0].0, self.samples[self.samples.len() - 1].0)
    }

    pub fn eval(&self, t: T) -> Result<T> {
        let (start, end) = self.range();
        if !(t >= start && t <= end) {
            return Err(Error::OutsideKernelRange {
                t: t.to_f64_lossy(),
                start: start.to_f64_lossy(),
                end: end.to_f64_lossy(),
            });
        }
        let idx = self.samples.partition_point(|s| s.0 <= t);
        if idx >= self.samples.len() {
            return Ok(self.samples[self.samples.len() - 1].1);
        }
        let (t0, l0) = self.samples[idx - 1];
        let (t1, l1) = self.samples[idx];
        Ok(l0 + (l1 - l0) * (t - t0) / (t1 - t0))
    }

    /// Every time at which the interpolant equals `level`, in order.
    pub fn crossings(&self, level: T) -> Vec<T> {
        let mut out: Vec<T> = Vec::new();
        let push = |t: T, out: &mut Vec<T>| {
            if out.last().is_none_or(|&last| last != t) {
                out.push(t);
            }
        };
        for w in self.samples.windows(2) {
            let ((t0, l0), (t1, l1)) = (w[0], w[1]);
            let (d0, d1) = (l0 - level, l1 - level);
            if d0 == T::zero() {
                push(t0, &mut out);
            } else if d0 * d1 < T::zero() {
                push(t0 + (t1 - t0) * d0 / (d0 - d1), &mut out);
            }
        }
        let (t_last, l_last) = self.samples[self.samples.len() - 1];
        if l_last == level {
            push(t_last, &mut out);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DecayProfile<T: Real> {
    /// `Λ(t) = 2γt`.
    Markovian { rate: T },
    Kernel(SampledKernel<T>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSpec<T: Real> {
    pub channel: FlipChannel,
    pub profile: DecayProfile<T>,
}

impl<T: Real> ChannelSpec<T> {
    pub fn markovian(channel: FlipChannel, rate: T) -> Result<Self> {
        if !(rate > T::zero()) || !rate.is_finite() {
            return Err(Error::InvalidChannel(format!("decoherence rate {rate} must be positive")));
        }
        Ok(Self {
            channel,
            profile: DecayProfile::Markovian { rate },
        })
    }

    pub fn kernel(channel: FlipChannel, kernel: SampledKernel<T>) -> Self {
        Self {
            channel,
            profile: DecayProfile::Kernel(kernel),
        }
    }

    /// `Λ(t)`.
    pub fn decay_exponent(&self, t: T) -> Result<T> {
        if !(t >= T::zero()) {
            return Err(Error::Domain(format!("negative time {t}")));
        }
        match &self.profile {
            DecayProfile::Markovian { rate } => Ok(T::lit(2.0) * *rate * t),
            DecayProfile::Kernel(k) => k.eval(t),
        }
    }
}

/// Correlations after time `t`: the two components transverse to the channel
/// axis are multiplied by `e^{−Λ(t)}`, the axial one is unchanged.
pub fn evolve_c<T: Real>(c0: BlochVector<T>, channel: &ChannelSpec<T>, t: T) -> Result<BlochVector<T>> {
    let factor = (-channel.decay_exponent(t)?).exp();
    let keep = channel.channel.axis();
    let mut c = c0.to_array();
    for (axis, v) in c.iter_mut().enumerate() {
        if axis != keep {
            *v *= factor;
        }
    }
    Ok(BlochVector::from_array(c))
}
