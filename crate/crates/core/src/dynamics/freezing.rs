use super::channel::{ChannelSpec, DecayProfile, FlipChannel};
use crate::measures::{frozen_value, MeasureKind};
use crate::qcore::BlochVector;
use crate::{Error, Real, Result};

/// One of the four rank-2 initial conditions for channel `k`.
///
/// With `i` the decaying axis that starts at `±1` and `j` the other one,
/// the state is `c_i = ±1`, `c_j = ∓c`, `c_k = c`. Variants 1 and 2 put the
/// unit entry on the lower-numbered decaying axis (with `+1` and `−1`
/// respectively), variants 3 and 4 on the higher-numbered one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreezingInit<T: Real> {
    pub channel: FlipChannel,
    pub c: T,
    pub variant: u8,
}

impl<T: Real> FreezingInit<T> {
    pub fn new(channel: FlipChannel, c: T, variant: u8) -> Result<Self> {
        let spec = Self { channel, c, variant };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > T::zero() && self.c <= T::one()) {
            return Err(Error::Domain(format!("freezing parameter c = {} outside (0, 1]", self.c)));
        }
        if !(1..=4).contains(&self.variant) {
            return Err(Error::Domain(format!("freezing variant {} not in 1..=4", self.variant)));
        }
        Ok(())
    }

    /// `(i, j, sign of c_i)`.
    fn layout(&self) -> (usize, usize, T) {
        let [lo, hi] = self.channel.decaying_axes();
        let (i, j) = if self.variant <= 2 { (lo, hi) } else { (hi, lo) };
        let sign = if self.variant % 2 == 1 { T::one() } else { -T::one() };
        (i, j, sign)
    }
}

pub fn freezing_initial<T: Real>(spec: FreezingInit<T>) -> Result<BlochVector<T>> {
    spec.validate()?;
    let (i, j, sign) = spec.layout();
    let mut c = [T::zero(); 3];
    c[i] = sign;
    c[j] = -sign * spec.c;
    c[spec.channel.axis()] = spec.c;
    Ok(BlochVector::from_array(c))
}

/// Returns `c` if `c0` is a freezing initial condition for `channel`,
/// allowing either sign of the axial component.
pub fn freezing_parameter<T: Real>(c0: BlochVector<T>, channel: FlipChannel) -> Option<T> {
    let tol = T::lit(1e-12);
    let ck = c0.get(channel.axis());
    let c = ck.abs();
    if !(c > T::zero()) || c > T::one() + tol {
        return None;
    }
    let [a, b] = channel.decaying_axes();
    [(a, b), (b, a)].into_iter().find_map(|(i, j)| {
        let ci = c0.get(i);
        let unit = (ci.abs() - T::one()).abs() <= tol;
        (unit && (c0.get(j) + ci * ck).abs() <= tol).then(|| c.min(T::one()))
    })
}

/// Times at which `Λ(t) = −ln c`. A Markovian channel has exactly one.
pub fn threshold_time<T: Real>(c: T, channel: &ChannelSpec<T>) -> Result<Vec<T>> {
    if !(c > T::zero() && c <= T::one()) {
        return Err(Error::Domain(format!("freezing parameter c = {c} outside (0, 1]")));
    }
    let level = -c.ln();
    Ok(match &channel.profile {
        DecayProfile::Markovian { rate } => vec![level / (T::lit(2.0) * *rate)],
        DecayProfile::Kernel(k) => k.crossings(level),
    })
}

/// Value of `kind` at time `t` along a freezing trajectory with parameter `c`.
pub fn predicted_measure<T: Real>(kind: MeasureKind, c: T, channel: &ChannelSpec<T>, t: T) -> Result<T> {
    let s = c.min((-channel.decay_exponent(t)?).exp());
    frozen_value(kind, s)
}
