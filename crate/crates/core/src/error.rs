use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Bell-diagonal correlation vector lies outside the tetrahedron.
    #[error("unphysical correlation vector ({c1}, {c2}, {c3}): eigenvalue {label} = {value} < 0")]
    Unphysical {
        c1: f64,
        c2: f64,
        c3: f64,
        label: &'static str,
        value: f64,
    },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid classical-quantum parametrisation: {0}")]
    InvalidCqParams(String),

    #[error("invalid channel specification: {0}")]
    InvalidChannel(String),

    #[error("time {t} outside the sampled kernel range [{start}, {end}]")]
    OutsideKernelRange { t: f64, start: f64, end: f64 },

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("line segment leaves the physical region (physical part: {clipped:?})")]
    LeavesPhysicalRegion { clipped: Option<(f64, f64)> },

    #[error("trajectory axis {channel} does not match contour slice axis {slice}")]
    AxisMismatch { channel: usize, slice: usize },

    /// A numerical certificate that must hold analytically was violated.
    #[error("certification failed: {0}")]
    CertificationFailed(String),
}
