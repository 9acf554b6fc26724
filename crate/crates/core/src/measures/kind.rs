use std::fmt;
use std::str::FromStr;

use crate::Error;

/// The nine correlation measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeasureKind {
    /// Entropic quantum discord `D`.
    Discord,
    /// One-way quantum deficit `Δ→`.
    Deficit,
    /// Relative entropy of discord `D_R`.
    RelativeEntropy,
    /// Purity-adjusted geometric discord `D̃_G`.
    AdjustedGeometric,
    /// Trace-distance discord `D_1`.
    TraceDistance,
    /// Negativity of quantumness `Q_N`.
    NegativityOfQuantumness,
    /// Bures-distance discord `D_B`.
    Bures,
    /// Fidelity-based measure `D_F`.
    FidelityBased,
    /// Local quantum uncertainty `U`.
    LocalQuantumUncertainty,
}

/// Sets of measures that coincide on Bell-diagonal states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityGroup {
    Entropic,
    TraceNorm,
    Fidelity,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 9] = [
        MeasureKind::Discord,
        MeasureKind::Deficit,
        MeasureKind::RelativeEntropy,
        MeasureKind::AdjustedGeometric,
        MeasureKind::TraceDistance,
        MeasureKind::NegativityOfQuantumness,
        MeasureKind::Bures,
        MeasureKind::FidelityBased,
        MeasureKind::LocalQuantumUncertainty,
    ];

    /// Short label used in reports and CLI flags.
    pub fn label(self) -> &'static str {
        match self {
            MeasureKind::Discord => "D",
            MeasureKind::Deficit => "Deficit",
            MeasureKind::RelativeEntropy => "DR",
            MeasureKind::AdjustedGeometric => "AdjGeo",
            MeasureKind::TraceDistance => "D1",
            MeasureKind::NegativityOfQuantumness => "QN",
            MeasureKind::Bures => "DB",
            MeasureKind::FidelityBased => "DF",
            MeasureKind::LocalQuantumUncertainty => "U",
        }
    }

    pub fn group(self) -> Option<IdentityGroup> {
        match self {
            MeasureKind::Discord | MeasureKind::Deficit | MeasureKind::RelativeEntropy => Some(IdentityGroup::Entropic),
            MeasureKind::TraceDistance | MeasureKind::NegativityOfQuantumness => Some(IdentityGroup::TraceNorm),
            MeasureKind::FidelityBased | MeasureKind::LocalQuantumUncertainty => Some(IdentityGroup::Fidelity),
            MeasureKind::AdjustedGeometric | MeasureKind::Bures => None,
        }
    }

    /// The measure whose closed form this one reuses on Bell-diagonal states.
    pub fn identity_source(self) -> Option<MeasureKind> {
        match self {
            MeasureKind::Deficit | MeasureKind::RelativeEntropy => Some(MeasureKind::Discord),
            MeasureKind::NegativityOfQuantumness => Some(MeasureKind::TraceDistance),
            MeasureKind::LocalQuantumUncertainty => Some(MeasureKind::FidelityBased),
            _ => None,
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kind = match s.trim().to_ascii_lowercase().as_str() {
            "d" | "discord" => MeasureKind::Discord,
            "deficit" => MeasureKind::Deficit,
            "dr" | "relent" => MeasureKind::RelativeEntropy,
            "adjgeo" | "dg" => MeasureKind::AdjustedGeometric,
            "d1" | "trace1" => MeasureKind::TraceDistance,
            "qn" | "negq" => MeasureKind::NegativityOfQuantumness,
            "db" | "bures" => MeasureKind::Bures,
            "df" | "fidelitybased" => MeasureKind::FidelityBased,
            "u" | "lqu" => MeasureKind::LocalQuantumUncertainty,
            other => return Err(Error::Domain(format!("unknown measure '{other}'"))),
        };
        Ok(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_members_with_round_trip_labels() {
        assert_eq!(MeasureKind::ALL.len(), 9);
        for kind in MeasureKind::ALL {
            assert_eq!(kind.label().parse::<MeasureKind>().unwrap(), kind);
        }
        assert_eq!("Trace1".parse::<MeasureKind>().unwrap(), MeasureKind::TraceDistance);
        assert_eq!("LQU".parse::<MeasureKind>().unwrap(), MeasureKind::LocalQuantumUncertainty);
        assert!("nope".parse::<MeasureKind>().is_err());
    }

    #[test]
    fn groups() {
        for kind in MeasureKind::ALL {
            if let Some(src) = kind.identity_source() {
                assert_eq!(kind.group(), src.group());
            }
        }
    }
}
