use std::collections::BTreeMap;

use super::closed::{adjusted_geometric, bures_discord, discord_entropic, fidelity_discord, trace_distance_discord};
use super::MeasureKind;
use crate::qcore::BlochVector;
use crate::{Real, Result};

/// All nine measures of one Bell-diagonal state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport<T: Real> {
    pub c: BlochVector<T>,
    pub values: BTreeMap<MeasureKind, T>,
    /// `(derived, source)` pairs whose value was copied through a
    /// Bell-diagonal identity rather than evaluated separately.
    pub identities: Vec<(MeasureKind, MeasureKind)>,
}

impl<T: Real> MeasureReport<T> {
    pub fn get(&self, kind: MeasureKind) -> T {
        self.values[&kind]
    }
}

/// Closed-form value of a single measure.
pub fn evaluate<T: Real>(kind: MeasureKind, c: BlochVector<T>) -> Result<T> {
    match kind.identity_source().unwrap_or(kind) {
        MeasureKind::Discord => discord_entropic(c),
        MeasureKind::AdjustedGeometric => adjusted_geometric(c),
        MeasureKind::TraceDistance => trace_distance_discord(c),
        MeasureKind::Bures => bures_discord(c),
        MeasureKind::FidelityBased => fidelity_discord(c),
        other => unreachable!("{other} has an identity source"),
    }
}

/// Evaluates the requested measures, computing each identity group once.
pub fn evaluate_kinds<T: Real>(c: BlochVector<T>, kinds: &[MeasureKind]) -> Result<MeasureReport<T>> {
    let mut values = BTreeMap::new();
    let mut identities = Vec::new();
    for &kind in kinds {
        let source = kind.identity_source().unwrap_or(kind);
        let v = match values.get(&source) {
            Some(&v) => v,
            None => {
                let v = evaluate(source, c)?;
                if kinds.contains(&source) {
                    values.insert(source, v);
                }
                v
            }
        };
        if source != kind {
            identities.push((kind, source));
        }
        values.insert(kind, v);
    }
    Ok(MeasureReport { c, values, identities })
}

pub fn evaluate_all<T: Real>(c: BlochVector<T>) -> Result<MeasureReport<T>> {
    evaluate_kinds(c, &MeasureKind::ALL)
}
