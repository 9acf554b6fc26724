use bdfreeze::measures::evaluate_kinds;
use bdfreeze::qcore::{bd_eigenvalues, check_physical, EIGEN_LABELS};
use serde_json::{json, Map, Value};

use crate::args::{Format, MeasureArgs};
use crate::output::{csv_text, emit, json_num, json_text, num};
use crate::{parse, Failure};

pub fn run(args: &MeasureArgs) -> Result<(), Failure> {
    let c = parse::triple(&args.c)?;
    let kinds = parse::kinds(args.measures.as_deref())?;
    check_physical(c).map_err(|e| Failure::Validation(e.to_string()))?;
    let report = evaluate_kinds(c, &kinds).map_err(|e| Failure::Validation(e.to_string()))?;
    let source_of = |kind| report.identities.iter().find(|(d, _)| *d == kind).map(|(_, s)| s.label());

    let text = match args.format {
        Format::Json => {
            let eig = bd_eigenvalues(c).to_array();
            let eigenvalues: Map<String, Value> =
                EIGEN_LABELS.iter().zip(eig).map(|(l, v)| (l.to_string(), json_num(v))).collect();
            let values: Map<String, Value> = kinds.iter().map(|&k| (k.label().to_string(), json_num(report.get(k)))).collect();
            let identities: Vec<Value> = report
                .identities
                .iter()
                .map(|(derived, source)| json!({ "measure": derived.label(), "equals": source.label() }))
                .collect();
            json_text(&json!({
                "c": [json_num(c.c1), json_num(c.c2), json_num(c.c3)],
                "eigenvalues": eigenvalues,
                "values": values,
                "identities": identities,
            }))
        }
        Format::Csv => {
            let mut rows = vec![vec!["measure".to_string(), "value".into(), "equals".into()]];
            for &k in &kinds {
                rows.push(vec![k.label().into(), num(report.get(k)), source_of(k).unwrap_or("").into()]);
            }
            csv_text(&rows)?
        }
    };
    emit(args.out.output.as_deref(), &text)
}
