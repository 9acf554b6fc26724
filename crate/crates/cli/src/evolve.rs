use std::collections::BTreeMap;

use bdfreeze::dynamics::{
    detect_freezing, freezing_initial, freezing_parameter, threshold_time, trajectory, ChannelSpec, FreezingInterval,
};
use bdfreeze::MeasureKind;
use serde_json::{json, Map, Value};

use crate::args::{EvolveArgs, Format};
use crate::output::{csv_text, emit, json_num, json_text, num};
use crate::{parse, Failure};

fn validation(e: bdfreeze::Error) -> Failure {
    Failure::Validation(e.to_string())
}

pub fn run(args: &EvolveArgs) -> Result<(), Failure> {
    let (c0, channel) = match (&args.freezing, &args.c) {
        (Some(f), _) => {
            let spec = parse::freezing(f)?;
            (freezing_initial(spec).map_err(validation)?, spec.channel)
        }
        (None, Some(c)) => {
            let k = args.k.ok_or_else(|| Failure::Validation("--k is required with --c".into()))?;
            (parse::triple(c)?, parse::channel(k)?)
        }
        (None, None) => return Err(Failure::Validation("either --c or --freezing is required".into())),
    };
    let spec = match (&args.kernel, args.gamma) {
        (Some(path), _) => ChannelSpec::kernel(channel, parse::kernel(path)?),
        (None, Some(gamma)) => ChannelSpec::markovian(channel, gamma).map_err(validation)?,
        (None, None) => return Err(Failure::Validation("either --gamma or --kernel is required".into())),
    };
    if !(args.tol > 0.0) {
        return Err(Failure::Validation(format!("tolerance {} must be positive", args.tol)));
    }
    let kinds = parse::kinds(args.measures.as_deref())?;
    let grid = parse::grid(&args.t)?;
    let samples = trajectory(c0, &spec, &grid, &kinds).map_err(validation)?;

    let thresholds = match freezing_parameter(c0, channel) {
        Some(c) => threshold_time(c, &spec).map_err(validation)?,
        None => Vec::new(),
    };
    let intervals = if samples.len() >= 3 {
        detect_freezing(&samples, args.tol).map_err(validation)?
    } else {
        BTreeMap::new()
    };
    report_summary(&thresholds, &intervals);

    let with_prediction = !samples.first().is_none_or(|s| s.frozen_prediction.is_empty());
    let text = match args.format {
        Format::Csv => {
            let mut header = vec!["t".to_string(), "c1".into(), "c2".into(), "c3".into()];
            header.extend(kinds.iter().map(|k| k.label().to_string()));
            if with_prediction {
                header.extend(kinds.iter().map(|k| format!("pred_{}", k.label())));
            }
            let mut rows = vec![header];
            for s in &samples {
                let mut row = vec![num(s.t), num(s.c.c1), num(s.c.c2), num(s.c.c3)];
                row.extend(kinds.iter().map(|&k| num(s.values.get(k))));
                if with_prediction {
                    row.extend(kinds.iter().map(|k| num(s.frozen_prediction[k])));
                }
                rows.push(row);
            }
            csv_text(&rows)?
        }
        Format::Json => {
            let rows: Vec<Value> = samples
                .iter()
                .map(|s| {
                    let values: Map<String, Value> =
                        kinds.iter().map(|&k| (k.label().to_string(), json_num(s.values.get(k)))).collect();
                    let mut row = json!({
                        "t": json_num(s.t),
                        "c": [json_num(s.c.c1), json_num(s.c.c2), json_num(s.c.c3)],
                        "values": values,
                    });
                    if with_prediction {
                        let pred: Map<String, Value> = kinds
                            .iter()
                            .map(|k| (k.label().to_string(), json_num(s.frozen_prediction[k])))
                            .collect();
                        row["predicted"] = Value::Object(pred);
                    }
                    row
                })
                .collect();
            let frozen: Map<String, Value> = intervals
                .iter()
                .map(|(k, v)| {
                    let list: Vec<Value> = v.iter().map(|i| json!([json_num(i.start), json_num(i.end)])).collect();
                    (k.label().to_string(), Value::Array(list))
                })
                .collect();
            json_text(&json!({
                "channel": channel.index(),
                "c0": [json_num(c0.c1), json_num(c0.c2), json_num(c0.c3)],
                "threshold_times": thresholds.iter().map(|&t| json_num(t)).collect::<Vec<_>>(),
                "frozen_intervals": frozen,
                "samples": rows,
            }))
        }
    };
    emit(args.out.output.as_deref(), &text)
}

fn report_summary(thresholds: &[f64], intervals: &BTreeMap<MeasureKind, Vec<FreezingInterval<f64>>>) {
    if !thresholds.is_empty() {
        let list: Vec<String> = thresholds.iter().map(|&t| num(t)).collect();
        eprintln!("threshold times: {}", list.join(", "));
    }
    for (kind, list) in intervals {
        let spans: Vec<String> = list.iter().map(|i| format!("[{}, {}]", num(i.start), num(i.end))).collect();
        eprintln!("frozen {}: {}", kind.label(), if spans.is_empty() { "none".into() } else { spans.join(" ") });
    }
}
