use std::path::Path;

use bdfreeze::dynamics::{time_grid, FlipChannel, FreezingInit, SampledKernel};
use bdfreeze::{BlochVector64, MeasureKind};

use crate::Failure;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Validation(msg.into())
}

fn number(s: &str, what: &str) -> Result<f64, Failure> {
    let x: f64 = s.trim().parse().map_err(|_| invalid(format!("{what}: cannot parse '{s}' as a number")))?;
    if !x.is_finite() {
        return Err(invalid(format!("{what}: '{s}' is not finite")));
    }
    Ok(x)
}

pub fn triple(s: &str) -> Result<BlochVector64, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(invalid(format!("expected c1,c2,c3, got '{s}'")));
    }
    Ok(BlochVector64::new(
        number(parts[0], "c1")?,
        number(parts[1], "c2")?,
        number(parts[2], "c3")?,
    ))
}

pub fn channel(k: usize) -> Result<FlipChannel, Failure> {
    FlipChannel::from_index(k).map_err(|e| invalid(e.to_string()))
}

pub fn freezing(s: &str) -> Result<FreezingInit<f64>, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(invalid(format!("expected k,c,variant, got '{s}'")));
    }
    let k: usize = parts[0].trim().parse().map_err(|_| invalid(format!("bad channel index '{}'", parts[0])))?;
    let variant: u8 = parts[2].trim().parse().map_err(|_| invalid(format!("bad variant '{}'", parts[2])))?;
    FreezingInit::new(channel(k)?, number(parts[1], "c")?, variant).map_err(|e| invalid(e.to_string()))
}

pub fn kinds(s: Option<&str>) -> Result<Vec<MeasureKind>, Failure> {
    let Some(s) = s else {
        return Ok(MeasureKind::ALL.to_vec());
    };
    let mut out = Vec::new();
    for label in s.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        let kind: MeasureKind = label.parse().map_err(|_| invalid(format!("unknown measure '{label}'")))?;
        if !out.contains(&kind) {
            out.push(kind);
        }
    }
    if out.is_empty() {
        return Err(invalid("no measures selected"));
    }
    Ok(out)
}

pub fn grid(s: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(invalid(format!("expected start:stop:step, got '{s}'")));
    }
    let (start, stop, step) = (number(parts[0], "start")?, number(parts[1], "stop")?, number(parts[2], "step")?);
    time_grid(start, stop, step).map_err(|e| invalid(e.to_string()))
}

pub fn kernel(path: &Path) -> Result<SampledKernel<f64>, Failure> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let mut samples = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        if record.len() != 2 {
            return Err(invalid(format!("{}: row {} must have two columns", path.display(), line + 2)));
        }
        samples.push((number(&record[0], "kernel t")?, number(&record[1], "kernel Lambda")?));
    }
    SampledKernel::new(samples).map_err(|e| invalid(format!("{}: {e}", path.display())))
}
