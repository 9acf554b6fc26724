use bdfreeze::dynamics::{freezing_initial, threshold_time, time_grid, ChannelSpec, FlipChannel, FreezingInit};
use bdfreeze::geometry::{contour_grid, trajectory_overlay};

use crate::args::ContourArgs;
use crate::output::{csv_text, emit, num};
use crate::{parse, Failure};

fn validation(e: bdfreeze::Error) -> Failure {
    Failure::Validation(e.to_string())
}

pub fn run(args: &ContourArgs) -> Result<(), Failure> {
    let channel = parse::channel(args.k)?;
    let kinds = parse::kinds(args.measure.as_deref())?;
    let axis = channel.axis();
    let grid = contour_grid(&kinds, axis, args.ck, args.n).map_err(validation)?;
    let overlay = match args.overlay {
        Some(variant) => Some(overlay_path(args, channel, variant, &grid)?),
        None => None,
    };

    std::fs::create_dir_all(&args.out_dir).map_err(|e| Failure::Io(format!("{}: {e}", args.out_dir.display())))?;
    let (i, j) = grid.plane_axes();
    let mut written = Vec::new();
    for &kind in &kinds {
        let mut header = vec![format!("c{}\\c{}", j + 1, i + 1)];
        header.extend(grid.coords.iter().map(|&x| num(x)));
        let mut rows = vec![header];
        for row in 0..grid.n() {
            let mut cells = vec![num(grid.coords[row])];
            cells.extend((0..grid.n()).map(|col| grid.value(kind, row, col).map_or_else(|| "NA".to_string(), num)));
            rows.push(cells);
        }
        let path = args.out_dir.join(format!("contour_k{}_{}.csv", args.k, kind.label()));
        emit(Some(&path), &csv_text(&rows)?)?;
        written.push(path);
    }
    if let Some((variant, points)) = overlay {
        let mut rows = vec![vec!["t".to_string(), format!("c{}", i + 1), format!("c{}", j + 1)]];
        rows.extend(points.into_iter().map(|(t, x, y)| vec![num(t), num(x), num(y)]));
        let path = args.out_dir.join(format!("overlay_k{}_v{}.csv", args.k, variant));
        emit(Some(&path), &csv_text(&rows)?)?;
        written.push(path);
    }
    for p in written {
        println!("{}", p.display());
    }
    Ok(())
}

fn overlay_path(
    args: &ContourArgs,
    channel: FlipChannel,
    variant: u8,
    grid: &bdfreeze::ContourGrid64,
) -> Result<(u8, Vec<(f64, f64, f64)>), Failure> {
    let init = FreezingInit::new(channel, args.ck, variant)
        .map_err(|e| Failure::Validation(format!("overlay needs 0 < c_k <= 1: {e}")))?;
    let spec = ChannelSpec::markovian(channel, args.gamma).map_err(validation)?;
    let ts = match &args.t {
        Some(t) => parse::grid(t)?,
        None => {
            let t_star = threshold_time(args.ck, &spec).map_err(validation)?[0];
            if t_star > 0.0 {
                time_grid(0.0, 3.0 * t_star, t_star / 100.0).map_err(validation)?
            } else {
                vec![0.0]
            }
        }
    };
    let c0 = freezing_initial(init).map_err(validation)?;
    let path = trajectory_overlay(grid, c0, &spec, &ts).map_err(validation)?;
    Ok((variant, ts.into_iter().zip(path).map(|(t, (x, y))| (t, x, y)).collect()))
}
