use super::contour::ContourGrid;
use crate::dynamics::{evolve_c, ChannelSpec};
use crate::qcore::BlochVector;
use crate::{Error, Real, Result};

/// Evolution path of `c0` projected on the grid plane as `(c_i, c_j)` points.
pub fn trajectory_overlay<T: Real>(
    grid: &ContourGrid<T>,
    c0: BlochVector<T>,
    channel: &ChannelSpec<T>,
    t_grid: &[T],
) -> Result<Vec<(T, T)>> {
    if channel.channel.axis() != grid.axis {
        return Err(Error::AxisMismatch { channel: channel.channel.index(), slice: grid.axis + 1 });
    }
    let (i, j) = grid.plane_axes();
    t_grid
        .iter()
        .map(|&t| evolve_c(c0, channel, t).map(|c| (c.get(i), c.get(j))))
        .collect()
}
