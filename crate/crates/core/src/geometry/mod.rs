//! Slices of the tetrahedron of Bell-diagonal states: contour grids,
//! projected trajectories and straight freezing lines.

mod contour;
mod lines;
mod overlay;

pub use contour::{contour_grid, ContourGrid};
pub use lines::{find_freezing_lines, line_scan, FreezingLines, LineCluster, LineSearch, LineSpec, WITNESSES};
pub use overlay::trajectory_overlay;
