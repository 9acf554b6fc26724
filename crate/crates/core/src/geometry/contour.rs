use std::collections::BTreeMap;

use crate::measures::{evaluate_kinds, MeasureKind};
use crate::qcore::{is_physical, BlochVector};
use crate::{Error, Real, Result};

/// Measure values on an `n × n` slice of the tetrahedron at fixed `c_k`.
///
/// Cells are stored row-major: row `r` has `c_j = coords[r]`, column `q`
/// has `c_i = coords[q]`, where `(i, j)` are the two free axes in
/// increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourGrid<T: Real> {
    /// 0-based fixed axis.
    pub axis: usize,
    pub ck: T,
    pub coords: Vec<T>,
    pub physical: Vec<bool>,
    pub layers: BTreeMap<MeasureKind, Vec<Option<T>>>,
}

impl<T: Real> ContourGrid<T> {
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// The two free axes `(i, j)`.
    pub fn plane_axes(&self) -> (usize, usize) {
        plane_axes(self.axis)
    }

    pub fn point(&self, row: usize, col: usize) -> BlochVector<T> {
        let (i, j) = self.plane_axes();
        let mut c = [T::zero(); 3];
        c[self.axis] = self.ck;
        c[i] = self.coords[col];
        c[j] = self.coords[row];
        BlochVector::from_array(c)
    }

    pub fn is_physical(&self, row: usize, col: usize) -> bool {
        self.physical[row * self.n() + col]
    }

    pub fn value(&self, kind: MeasureKind, row: usize, col: usize) -> Option<T> {
        self.layers.get(&kind).and_then(|layer| layer[row * self.n() + col])
    }
}

pub(crate) fn plane_axes(axis: usize) -> (usize, usize) {
    match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// `n` points on `[−1, 1]`, exactly antisymmetric about the centre.
fn symmetric_coords<T: Real>(n: usize) -> Vec<T> {
    let mut coords: Vec<T> = (0..n)
        .map(|q| T::lit((2.0 * q as f64 - (n - 1) as f64) / (n - 1) as f64))
        .collect();
    for q in 0..n / 2 {
        coords[n - 1 - q] = -coords[q];
    }
    if n % 2 == 1 {
        coords[n / 2] = T::zero();
    }
    coords
}

/// Evaluates `kinds` on the slice `c_k = ck` (`axis` is 0-based).
pub fn contour_grid<T: Real>(kinds: &[MeasureKind], axis: usize, ck: T, n: usize) -> Result<ContourGrid<T>> {
    if axis > 2 {
        return Err(Error::Domain(format!("axis {axis} not in 0..=2")));
    }
    if !(ck.abs() <= T::one()) {
        return Err(Error::Domain(format!("slice value {ck} outside [−1, 1]")));
    }
    if n < 16 {
        return Err(Error::Domain(format!("resolution {n} below 16")));
    }
    let mut grid = ContourGrid {
        axis,
        ck,
        coords: symmetric_coords(n),
        physical: Vec::with_capacity(n * n),
        layers: kinds.iter().map(|&k| (k, Vec::with_capacity(n * n))).collect(),
    };
    for row in 0..n {
        for col in 0..n {
            let c = grid.point(row, col);
            let physical = is_physical(c);
            grid.physical.push(physical);
            let report = if physical { Some(evaluate_kinds(c, kinds)?) } else { None };
            for (kind, layer) in grid.layers.iter_mut() {
                layer.push(report.as_ref().map(|r| r.get(*kind)));
            }
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_distance_square_contours() {
        let g = contour_grid(&[MeasureKind::TraceDistance], 2, 0.25f64, 201).unwrap();
        let mut checked = 0;
        for row in 0..201 {
            for col in 0..201 {
                let c = g.point(row, col);
                if c.c1.abs() < 0.25 && c.c2.abs() < 0.25 {
                    let v = g.value(MeasureKind::TraceDistance, row, col).unwrap();
                    assert!((v - c.c1.abs().max(c.c2.abs())).abs() < 1e-12);
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn origin_zero_and_mask() {
        let g = contour_grid(&MeasureKind::ALL, 2, 0.0f64, 17).unwrap();
        for kind in MeasureKind::ALL {
            assert!(g.value(kind, 8, 8).unwrap().abs() < 1e-15);
        }
        // (1, 1, 0) is outside the tetrahedron
        assert!(!g.is_physical(16, 16));
        assert!(g.value(MeasureKind::Discord, 16, 16).is_none());
    }

    #[test]
    fn adjusted_geometric_is_radial_near_origin() {
        let g = contour_grid(&[MeasureKind::AdjustedGeometric], 2, 0.25f64, 41).unwrap();
        for row in 0..41 {
            for col in 0..41 {
                let c = g.point(row, col);
                let r2 = c.c1 * c.c1 + c.c2 * c.c2;
                if c.c1.abs() < 0.25 && c.c2.abs() < 0.25 {
                    let expected = 2.0 * r2 / (1.0 + 1.0 / 16.0 + r2);
                    let v = g.value(MeasureKind::AdjustedGeometric, row, col).unwrap();
                    assert!((v - expected).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(contour_grid::<f64>(&MeasureKind::ALL, 2, 1.5, 32).is_err());
        assert!(contour_grid::<f64>(&MeasureKind::ALL, 2, 0.5, 8).is_err());
        assert!(contour_grid::<f64>(&MeasureKind::ALL, 3, 0.5, 32).is_err());
    }
}
