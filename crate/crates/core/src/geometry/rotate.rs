//! Rotation about the grid center into a minimal bounding frame.
//!
//! Positions are continuous `(x, y)` in cell units, `x` along columns and `y`
//! down rows, so cell `(r, c)` has its center at `(c + 0.5, r + 0.5)`. A
//! positive angle rotates the raster counter-clockwise as displayed with row 0
//! on top.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::raster::{Cell, DemGrid, ShadowMask};

/// Rounding slack when sizing the rotated frame, so lattice-aligned angles do
/// not grow by a spurious row or column.
const FRAME_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillPolicy {
    /// Cells outside the source footprint become nodata (grids) or INVALID
    /// (masks).
    Nodata,
}

/// Everything needed to move data between the source frame and the rotated
/// frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationTransform {
    /// Normalized to `[0, 360)`.
    pub angle_deg: f64,
    pub src_dims: (usize, usize),
    pub dst_dims: (usize, usize),
    pub src_center: (f64, f64),
    pub dst_center: (f64, f64),
    pub src_origin: (f64, f64),
    pub fill: FillPolicy,
}

impl RotationTransform {
    pub fn new(src_dims: (usize, usize), angle_deg: f64) -> Self {
        let angle_deg = angle_deg.rem_euclid(360.0);
        let (nrows, ncols) = src_dims;
        let (cos, sin) = trig(angle_deg);
        let (w, h) = (ncols as f64, nrows as f64);
        let frame = |v: f64| ((v - FRAME_SLACK).ceil() as usize).max(1);
        let dst_cols = frame(w * cos.abs() + h * sin.abs());
        let dst_rows = frame(w * sin.abs() + h * cos.abs());
        RotationTransform {
            angle_deg,
            src_dims,
            dst_dims: (dst_rows, dst_cols),
            src_center: (w / 2.0, h / 2.0),
            dst_center: (dst_cols as f64 / 2.0, dst_rows as f64 / 2.0),
            src_origin: (0.0, 0.0),
            fill: FillPolicy::Nodata,
        }
    }

    pub fn identity(dims: (usize, usize)) -> Self {
        Self::new(dims, 0.0)
    }

    pub fn is_identity(&self) -> bool {
        self.angle_deg == 0.0
    }

    /// Source-frame position to rotated-frame position.
    pub fn forward(&self, x: f64, y: f64) -> (f64, f64) {
        let (cos, sin) = trig(self.angle_deg);
        let dx = x - self.src_center.0;
        let dy = y - self.src_center.1;
        (
            dx * cos + dy * sin + self.dst_center.0,
            -dx * sin + dy * cos + self.dst_center.1,
        )
    }

    /// Rotated-frame position to source-frame position.
    pub fn inverse(&self, x: f64, y: f64) -> (f64, f64) {
        let (cos, sin) = trig(self.angle_deg);
        let dx = x - self.dst_center.0;
        let dy = y - self.dst_center.1;
        (
            dx * cos - dy * sin + self.src_center.0,
            dx * sin + dy * cos + self.src_center.1,
        )
    }
}

/// Cosine and sine with exact values at multiples of 90 degrees.
fn trig(angle_deg: f64) -> (f64, f64) {
    match angle_deg {
        0.0 => (1.0, 0.0),
        90.0 => (0.0, 1.0),
        180.0 => (-1.0, 0.0),
        270.0 => (0.0, -1.0),
        a => {
            let r = a.to_radians();
            (r.cos(), r.sin())
        }
    }
}

/// Bilinear sample at continuous position `(x, y)` using only valid cells.
/// Returns `None` outside the footprint or when no valid neighbor carries
/// weight.
fn sample_bilinear(grid: &DemGrid, x: f64, y: f64) -> Option<f64> {
    let (nrows, ncols) = grid.dims();
    if !(x >= 0.0 && x < ncols as f64 && y >= 0.0 && y < nrows as f64) {
        return None;
    }
    let u = x - 0.5;
    let v = y - 0.5;
    let c0 = u.floor();
    let r0 = v.floor();
    let fx = u - c0;
    let fy = v - r0;
    let (c0, r0) = (c0 as isize, r0 as isize);

    let mut acc = 0.0;
    let mut wsum = 0.0;
    for (dr, wy) in [(0, 1.0 - fy), (1, fy)] {
        for (dc, wx) in [(0, 1.0 - fx), (1, fx)] {
            let w = wx * wy;
            let (r, c) = (r0 + dr, c0 + dc);
            if w == 0.0 || r < 0 || c < 0 || r as usize >= nrows || c as usize >= ncols {
                continue;
            }
            let z = grid.get(r as usize, c as usize);
            if grid.is_nodata(z) {
                continue;
            }
            acc += w * z;
            wsum += w;
        }
    }
    (wsum > 0.0).then(|| acc / wsum)
}

fn resample(
    source: &DemGrid,
    out_dims: (usize, usize),
    map: impl Fn(f64, f64) -> (f64, f64) + Sync,
) -> Vec<f64> {
    let (nrows, ncols) = out_dims;
    let mut out = vec![source.nodata_value; nrows * ncols];
    out.par_chunks_mut(ncols).enumerate().for_each(|(r, row)| {
        for (c, v) in row.iter_mut().enumerate() {
            let (x, y) = map(c as f64 + 0.5, r as f64 + 0.5);
            if let Some(z) = sample_bilinear(source, x, y) {
                *v = z;
            }
        }
    });
    out
}

/// Rotates `grid` so rows follow the radar look direction.
///
/// Cells are filled by inverse mapping with bilinear interpolation over valid
/// neighbors; cells outside the source footprint become nodata.
pub fn rotate_to_radar(grid: &DemGrid, azimuth_deg: f64) -> (DemGrid, RotationTransform) {
    let mut t = RotationTransform::new(grid.dims(), azimuth_deg);
    t.src_origin = (grid.xll_m, grid.yll_m);
    if t.is_identity() {
        return (grid.clone(), t);
    }
    let values = resample(grid, t.dst_dims, |x, y| t.inverse(x, y));
    let rotated = DemGrid::new(
        t.dst_dims.0,
        t.dst_dims.1,
        grid.cell_size_m,
        grid.nodata_value,
        values,
    )
    .expect("resampled values are finite or nodata");
    (rotated, t)
}

/// Brings a rotated grid back into the source frame (bilinear).
pub fn rotate_grid_back(rotated: &DemGrid, t: &RotationTransform) -> Result<DemGrid> {
    if rotated.dims() != t.dst_dims {
        return Err(Error::Contract(format!(
            "grid {:?} does not match rotated frame {:?}",
            rotated.dims(),
            t.dst_dims
        )));
    }
    let values = if t.is_identity() {
        rotated.elevations().to_vec()
    } else {
        resample(rotated, t.src_dims, |x, y| t.forward(x, y))
    };
    Ok(DemGrid::new(
        t.src_dims.0,
        t.src_dims.1,
        rotated.cell_size_m,
        rotated.nodata_value,
        values,
    )?
    .with_origin(t.src_origin.0, t.src_origin.1))
}

/// Brings a radar-frame mask back to the source frame by nearest-neighbor
/// lookup. Source cells that land outside the rotated frame are INVALID.
pub fn rotate_mask_back(mask: &ShadowMask, t: &RotationTransform) -> Result<ShadowMask> {
    if mask.dims() != t.dst_dims {
        return Err(Error::Contract(format!(
            "mask {:?} does not match rotated frame {:?}",
            mask.dims(),
            t.dst_dims
        )));
    }
    if t.is_identity() {
        return Ok(mask.clone());
    }
    let (nrows, ncols) = t.src_dims;
    let (drows, dcols) = t.dst_dims;
    let mut cells = vec![Cell::Invalid; nrows * ncols];
    cells
        .par_chunks_mut(ncols)
        .enumerate()
        .for_each(|(r, row)| {
            for (c, cell) in row.iter_mut().enumerate() {
                let (x, y) = t.forward(c as f64 + 0.5, r as f64 + 0.5);
                if x >= 0.0 && y >= 0.0 && x < dcols as f64 && y < drows as f64 {
                    *cell = mask.get(y as usize, x as usize);
                }
            }
        });
    ShadowMask::new(nrows, ncols, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::DEFAULT_NODATA;

    fn ramp(nrows: usize, ncols: usize) -> DemGrid {
        let z = (0..nrows * ncols).map(|i| i as f64 * 1.5 + 3.0).collect();
        DemGrid::from_elevations(nrows, ncols, 30.0, z).unwrap()
    }

    #[test]
    fn zero_azimuth_is_a_copy() {
        let g = ramp(4, 7);
        let (r, t) = rotate_to_radar(&g, 0.0);
        assert_eq!(r, g);
        assert!(t.is_identity());
        assert_eq!(t.dst_dims, (4, 7));
        let (_, t360) = rotate_to_radar(&g, 360.0);
        assert!(t360.is_identity());
    }

    #[test]
    fn quarter_turn_is_exact_ccw_transpose() {
        let g = ramp(3, 5);
        let (r, t) = rotate_to_radar(&g, 90.0);
        assert_eq!(r.dims(), (5, 3));
        assert_eq!(t.dst_dims, (5, 3));
        for rr in 0..5 {
            for cc in 0..3 {
                assert_eq!(r.get(rr, cc), g.get(cc, 4 - rr));
            }
        }
    }

    #[test]
    fn half_and_three_quarter_turns_are_exact() {
        let g = ramp(4, 6);
        let (r180, _) = rotate_to_radar(&g, 180.0);
        for rr in 0..4 {
            for cc in 0..6 {
                assert_eq!(r180.get(rr, cc), g.get(3 - rr, 5 - cc));
            }
        }
        let (r270, _) = rotate_to_radar(&g, -90.0);
        assert_eq!(r270.dims(), (6, 4));
        for rr in 0..6 {
            for cc in 0..4 {
                assert_eq!(r270.get(rr, cc), g.get(3 - cc, rr));
            }
        }
    }

    #[test]
    fn lattice_rotations_invert_exactly() {
        let mut g = ramp(5, 8);
        let nd = g.nodata_value;
        let mut z = g.clone().into_elevations();
        z[9] = nd;
        g = DemGrid::from_elevations(5, 8, 30.0, z).unwrap();
        for az in [0.0, 90.0, 180.0, 270.0, -180.0, 450.0] {
            let (r, t) = rotate_to_radar(&g, az);
            let back = rotate_grid_back(&r, &t).unwrap();
            assert_eq!(back, g, "azimuth {az}");
        }
    }

    #[test]
    fn frame_is_minimal_bounding_box() {
        let t = RotationTransform::new((10, 20), 30.0);
        let (s, c) = (0.5f64, 3f64.sqrt() / 2.0);
        let w = (20.0 * c + 10.0 * s).ceil() as usize;
        let h = (20.0 * s + 10.0 * c).ceil() as usize;
        assert_eq!(t.dst_dims, (h, w));
        assert_eq!(RotationTransform::new((10, 20), 390.0).dst_dims, t.dst_dims);
        assert_eq!(
            RotationTransform::new((10, 20), -330.0).dst_dims,
            t.dst_dims
        );
    }

    #[test]
    fn corners_outside_footprint_are_nodata() {
        let g = DemGrid::from_elevations(20, 20, 1.0, vec![7.0; 400]).unwrap();
        let (r, _) = rotate_to_radar(&g, 45.0);
        assert!(r.is_nodata(r.get(0, 0)));
        let (nr, nc) = r.dims();
        assert_eq!(r.get(nr / 2, nc / 2), 7.0);
        assert!(r.valid_values().all(|z| (z - 7.0).abs() < 1e-12));
    }

    #[test]
    fn all_nodata_neighbors_yield_nodata() {
        let g = DemGrid::from_elevations(6, 6, 1.0, vec![DEFAULT_NODATA; 36]).unwrap();
        let (r, _) = rotate_to_radar(&g, 30.0);
        assert!(r.elevations().iter().all(|&z| r.is_nodata(z)));
    }

    #[test]
    fn mask_identity_and_class_preservation() {
        let m = ShadowMask::new(
            2,
            3,
            vec![
                Cell::Lit,
                Cell::Shadow,
                Cell::Lit,
                Cell::Invalid,
                Cell::Lit,
                Cell::Shadow,
            ],
        )
        .unwrap();
        let t = RotationTransform::identity((2, 3));
        assert_eq!(rotate_mask_back(&m, &t).unwrap(), m);

        let t = RotationTransform::new((17, 23), 37.0);
        let all = ShadowMask::filled(t.dst_dims.0, t.dst_dims.1, Cell::Shadow);
        let back = rotate_mask_back(&all, &t).unwrap();
        assert_eq!(back.dims(), (17, 23));
        assert_eq!(back.count(Cell::Lit), 0);
    }

    #[test]
    fn mask_quarter_turn_round_trip() {
        let cells: Vec<Cell> = (0..12)
            .map(|i| match i % 3 {
                0 => Cell::Lit,
                1 => Cell::Shadow,
                _ => Cell::Invalid,
            })
            .collect();
        let src = ShadowMask::new(3, 4, cells).unwrap();
        for az in [90.0, -90.0, 180.0] {
            let t = RotationTransform::new((3, 4), az);
            // Forward-rotate by sampling the inverse map with nearest neighbor.
            let (dr, dc) = t.dst_dims;
            let mut fwd = Vec::new();
            for r in 0..dr {
                for c in 0..dc {
                    let (x, y) = t.inverse(c as f64 + 0.5, r as f64 + 0.5);
                    fwd.push(src.get(y as usize, x as usize));
                }
            }
            let rotated = ShadowMask::new(dr, dc, fwd).unwrap();
            assert_eq!(rotate_mask_back(&rotated, &t).unwrap(), src, "azimuth {az}");
        }
    }

    #[test]
    fn mask_dimension_mismatch() {
        let t = RotationTransform::new((3, 4), 90.0);
        let m = ShadowMask::filled(3, 4, Cell::Lit);
        assert!(matches!(rotate_mask_back(&m, &t), Err(Error::Contract(_))));
    }
}
