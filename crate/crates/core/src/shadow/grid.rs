use rayon::prelude::*;

use super::scan::scan_row_into;
use crate::error::{Error, Result};
use crate::geometry::{rotate_mask_back, rotate_to_radar, RadarGeometry, RotationTransform};
use crate::raster::{Cell, DemGrid, ShadowMask};

/// How rows are distributed. Both produce identical masks: rows share no
/// state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Row-by-row detection on a grid whose rows already follow the look
/// direction. Runs rows in parallel.
pub fn detect_grid(grid: &DemGrid, geom: &RadarGeometry) -> Result<ShadowMask> {
    detect_grid_with(grid, geom, Execution::Parallel)
}

pub fn detect_grid_with(
    grid: &DemGrid,
    geom: &RadarGeometry,
    execution: Execution,
) -> Result<ShadowMask> {
    geom.validate()?;
    let h = geom.sensor_height_m;
    let ncols = grid.ncols();
    if let Some(i) = grid
        .elevations()
        .iter()
        .position(|&z| !grid.is_nodata(z) && z >= h)
    {
        return Err(Error::SensorBelowTerrain {
            row: Some(i / ncols),
            col: i % ncols,
            elevation: grid.elevations()[i],
            sensor_height: h,
        });
    }

    let nodata = Some(grid.nodata_value);
    let mut cells = vec![Cell::Lit; grid.elevations().len()];
    let rows = grid.elevations().chunks_exact(ncols);
    match execution {
        Execution::Sequential => cells
            .chunks_exact_mut(ncols)
            .zip(rows)
            .for_each(|(out, z)| scan_row_into(z, nodata, geom, out)),
        Execution::Parallel => cells
            .par_chunks_exact_mut(ncols)
            .zip(grid.elevations().par_chunks_exact(ncols))
            .for_each(|(out, z)| scan_row_into(z, nodata, geom, out)),
    }
    ShadowMask::new(grid.nrows(), ncols, cells)
}

/// Intermediate and final products of the rotate, detect, rotate-back chain.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    /// Mask in the input grid's frame.
    pub mask: ShadowMask,
    pub rotated_dem: DemGrid,
    pub rotated_mask: ShadowMask,
    pub transform: RotationTransform,
}

/// Rotates the DEM by `geom.azimuth_deg`, detects shadows row by row and
/// returns the mask to the original frame. Cells that are nodata in the input
/// are INVALID in the output.
pub fn detect_pipeline(grid: &DemGrid, geom: &RadarGeometry) -> Result<PipelineOutput> {
    geom.validate()?;
    let (rotated_dem, transform) = rotate_to_radar(grid, geom.azimuth_deg);
    let rotated_mask = detect_grid(&rotated_dem, geom)?;
    let mut mask = rotate_mask_back(&rotated_mask, &transform)?;
    for (cell, &z) in mask.cells_mut().iter_mut().zip(grid.elevations()) {
        if grid.is_nodata(z) {
            *cell = Cell::Invalid;
        }
    }
    Ok(PipelineOutput {
        mask,
        rotated_dem,
        rotated_mask,
        transform,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shadow::detect_row;

    fn bumpy(nrows: usize, ncols: usize) -> DemGrid {
        let z = (0..nrows * ncols)
            .map(|i| {
                let (r, c) = ((i / ncols) as f64, (i % ncols) as f64);
                (60.0 * (c * 0.37).sin() * (r * 0.21).cos()).abs() + 5.0
            })
            .collect();
        DemGrid::from_elevations(nrows, ncols, 10.0, z).unwrap()
    }

    #[test]
    fn identical_rows_give_identical_mask_rows() {
        let row: Vec<f64> = (0..50).map(|j| ((j * 7 % 13) as f64) * 9.0).collect();
        let z: Vec<f64> = std::iter::repeat_n(row.clone(), 6).flatten().collect();
        let grid = DemGrid::from_elevations(6, 50, 1.0, z).unwrap();
        let geom = RadarGeometry::new(200.0, 1.0).unwrap();
        let mask = detect_grid(&grid, &geom).unwrap();
        let single = detect_row(&row, None, &geom).unwrap().mask;
        assert!(single.contains(&Cell::Shadow));
        for r in 0..6 {
            assert_eq!(mask.row(r), single.as_slice());
        }
    }

    #[test]
    fn scan_direction_is_along_rows() {
        let mut z = vec![0.0; 20 * 20];
        for c in 0..20 {
            z[5 * 20 + c] = 80.0; // a ridge across row 5
        }
        let grid = DemGrid::from_elevations(20, 20, 1.0, z.clone()).unwrap();
        let geom = RadarGeometry::new(100.0, 1.0).unwrap();
        let across = detect_grid(&grid, &geom).unwrap();
        // A ridge lying along a row casts nothing when scanning along rows.
        assert_eq!(across.count(Cell::Shadow), 0);

        let mut t = vec![0.0; 400];
        for r in 0..20 {
            for c in 0..20 {
                t[c * 20 + r] = z[r * 20 + c];
            }
        }
        let transposed = DemGrid::from_elevations(20, 20, 1.0, t).unwrap();
        assert!(detect_grid(&transposed, &geom).unwrap().count(Cell::Shadow) > 0);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let grid = bumpy(64, 97);
        let geom = RadarGeometry::new(120.0, 10.0).unwrap();
        let a = detect_grid_with(&grid, &geom, Execution::Sequential).unwrap();
        let b = detect_grid_with(&grid, &geom, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.count(Cell::Shadow) > 0);
    }

    #[test]
    fn error_carries_row_index() {
        let mut z = vec![0.0; 12];
        z[7] = 500.0;
        let grid = DemGrid::from_elevations(3, 4, 1.0, z).unwrap();
        let geom = RadarGeometry::new(100.0, 1.0).unwrap();
        match detect_grid(&grid, &geom) {
            Err(Error::SensorBelowTerrain { row, col, .. }) => assert_eq!((row, col), (Some(1), 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_azimuth_pipeline_is_plain_detection() {
        let grid = bumpy(30, 40);
        let geom = RadarGeometry::new(150.0, 10.0).unwrap();
        let out = detect_pipeline(&grid, &geom).unwrap();
        assert_eq!(out.mask, detect_grid(&grid, &geom).unwrap());
        assert_eq!(out.rotated_dem, grid);
    }

    #[test]
    fn quarter_turn_pipeline_is_exact() {
        let grid = bumpy(30, 40);
        let geom = RadarGeometry::new(150.0, 10.0).unwrap().with_azimuth(90.0);
        let out = detect_pipeline(&grid, &geom).unwrap();
        let (rotated, t) = rotate_to_radar(&grid, 90.0);
        assert_eq!(out.rotated_dem, rotated);
        let direct = detect_grid(&rotated, &geom).unwrap();
        assert_eq!(out.rotated_mask, direct);
        assert!(direct.count(Cell::Shadow) > 0);
        // rotated-frame cell (r, c) comes from source cell (c, ncols - 1 - r)
        for r in 0..40 {
            for c in 0..30 {
                assert_eq!(out.mask.get(c, 39 - r), direct.get(r, c));
            }
        }
        assert_eq!(t.dst_dims, (40, 30));
    }

    #[test]
    fn pipeline_marks_source_nodata_invalid() {
        let mut z = bumpy(25, 25).into_elevations();
        z[12 * 25 + 12] = -9999.0;
        let grid = DemGrid::from_elevations(25, 25, 10.0, z).unwrap();
        let geom = RadarGeometry::new(150.0, 10.0).unwrap().with_azimuth(33.0);
        let out = detect_pipeline(&grid, &geom).unwrap();
        assert_eq!(out.mask.get(12, 12), Cell::Invalid);
        assert_eq!(out.mask.dims(), grid.dims());
    }
}
