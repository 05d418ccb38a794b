//! Projection-line shadow detection.
//!
//! Each radar-aligned row is scanned away from the sensor while tracking the
//! steepest sight slope seen so far. The grazing ray through that blocker,
//! `l(g) = a * g + H`, is the projection line; a cell whose own sight slope
//! falls below it is hidden from the sensor.

mod estimate;
mod grid;
mod oracle;
mod scan;

pub use estimate::{estimate_target_height, shadow_run_length};
pub use grid::{detect_grid, detect_grid_with, detect_pipeline, Execution, PipelineOutput};
pub use oracle::detect_row_oracle;
pub use scan::{detect_row, profile_trace, RowScan, RowScanState};

use crate::error::{Error, Result};
use crate::geometry::RadarGeometry;

/// Rejects rows with a valid elevation at or above the sensor.
pub(crate) fn check_below_sensor(
    z: &[f64],
    nodata: Option<f64>,
    geom: &RadarGeometry,
) -> Result<()> {
    let h = geom.sensor_height_m;
    match z.iter().position(|&v| Some(v) != nodata && v >= h) {
        Some(col) => Err(Error::SensorBelowTerrain {
            row: None,
            col,
            elevation: z[col],
            sensor_height: h,
        }),
        None => Ok(()),
    }
}
