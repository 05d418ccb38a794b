//! Radar shadow masks from digital elevation models.
//!
//! A DEM is rotated so each row runs along the radar line of sight, every row
//! is scanned once against a running projection line from a sensor at height
//! `H`, and the resulting mask is rotated back for display over the terrain.
//!
//! ```
//! use sarshadow::{detect_row, Cell, RadarGeometry};
//!
//! let geom = RadarGeometry::new(100.0, 1.0).unwrap();
//! let scan = detect_row(&[0.0, 50.0, 0.0, 0.0], None, &geom).unwrap();
//! assert_eq!(scan.mask, [Cell::Lit, Cell::Lit, Cell::Shadow, Cell::Lit]);
//! ```

pub mod error;
pub mod geometry;
pub mod raster;
pub mod raster_io;
pub mod shadow;
pub mod synth;

pub use error::{Error, Result};
pub use geometry::{
    incidence_map, rotate_grid_back, rotate_mask_back, rotate_to_radar, IncidenceMap,
    RadarGeometry, RotationTransform,
};
pub use raster::{Cell, DemGrid, ProfileTrace, ShadowMask, DEFAULT_NODATA};
pub use shadow::{
    detect_grid, detect_grid_with, detect_pipeline, detect_row, detect_row_oracle,
    estimate_target_height, profile_trace, shadow_run_length, Execution, PipelineOutput, RowScan,
    RowScanState,
};
pub use synth::{gen_gaussian_mix_2d, gen_profile_1d, GaussianComponent, SyntheticSpec};
