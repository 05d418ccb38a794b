//! Radar viewing geometry: sensor parameters, incidence angles and rotation
//! of DEMs into (and masks out of) radar row alignment.

mod rotate;

pub use rotate::{
    rotate_grid_back, rotate_mask_back, rotate_to_radar, FillPolicy, RotationTransform,
};

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::raster::DemGrid;

/// Sensor placement for a rotated DEM.
///
/// The sensor sits above ground coordinate 0 of every row at
/// `sensor_height_m` above the z = 0 datum. Column `j` lies at ground range
/// `ground_offset_m + j * cell_size_m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadarGeometry {
    pub sensor_height_m: f64,
    pub azimuth_deg: f64,
    pub ground_offset_m: f64,
    pub cell_size_m: f64,
}

impl RadarGeometry {
    /// Zero azimuth and a ground offset of one cell.
    pub fn new(sensor_height_m: f64, cell_size_m: f64) -> Result<Self> {
        let geom = RadarGeometry {
            sensor_height_m,
            azimuth_deg: 0.0,
            ground_offset_m: cell_size_m,
            cell_size_m,
        };
        geom.validate()?;
        Ok(geom)
    }

    pub fn with_azimuth(mut self, azimuth_deg: f64) -> Self {
        self.azimuth_deg = azimuth_deg;
        self
    }

    pub fn with_ground_offset(mut self, ground_offset_m: f64) -> Self {
        self.ground_offset_m = ground_offset_m;
        self
    }

    pub fn with_sensor_height(mut self, sensor_height_m: f64) -> Self {
        self.sensor_height_m = sensor_height_m;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::Geometry(format!(
                    "{name} must be finite and > 0, got {v}"
                )))
            }
        };
        positive("sensor_height_m", self.sensor_height_m)?;
        positive("ground_offset_m", self.ground_offset_m)?;
        positive("cell_size_m", self.cell_size_m)?;
        if !self.azimuth_deg.is_finite() {
            return Err(Error::Geometry(format!(
                "azimuth_deg must be finite, got {}",
                self.azimuth_deg
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn ground_range(&self, col: usize) -> f64 {
        self.ground_offset_m + col as f64 * self.cell_size_m
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let geom: RadarGeometry = serde_json::from_str(text)
            .map_err(|e| Error::Format(format!("radar geometry: {e}")))?;
        geom.validate()?;
        Ok(geom)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}

/// Look angle from vertical per cell, in degrees; `None` marks nodata.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceMap {
    pub nrows: usize,
    pub ncols: usize,
    pub angles_deg: Vec<Option<f64>>,
}

impl IncidenceMap {
    pub fn get(&self, row: usize, col: usize) -> Option<f64> {
        self.angles_deg[row * self.ncols + col]
    }

    /// Grid form for serialization; nodata cells take `nodata_value`.
    pub fn to_grid(&self, cell_size_m: f64, nodata_value: f64) -> Result<DemGrid> {
        let values = self
            .angles_deg
            .iter()
            .map(|a| a.unwrap_or(nodata_value))
            .collect();
        DemGrid::new(self.nrows, self.ncols, cell_size_m, nodata_value, values)
    }
}

/// Incidence angle `atan(g / (H - z))` for every cell of a radar-aligned grid.
pub fn incidence_map(grid: &DemGrid, geom: &RadarGeometry) -> Result<IncidenceMap> {
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
    let angles_deg = grid
        .elevations()
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            (!grid.is_nodata(z)).then(|| {
                let g = geom.ground_range(i % ncols);
                (g / (h - z)).atan().to_degrees()
            })
        })
        .collect();
    Ok(IncidenceMap {
        nrows: grid.nrows(),
        ncols,
        angles_deg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::DEFAULT_NODATA;

    #[test]
    fn unit_slope_is_45_degrees() {
        let grid = DemGrid::from_elevations(1, 1, 1.0, vec![0.0]).unwrap();
        let geom = RadarGeometry::new(500.0, 1.0)
            .unwrap()
            .with_ground_offset(500.0);
        let m = incidence_map(&grid, &geom).unwrap();
        assert!((m.get(0, 0).unwrap() - 45.0).abs() < 1e-12);
    }

    #[test]
    fn near_nadir_tends_to_zero() {
        let grid = DemGrid::from_elevations(1, 1, 1.0, vec![0.0]).unwrap();
        let geom = RadarGeometry::new(1000.0, 1.0)
            .unwrap()
            .with_ground_offset(1e-9);
        let theta = incidence_map(&grid, &geom).unwrap().get(0, 0).unwrap();
        assert!(theta > 0.0 && theta < 1e-9);
    }

    #[test]
    fn display_window_thirty_to_thirty_six() {
        let h = 16_000.0;
        let g0 = h * 30f64.to_radians().tan();
        let g1 = h * 36f64.to_radians().tan();
        let n = 101;
        let cell = (g1 - g0) / (n - 1) as f64;
        let grid = DemGrid::from_elevations(1, n, cell, vec![0.0; n]).unwrap();
        let geom = RadarGeometry::new(h, cell).unwrap().with_ground_offset(g0);
        let m = incidence_map(&grid, &geom).unwrap();
        assert!((m.get(0, 0).unwrap() - 30.0).abs() < 1e-9);
        assert!((m.get(0, n - 1).unwrap() - 36.0).abs() < 1e-9);
        let angles: Vec<f64> = m.angles_deg.iter().map(|a| a.unwrap()).collect();
        assert!(angles.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn increases_with_elevation_at_fixed_range() {
        let grid = DemGrid::from_elevations(3, 1, 10.0, vec![0.0, 50.0, 99.0]).unwrap();
        let geom = RadarGeometry::new(100.0, 10.0).unwrap();
        let m = incidence_map(&grid, &geom).unwrap();
        let a: Vec<f64> = m.angles_deg.iter().map(|a| a.unwrap()).collect();
        assert!(a[0] < a[1] && a[1] < a[2] && a[2] < 90.0);
    }

    #[test]
    fn nodata_is_invalid_and_sensor_check_names_cell() {
        let grid =
            DemGrid::from_elevations(2, 2, 1.0, vec![0.0, DEFAULT_NODATA, 5.0, 120.0]).unwrap();
        let geom = RadarGeometry::new(1000.0, 1.0).unwrap();
        let m = incidence_map(&grid, &geom).unwrap();
        assert_eq!(m.get(0, 1), None);
        let low = geom.with_sensor_height(100.0);
        match incidence_map(&grid, &low) {
            Err(Error::SensorBelowTerrain { row, col, .. }) => assert_eq!((row, col), (Some(1), 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn geometry_validation_and_json() {
        assert!(RadarGeometry::new(0.0, 1.0).is_err());
        assert!(RadarGeometry::new(10.0, -1.0).is_err());
        let g = RadarGeometry::from_json(
            r#"{"sensor_height_m":16000,"azimuth_deg":12.5,"ground_offset_m":30,"cell_size_m":30}"#,
        )
        .unwrap();
        assert_eq!(g.azimuth_deg, 12.5);
        assert!(RadarGeometry::from_json(
            r#"{"sensor_height_m":16000,"azimuth_deg":0,"ground_offset_m":0,"cell_size_m":30}"#
        )
        .is_err());
    }
}
