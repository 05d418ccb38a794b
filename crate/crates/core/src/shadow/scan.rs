use super::check_below_sensor;
use crate::error::{Error, Result};
use crate::geometry::RadarGeometry;
use crate::raster::{Cell, ProfileTrace};

/// Running state of a row scan: the slope of the current projection line and
/// the next column to visit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowScanState {
    slope: f64,
    col: usize,
}

impl Default for RowScanState {
    fn default() -> Self {
        Self::new()
    }
}

impl RowScanState {
    pub fn new() -> Self {
        RowScanState {
            slope: f64::NEG_INFINITY,
            col: 0,
        }
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn col(&self) -> usize {
        self.col
    }

    /// Classifies the next valid cell given its sight slope. A grazing cell
    /// (slope equal to the projection line) is lit.
    #[inline]
    pub fn step(&mut self, sight_slope: f64) -> Cell {
        self.col += 1;
        if sight_slope >= self.slope {
            self.slope = sight_slope;
            Cell::Lit
        } else {
            Cell::Shadow
        }
    }

    /// Passes over a nodata cell without touching the projection line.
    #[inline]
    pub fn skip(&mut self) {
        self.col += 1;
    }
}

/// Mask and projection line for one row.
#[derive(Debug, Clone, PartialEq)]
pub struct RowScan {
    pub mask: Vec<Cell>,
    /// `l_j = a_j * g_j + H`, evaluated after the update at column `j`;
    /// `-inf` until the first valid cell.
    pub projection_m: Vec<f64>,
}

/// Hot loop shared by row and grid detection. Assumes the row was validated.
#[inline]
pub(crate) fn scan_row_into(
    z: &[f64],
    nodata: Option<f64>,
    geom: &RadarGeometry,
    out: &mut [Cell],
) {
    let h = geom.sensor_height_m;
    let mut state = RowScanState::new();
    for (j, (&zj, cell)) in z.iter().zip(out.iter_mut()).enumerate() {
        if Some(zj) == nodata {
            state.skip();
            *cell = Cell::Invalid;
        } else {
            *cell = state.step((zj - h) / geom.ground_range(j));
        }
    }
}

/// Scans one radar-aligned row in O(n) time.
///
/// Cells equal to `nodata` are INVALID: they neither cast nor receive shadow.
pub fn detect_row(z: &[f64], nodata: Option<f64>, geom: &RadarGeometry) -> Result<RowScan> {
    geom.validate()?;
    if z.is_empty() {
        return Err(Error::Contract("cannot scan an empty row".into()));
    }
    check_below_sensor(z, nodata, geom)?;

    let h = geom.sensor_height_m;
    let mut state = RowScanState::new();
    let mut mask = Vec::with_capacity(z.len());
    let mut projection_m = Vec::with_capacity(z.len());
    for (j, &zj) in z.iter().enumerate() {
        let g = geom.ground_range(j);
        if Some(zj) == nodata {
            state.skip();
            mask.push(Cell::Invalid);
        } else {
            mask.push(state.step((zj - h) / g));
        }
        projection_m.push(state.slope() * g + h);
    }
    Ok(RowScan { mask, projection_m })
}

/// Scans a profile and packages ranges, terrain, projection line and mask.
pub fn profile_trace(z: &[f64], geom: &RadarGeometry) -> Result<ProfileTrace> {
    let scan = detect_row(z, None, geom)?;
    let ranges = (0..z.len()).map(|j| geom.ground_range(j)).collect();
    ProfileTrace::new(ranges, z.to_vec(), scan.projection_m, scan.mask)
}
