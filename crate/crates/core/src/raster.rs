//! Raster containers shared by every stage: elevation grids, tri-state shadow
//! masks and 1D profile traces.

use crate::error::{Error, Result};

/// Nodata sentinel used when a grid header does not declare one.
pub const DEFAULT_NODATA: f64 = -9999.0;

/// Georeferenced elevation raster in meters.
///
/// Cells are stored row-major with row 0 the northernmost row. A cell is
/// either a finite elevation or exactly `nodata_value`.
#[derive(Debug, Clone, PartialEq)]
pub struct DemGrid {
    nrows: usize,
    ncols: usize,
    pub cell_size_m: f64,
    pub nodata_value: f64,
    pub xll_m: f64,
    pub yll_m: f64,
    elevations: Vec<f64>,
}

impl DemGrid {
    pub fn new(
        nrows: usize,
        ncols: usize,
        cell_size_m: f64,
        nodata_value: f64,
        elevations: Vec<f64>,
    ) -> Result<Self> {
        if nrows == 0 || ncols == 0 {
            return Err(Error::Contract(format!(
                "grid dimensions must be positive, got {nrows}x{ncols}"
            )));
        }
        if !(cell_size_m.is_finite() && cell_size_m > 0.0) {
            return Err(Error::Contract(format!(
                "cell size must be finite and > 0, got {cell_size_m}"
            )));
        }
        if !nodata_value.is_finite() {
            return Err(Error::Contract(format!(
                "nodata sentinel must be finite, got {nodata_value}"
            )));
        }
        if elevations.len() != nrows * ncols {
            return Err(Error::CellCount {
                expected: nrows * ncols,
                actual: elevations.len(),
            });
        }
        if let Some(i) = elevations.iter().position(|z| !z.is_finite()) {
            return Err(Error::Contract(format!(
                "non-finite elevation at row {}, column {}",
                i / ncols,
                i % ncols
            )));
        }
        Ok(DemGrid {
            nrows,
            ncols,
            cell_size_m,
            nodata_value,
            xll_m: 0.0,
            yll_m: 0.0,
            elevations,
        })
    }

    /// Builds a grid with the default nodata sentinel and origin at (0, 0).
    pub fn from_elevations(
        nrows: usize,
        ncols: usize,
        cell_size_m: f64,
        elevations: Vec<f64>,
    ) -> Result<Self> {
        Self::new(nrows, ncols, cell_size_m, DEFAULT_NODATA, elevations)
    }

    pub fn with_origin(mut self, xll_m: f64, yll_m: f64) -> Self {
        self.xll_m = xll_m;
        self.yll_m = yll_m;
        self
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn elevations(&self) -> &[f64] {
        &self.elevations
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.elevations[row * self.ncols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.elevations[row * self.ncols..(row + 1) * self.ncols]
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.elevations.chunks_exact(self.ncols)
    }

    #[inline]
    pub fn is_nodata(&self, z: f64) -> bool {
        z == self.nodata_value
    }

    pub fn valid_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.elevations
            .iter()
            .copied()
            .filter(move |&z| z != self.nodata_value)
    }

    /// Minimum and maximum over valid cells, `None` if every cell is nodata.
    pub fn valid_range(&self) -> Option<(f64, f64)> {
        self.valid_values().fold(None, |acc, z| match acc {
            None => Some((z, z)),
            Some((lo, hi)) => Some((lo.min(z), hi.max(z))),
        })
    }

    pub fn into_elevations(self) -> Vec<f64> {
        self.elevations
    }
}

/// Per-cell shadow classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Cell {
    Lit = 0,
    Shadow = 1,
    Invalid = 2,
}

/// Tri-state raster aligned with the grid it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowMask {
    nrows: usize,
    ncols: usize,
    cells: Vec<Cell>,
}

impl ShadowMask {
    pub fn new(nrows: usize, ncols: usize, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != nrows * ncols {
            return Err(Error::CellCount {
                expected: nrows * ncols,
                actual: cells.len(),
            });
        }
        Ok(ShadowMask {
            nrows,
            ncols,
            cells,
        })
    }

    pub fn filled(nrows: usize, ncols: usize, cell: Cell) -> Self {
        ShadowMask {
            nrows,
            ncols,
            cells: vec![cell; nrows * ncols],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cells_mut(&mut self) -> &mut [Cell] {
        &mut self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.ncols + col]
    }

    pub fn row(&self, row: usize) -> &[Cell] {
        &self.cells[row * self.ncols..(row + 1) * self.ncols]
    }

    pub fn count(&self, class: Cell) -> usize {
        self.cells.iter().filter(|&&c| c == class).count()
    }

    /// Fraction of all cells classified as shadow.
    pub fn shadow_fraction(&self) -> f64 {
        self.count(Cell::Shadow) as f64 / self.cells.len() as f64
    }
}

/// Data behind a single-row shadow plot: terrain, projection line and mask.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileTrace {
    pub ground_range_m: Vec<f64>,
    pub z_m: Vec<f64>,
    pub l_m: Vec<f64>,
    pub mask: Vec<Cell>,
}

impl ProfileTrace {
    pub fn new(
        ground_range_m: Vec<f64>,
        z_m: Vec<f64>,
        l_m: Vec<f64>,
        mask: Vec<Cell>,
    ) -> Result<Self> {
        let n = ground_range_m.len();
        if n == 0 || z_m.len() != n || l_m.len() != n || mask.len() != n {
            return Err(Error::Contract(format!(
                "profile arrays must share a non-zero length (range {n}, z {}, l {}, mask {})",
                z_m.len(),
                l_m.len(),
                mask.len()
            )));
        }
        if let Some(j) = mask.iter().position(|&c| c == Cell::Invalid) {
            return Err(Error::Contract(format!(
                "profile traces cannot hold nodata cells (column {j})"
            )));
        }
        Ok(ProfileTrace {
            ground_range_m,
            z_m,
            l_m,
            mask,
        })
    }

    pub fn len(&self) -> usize {
        self.z_m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z_m.is_empty()
    }
}
