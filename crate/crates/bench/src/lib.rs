//! Deterministic terrain fixtures shared by the benchmarks.

use sarshadow::{gen_gaussian_mix_2d, DemGrid, GaussianComponent, RadarGeometry, SyntheticSpec};

pub const CELL_M: f64 = 30.0;

/// A grid of ridges and peaks whose relief does not depend on size, so
/// per-cell costs are comparable across scales.
pub fn hills(nrows: usize, ncols: usize) -> DemGrid {
    let (h, w) = (nrows as f64 * CELL_M, ncols as f64 * CELL_M);
    let params = (0..12)
        .map(|i| {
            let t = i as f64;
            GaussianComponent {
                a: 120.0 + 450.0 * (t * 1.7).sin().abs(),
                cx: w * ((t * 0.618_034).fract()),
                cy: h * ((t * 0.414_214 + 0.1).fract()),
                sx: 10.0 * CELL_M + 4.0 * t * CELL_M,
                sy: Some(14.0 * CELL_M + 3.0 * t * CELL_M),
            }
        })
        .collect();
    gen_gaussian_mix_2d(&SyntheticSpec::GaussianMix2d {
        nrows,
        ncols,
        cell_size_m: CELL_M,
        params,
    })
    .expect("fixture spec is valid")
}

/// Low enough over `grid` that a good share of cells fall in shadow.
pub fn low_geometry(grid: &DemGrid) -> RadarGeometry {
    let top = grid.valid_range().map_or(0.0, |(_, hi)| hi);
    RadarGeometry::new(top + 400.0, grid.cell_size_m).expect("positive height and cell")
}
