use std::path::Path;

use image::{Rgb, RgbImage};

use crate::error::{Error, Result};
use crate::raster::{Cell, DemGrid, ShadowMask};

pub const SHADOW_RGB: [u8; 3] = [0, 0, 255];
pub const INVALID_RGB: [u8; 3] = [255, 0, 0];

/// Linear stretch of `value` over `[lo, hi]` to 0..=255, clamped.
/// A degenerate window (`hi <= lo`) maps everything to mid-gray 128.
pub fn gray_level(value: f64, lo: f64, hi: f64) -> u8 {
    if hi <= lo {
        return 128;
    }
    (255.0 * (value - lo) / (hi - lo)).round().clamp(0.0, 255.0) as u8
}

fn check_window(window: (f64, f64)) -> Result<()> {
    let (lo, hi) = window;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::Contract(format!(
            "stretch window [{lo}, {hi}] must be finite and ordered"
        )));
    }
    Ok(())
}

fn image_dims(nrows: usize, ncols: usize) -> Result<(u32, u32)> {
    match (u32::try_from(ncols), u32::try_from(nrows)) {
        (Ok(w), Ok(h)) => Ok((w, h)),
        _ => Err(Error::Contract(format!(
            "{nrows}x{ncols} raster exceeds image limits"
        ))),
    }
}

/// DEM in grayscale with shadow cells blue and invalid cells red.
pub fn overlay_image(
    grid: &DemGrid,
    mask: &ShadowMask,
    stretch: Option<(f64, f64)>,
) -> Result<RgbImage> {
    if grid.dims() != mask.dims() {
        return Err(Error::Contract(format!(
            "mask {:?} does not match grid {:?}",
            mask.dims(),
            grid.dims()
        )));
    }
    let (lo, hi) = match stretch {
        Some(w) => {
            check_window(w)?;
            w
        }
        None => grid.valid_range().unwrap_or((0.0, 0.0)),
    };
    let (w, h) = image_dims(grid.nrows(), grid.ncols())?;
    let mut img = RgbImage::new(w, h);
    for (i, (&z, &class)) in grid.elevations().iter().zip(mask.cells()).enumerate() {
        let px = match class {
            Cell::Shadow => SHADOW_RGB,
            Cell::Invalid => INVALID_RGB,
            Cell::Lit if grid.is_nodata(z) => {
                return Err(Error::Contract(format!(
                    "lit mask cell over nodata elevation at row {}, column {}",
                    i / grid.ncols(),
                    i % grid.ncols()
                )))
            }
            Cell::Lit => {
                let g = gray_level(z, lo, hi);
                [g, g, g]
            }
        };
        img.put_pixel(
            (i % grid.ncols()) as u32,
            (i / grid.ncols()) as u32,
            Rgb(px),
        );
    }
    Ok(img)
}

pub fn render_overlay(
    grid: &DemGrid,
    mask: &ShadowMask,
    path: impl AsRef<Path>,
    stretch: Option<(f64, f64)>,
) -> Result<()> {
    save_png(&overlay_image(grid, mask, stretch)?, path.as_ref())
}

/// Grayscale rendering of a scalar grid over a fixed window; nodata is red.
pub fn scalar_image(grid: &DemGrid, window: (f64, f64)) -> Result<RgbImage> {
    check_window(window)?;
    let (w, h) = image_dims(grid.nrows(), grid.ncols())?;
    let mut img = RgbImage::new(w, h);
    for (i, &v) in grid.elevations().iter().enumerate() {
        let px = if grid.is_nodata(v) {
            INVALID_RGB
        } else {
            let g = gray_level(v, window.0, window.1);
            [g, g, g]
        };
        img.put_pixel(
            (i % grid.ncols()) as u32,
            (i / grid.ncols()) as u32,
            Rgb(px),
        );
    }
    Ok(img)
}

pub fn render_scalar_png(grid: &DemGrid, window: (f64, f64), path: impl AsRef<Path>) -> Result<()> {
    save_png(&scalar_image(grid, window)?, path.as_ref())
}

fn save_png(img: &RgbImage, path: &Path) -> Result<()> {
    img.save_with_format(path, image::ImageFormat::Png)
        .map_err(|e| match e {
            image::ImageError::IoError(io) => Error::io(path, io),
            other => Error::Image(other),
        })
}
