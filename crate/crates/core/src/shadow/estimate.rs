use crate::error::{Error, Result};
use crate::raster::Cell;

/// Height of a wall from the shadow it casts on level ground.
///
/// A wall of height `h` at ground range `R` seen from altitude `H` shadows
/// `L = R h / (H - h)` meters behind it; this inverts that relation:
/// `h = L H / (R + L)`.
pub fn estimate_target_height(
    shadow_len_m: f64,
    ground_range_m: f64,
    sensor_height_m: f64,
) -> Result<f64> {
    if !(shadow_len_m.is_finite() && shadow_len_m >= 0.0) {
        return Err(Error::Contract(format!(
            "shadow length must be >= 0, got {shadow_len_m}"
        )));
    }
    if !(ground_range_m.is_finite() && ground_range_m > 0.0) {
        return Err(Error::Contract(format!(
            "ground range must be > 0, got {ground_range_m}"
        )));
    }
    if !(sensor_height_m.is_finite() && sensor_height_m > 0.0) {
        return Err(Error::Contract(format!(
            "sensor height must be > 0, got {sensor_height_m}"
        )));
    }
    Ok(shadow_len_m * sensor_height_m / (ground_range_m + shadow_len_m))
}

/// Number of consecutive SHADOW cells starting at column `from`.
pub fn shadow_run_length(mask_row: &[Cell], from: usize) -> usize {
    mask_row
        .iter()
        .skip(from)
        .take_while(|&&c| c == Cell::Shadow)
        .count()
}
