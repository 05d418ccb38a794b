use super::check_below_sensor;
use crate::error::{Error, Result};
use crate::geometry::RadarGeometry;
use crate::raster::Cell;

/// Quadratic reference detector.
///
/// Cell `j` is in shadow iff some valid `i < j` satisfies
/// `(z_i - H) * g_j > (z_j - H) * g_i`, the division-free form of "blocker
/// sight slope exceeds the cell's sight slope". Shares no code with the scan.
pub fn detect_row_oracle(
    z: &[f64],
    nodata: Option<f64>,
    geom: &RadarGeometry,
) -> Result<Vec<Cell>> {
    geom.validate()?;
    if z.is_empty() {
        return Err(Error::Contract("cannot scan an empty row".into()));
    }
    check_below_sensor(z, nodata, geom)?;
    let h = geom.sensor_height_m;
    let valid = |v: f64| Some(v) != nodata;

    let mask = (0..z.len())
        .map(|j| {
            if !valid(z[j]) {
                return Cell::Invalid;
            }
            let gj = geom.ground_range(j);
            let rise_j = z[j] - h;
            let blocked = (0..j)
                .filter(|&i| valid(z[i]))
                .any(|i| (z[i] - h) * gj > rise_j * geom.ground_range(i));
            if blocked {
                Cell::Shadow
            } else {
                Cell::Lit
            }
        })
        .collect();
    Ok(mask)
}
