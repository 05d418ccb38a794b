use std::path::Path;

use super::write_text;
use crate::error::{Error, Result};
use crate::raster::{Cell, ProfileTrace};

pub const PROFILE_HEADER: &str = "range_m,z_m,l_m,shadow";

/// Terrain, projection line and 0/1 shadow flag per sample. Values are written
/// in shortest round-trip form, so re-parsing is exact.
pub fn write_profile_csv(trace: &ProfileTrace, path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::from(PROFILE_HEADER);
    out.push('\n');
    for j in 0..trace.len() {
        let shadow = u8::from(trace.mask[j] == Cell::Shadow);
        out.push_str(&format!(
            "{},{},{},{}\n",
            trace.ground_range_m[j], trace.z_m[j], trace.l_m[j], shadow
        ));
    }
    write_text(path.as_ref(), &out)
}

/// Plain `range_m,z_m` series, as produced for synthesized 1D profiles.
pub fn write_elevation_csv(ranges_m: &[f64], z_m: &[f64], path: impl AsRef<Path>) -> Result<()> {
    if ranges_m.len() != z_m.len() {
        return Err(Error::Contract(format!(
            "range and elevation lengths differ ({} vs {})",
            ranges_m.len(),
            z_m.len()
        )));
    }
    let mut out = String::from("range_m,z_m\n");
    for (g, z) in ranges_m.iter().zip(z_m) {
        out.push_str(&format!("{g},{z}\n"));
    }
    write_text(path.as_ref(), &out)
}
