//! File formats: ESRI ASCII grids, plain PBM masks, PNG overlays and CSV
//! profile traces.

mod csv;
mod esri;
mod pbm;
mod render;

pub use self::csv::{write_elevation_csv, write_profile_csv};
pub use esri::{parse_esri_ascii, read_esri_ascii, to_esri_ascii, write_esri_ascii};
pub use pbm::{invalid_sidecar_path, to_pbm, write_mask_pbm};
pub use render::{
    gray_level, overlay_image, render_overlay, render_scalar_png, scalar_image, INVALID_RGB,
    SHADOW_RGB,
};

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Formats `v` rounded to `digits` significant decimal digits, using the
/// shortest text that parses back to the rounded value.
pub fn format_significant(v: f64, digits: usize) -> String {
    debug_assert!(digits >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, v)
        .parse()
        .expect("scientific formatting always parses");
    let a = rounded.abs();
    if (1e-4..1e15).contains(&a) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub(crate) fn write_text(path: &Path, body: &str) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    w.write_all(body.as_bytes())
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::format_significant;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.0, 6), "0");
        assert_eq!(format_significant(-0.0, 6), "0");
        assert_eq!(format_significant(123.456789, 6), "123.457");
        assert_eq!(format_significant(-9999.0, 6), "-9999");
        assert_eq!(format_significant(1234567.0, 6), "1234570");
        assert_eq!(format_significant(2.5e-7, 6), "2.5e-7");
        assert_eq!(format_significant(50.0, 4), "50");
    }
}
