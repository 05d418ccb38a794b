use std::ffi::OsString;
use std::path::{Path, PathBuf};

use super::write_text;
use crate::error::Result;
use crate::raster::{Cell, ShadowMask};

/// `<path>.invalid`, the sidecar listing INVALID cells as `row col` lines.
pub fn invalid_sidecar_path(path: &Path) -> PathBuf {
    let mut s = OsString::from(path.as_os_str());
    s.push(".invalid");
    PathBuf::from(s)
}

/// Plain (P1) PBM body: shadow is 1, lit and invalid are 0.
pub fn to_pbm(mask: &ShadowMask) -> String {
    let mut out = String::with_capacity(mask.cells().len() * 2 + 32);
    out.push_str(&format!("P1\n{} {}\n", mask.ncols(), mask.nrows()));
    for r in 0..mask.nrows() {
        let line: Vec<&str> = mask
            .row(r)
            .iter()
            .map(|&c| if c == Cell::Shadow { "1" } else { "0" })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_mask_pbm(mask: &ShadowMask, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    write_text(path, &to_pbm(mask))?;

    let mut sidecar = String::new();
    for (i, _) in mask
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == Cell::Invalid)
    {
        sidecar.push_str(&format!("{} {}\n", i / mask.ncols(), i % mask.ncols()));
    }
    write_text(&invalid_sidecar_path(path), &sidecar)
}
