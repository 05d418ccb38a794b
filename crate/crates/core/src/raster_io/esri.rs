use std::path::Path;

use super::{format_significant, write_text};
use crate::error::{Error, Result};
use crate::raster::{DemGrid, DEFAULT_NODATA};

/// Significant digits used for elevations on output.
const ELEVATION_DIGITS: usize = 6;

pub fn read_esri_ascii(path: impl AsRef<Path>) -> Result<DemGrid> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_esri_ascii(&text)
}

#[derive(Default)]
struct Header {
    ncols: Option<usize>,
    nrows: Option<usize>,
    xll: Option<f64>,
    yll: Option<f64>,
    x_center: bool,
    y_center: bool,
    cellsize: Option<f64>,
    nodata: Option<f64>,
}

fn starts_numeric(token: &str) -> bool {
    token
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '.'))
}

fn parse_value<T: std::str::FromStr>(key: &str, value: Option<&str>) -> Result<T> {
    let value = value.ok_or_else(|| Error::header(key, "missing value"))?;
    value
        .parse()
        .map_err(|_| Error::header(key, format!("cannot parse `{value}`")))
}

fn set_once<T>(slot: &mut Option<T>, key: &str, value: T) -> Result<()> {
    if slot.is_some() {
        return Err(Error::header(key, "duplicate key"));
    }
    *slot = Some(value);
    Ok(())
}

/// Parses ESRI ASCII grid text. Header keys are case-insensitive; data rows
/// run north to south.
pub fn parse_esri_ascii(text: &str) -> Result<DemGrid> {
    let mut header = Header::default();
    let mut lines = text.lines().peekable();

    while let Some(line) = lines.peek() {
        let mut tokens = line.split_whitespace();
        let Some(key) = tokens.next() else {
            lines.next();
            continue;
        };
        if starts_numeric(key) {
            break;
        }
        let value = tokens.next();
        if let Some(extra) = tokens.next() {
            return Err(Error::header(key, format!("unexpected token `{extra}`")));
        }
        match key.to_ascii_lowercase().as_str() {
            "ncols" => set_once(&mut header.ncols, key, parse_value(key, value)?)?,
            "nrows" => set_once(&mut header.nrows, key, parse_value(key, value)?)?,
            "xllcorner" => set_once(&mut header.xll, key, parse_value(key, value)?)?,
            "yllcorner" => set_once(&mut header.yll, key, parse_value(key, value)?)?,
            "xllcenter" => {
                set_once(&mut header.xll, key, parse_value(key, value)?)?;
                header.x_center = true;
            }
            "yllcenter" => {
                set_once(&mut header.yll, key, parse_value(key, value)?)?;
                header.y_center = true;
            }
            "cellsize" => set_once(&mut header.cellsize, key, parse_value(key, value)?)?,
            "nodata_value" => set_once(&mut header.nodata, key, parse_value(key, value)?)?,
            _ => return Err(Error::header(key, "unknown header key")),
        }
        lines.next();
    }

    let ncols = header
        .ncols
        .ok_or_else(|| Error::header("ncols", "missing"))?;
    let nrows = header
        .nrows
        .ok_or_else(|| Error::header("nrows", "missing"))?;
    let xll = header
        .xll
        .ok_or_else(|| Error::header("xllcorner", "missing"))?;
    let yll = header
        .yll
        .ok_or_else(|| Error::header("yllcorner", "missing"))?;
    let cellsize = header
        .cellsize
        .ok_or_else(|| Error::header("cellsize", "missing"))?;
    let nodata = header.nodata.unwrap_or(DEFAULT_NODATA);

    if ncols == 0 {
        return Err(Error::header("ncols", "must be positive"));
    }
    if nrows == 0 {
        return Err(Error::header("nrows", "must be positive"));
    }
    if !(cellsize.is_finite() && cellsize > 0.0) {
        return Err(Error::header("cellsize", "must be finite and > 0"));
    }
    if !xll.is_finite() {
        return Err(Error::header("xllcorner", "must be finite"));
    }
    if !yll.is_finite() {
        return Err(Error::header("yllcorner", "must be finite"));
    }
    if !nodata.is_finite() {
        return Err(Error::header("NODATA_value", "must be finite"));
    }

    let expected = nrows * ncols;
    let mut elevations = Vec::with_capacity(expected);
    let mut actual = 0usize;
    for token in lines.flat_map(str::split_whitespace) {
        actual += 1;
        if actual > expected {
            continue;
        }
        let z: f64 = token
            .parse()
            .map_err(|_| Error::Format(format!("cannot parse elevation `{token}`")))?;
        if !z.is_finite() {
            return Err(Error::Format(format!("non-finite elevation `{token}`")));
        }
        elevations.push(z);
    }
    if actual != expected {
        return Err(Error::CellCount { expected, actual });
    }

    let half = cellsize / 2.0;
    let xll = if header.x_center { xll - half } else { xll };
    let yll = if header.y_center { yll - half } else { yll };
    Ok(DemGrid::new(nrows, ncols, cellsize, nodata, elevations)?.with_origin(xll, yll))
}

/// Serializes a grid. Header values are written exactly; elevations are
/// rounded to six significant digits and nodata cells reuse the header token.
pub fn to_esri_ascii(grid: &DemGrid) -> String {
    let nodata_token = format!("{}", grid.nodata_value);
    let mut out = String::with_capacity(grid.elevations().len() * 8 + 128);
    out.push_str(&format!("ncols {}\n", grid.ncols()));
    out.push_str(&format!("nrows {}\n", grid.nrows()));
    out.push_str(&format!("xllcorner {}\n", grid.xll_m));
    out.push_str(&format!("yllcorner {}\n", grid.yll_m));
    out.push_str(&format!("cellsize {}\n", grid.cell_size_m));
    out.push_str(&format!("NODATA_value {nodata_token}\n"));
    for row in grid.rows() {
        for (j, &z) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            if grid.is_nodata(z) {
                out.push_str(&nodata_token);
            } else {
                out.push_str(&format_significant(z, ELEVATION_DIGITS));
            }
        }
        out.push('\n');
    }
    out
}

pub fn write_esri_ascii(grid: &DemGrid, path: impl AsRef<Path>) -> Result<()> {
    write_text(path.as_ref(), &to_esri_ascii(grid))
}
