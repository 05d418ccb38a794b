use std::fs;
use std::path::Path;

use serde::Deserialize;

use sarshadow::raster_io::{
    read_esri_ascii, render_overlay, render_scalar_png, write_elevation_csv, write_esri_ascii,
    write_mask_pbm, write_profile_csv,
};
use sarshadow::{
    detect_pipeline, estimate_target_height, gen_gaussian_mix_2d, gen_profile_1d, incidence_map,
    profile_trace, rotate_grid_back, rotate_to_radar, DemGrid, RadarGeometry, SyntheticSpec,
    DEFAULT_NODATA,
};

use crate::args::GeometryArgs;
use crate::error::{CliError, Result};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryFile {
    sensor_height_m: Option<f64>,
    azimuth_deg: Option<f64>,
    ground_offset_m: Option<f64>,
    cell_size_m: Option<f64>,
}

/// Merges the geometry file with flag overrides. The cell size falls back to
/// the input's, and the ground offset to one cell.
pub fn resolve_geometry(args: &GeometryArgs, default_cell_m: f64) -> Result<RadarGeometry> {
    let file = match &args.geom {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| sarshadow::Error::Io {
                path: path.clone(),
                source: e,
            })?;
            serde_json::from_str::<GeometryFile>(&text)
                .map_err(|e| sarshadow::Error::Format(format!("{}: {e}", path.display())))?
        }
        None => GeometryFile::default(),
    };
    let sensor_height_m = args.height_m.or(file.sensor_height_m).ok_or_else(|| {
        CliError::Usage("sensor height required: pass --height-m or --geom".into())
    })?;
    let cell_size_m = file.cell_size_m.unwrap_or(default_cell_m);
    let geom = RadarGeometry {
        sensor_height_m,
        azimuth_deg: args.azimuth_deg.or(file.azimuth_deg).unwrap_or(0.0),
        ground_offset_m: args
            .ground_offset_m
            .or(file.ground_offset_m)
            .unwrap_or(cell_size_m),
        cell_size_m,
    };
    geom.validate()?;
    Ok(geom)
}

fn window(values: &[f64], flag: &str) -> Result<(f64, f64)> {
    match values {
        [lo, hi] if lo.is_finite() && hi.is_finite() && lo <= hi => Ok((*lo, *hi)),
        _ => Err(CliError::Usage(format!(
            "--{flag} expects MIN MAX with MIN <= MAX"
        ))),
    }
}

fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| {
        sarshadow::Error::Io {
            path: dir.to_path_buf(),
            source: e,
        }
        .into()
    })
}

pub fn synth(spec_path: &Path, out: &Path) -> Result<()> {
    let spec = SyntheticSpec::from_path(spec_path)?;
    if spec.is_profile() {
        let z = gen_profile_1d(&spec)?;
        let cell = spec.cell_size_m();
        let ranges: Vec<f64> = (0..z.len()).map(|j| j as f64 * cell).collect();
        write_elevation_csv(&ranges, &z, out)?;
    } else {
        write_esri_ascii(&gen_gaussian_mix_2d(&spec)?, out)?;
    }
    Ok(())
}

pub fn detect(
    dem_path: &Path,
    out_dir: &Path,
    geometry: &GeometryArgs,
    stretch: Option<&[f64]>,
    emit_intermediates: bool,
) -> Result<String> {
    let stretch = stretch.map(|s| window(s, "stretch")).transpose()?;
    let dem = read_esri_ascii(dem_path)?;
    let geom = resolve_geometry(geometry, dem.cell_size_m)?;
    let out = detect_pipeline(&dem, &geom)?;

    create_dir(out_dir)?;
    write_mask_pbm(&out.mask, out_dir.join("mask.pbm"))?;
    render_overlay(&dem, &out.mask, out_dir.join("overlay.png"), stretch)?;
    if emit_intermediates {
        write_esri_ascii(&out.rotated_dem, out_dir.join("rotated_dem.asc"))?;
        write_mask_pbm(&out.rotated_mask, out_dir.join("rotated_mask.pbm"))?;
    }

    let shadow = out.mask.count(sarshadow::Cell::Shadow);
    Ok(format!(
        "rows={} cols={} shadow_cells={} shadow_fraction={:.6}",
        dem.nrows(),
        dem.ncols(),
        shadow,
        out.mask.shadow_fraction()
    ))
}

pub fn incidence(
    dem_path: &Path,
    out_dir: &Path,
    geometry: &GeometryArgs,
    window_deg: &[f64],
) -> Result<()> {
    let window = window(window_deg, "window")?;
    let dem = read_esri_ascii(dem_path)?;
    let geom = resolve_geometry(geometry, dem.cell_size_m)?;

    let (rotated, t) = rotate_to_radar(&dem, geom.azimuth_deg);
    let map = incidence_map(&rotated, &geom)?.to_grid(dem.cell_size_m, DEFAULT_NODATA)?;
    let mut angles = rotate_grid_back(&map, &t)?.into_elevations();
    for (a, &z) in angles.iter_mut().zip(dem.elevations()) {
        if dem.is_nodata(z) {
            *a = DEFAULT_NODATA;
        }
    }
    let grid = DemGrid::from_elevations(dem.nrows(), dem.ncols(), dem.cell_size_m, angles)?
        .with_origin(dem.xll_m, dem.yll_m);

    create_dir(out_dir)?;
    write_esri_ascii(&grid, out_dir.join("incidence.asc"))?;
    render_scalar_png(&grid, window, out_dir.join("incidence.png"))?;
    Ok(())
}

pub fn profile(
    spec: Option<&Path>,
    dem: Option<&Path>,
    out: &Path,
    geometry: &GeometryArgs,
) -> Result<()> {
    let (z, cell) = match (spec, dem) {
        (Some(spec), None) => {
            let spec = SyntheticSpec::from_path(spec)?;
            if !spec.is_profile() {
                return Err(sarshadow::Error::Spec(
                    "profile needs a SINUSOID, LOGARITHM or GAUSSIAN_1D spec".into(),
                )
                .into());
            }
            (gen_profile_1d(&spec)?, spec.cell_size_m())
        }
        (None, Some(dem)) => {
            let grid = read_esri_ascii(dem)?;
            if grid.nrows() != 1 {
                return Err(sarshadow::Error::Contract(format!(
                    "profile needs a single-row DEM, got {} rows",
                    grid.nrows()
                ))
                .into());
            }
            if let Some(j) = grid.row(0).iter().position(|&v| grid.is_nodata(v)) {
                return Err(sarshadow::Error::Contract(format!(
                    "profile DEM has nodata at column {j}"
                ))
                .into());
            }
            (grid.row(0).to_vec(), grid.cell_size_m)
        }
        _ => {
            return Err(CliError::Usage(
                "pass exactly one of --spec or --dem".into(),
            ))
        }
    };
    let geom = resolve_geometry(geometry, cell)?;
    write_profile_csv(&profile_trace(&z, &geom)?, out)?;
    Ok(())
}

pub fn height(shadow_len_m: f64, range_m: f64, height_m: f64) -> Result<String> {
    if !(shadow_len_m.is_finite() && shadow_len_m >= 0.0) {
        return Err(CliError::Usage("--shadow-len-m must be >= 0".into()));
    }
    if !(range_m.is_finite() && range_m > 0.0) {
        return Err(CliError::Usage("--range-m must be > 0".into()));
    }
    if !(height_m.is_finite() && height_m > 0.0) {
        return Err(CliError::Usage("--height-m must be > 0".into()));
    }
    let h = estimate_target_height(shadow_len_m, range_m, height_m)?;
    Ok(format_4_significant(h))
}

/// Fixed-point text with four significant digits, e.g. `0.000`, `50.00`.
pub fn format_4_significant(v: f64) -> String {
    if v == 0.0 {
        return "0.000".into();
    }
    let rounded: f64 = format!("{v:.3e}").parse().expect("scientific text parses");
    let magnitude = rounded.abs().log10().floor() as i32;
    let decimals = (3 - magnitude).max(0) as usize;
    format!("{rounded:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_significant_digits() {
        assert_eq!(format_4_significant(0.0), "0.000");
        assert_eq!(format_4_significant(50.0), "50.00");
        assert_eq!(format_4_significant(9.99961), "10.00");
        assert_eq!(format_4_significant(0.0123456), "0.01235");
        assert_eq!(format_4_significant(1234.56), "1235");
        assert_eq!(format_4_significant(12345.6), "12350");
    }

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        fs::write(
            &path,
            r#"{"sensor_height_m": 5000, "azimuth_deg": 10, "ground_offset_m": 90, "cell_size_m": 30}"#,
        )
        .unwrap();
        let args = GeometryArgs {
            geom: Some(path),
            height_m: Some(7000.0),
            azimuth_deg: None,
            ground_offset_m: None,
        };
        let g = resolve_geometry(&args, 10.0).unwrap();
        assert_eq!(
            (
                g.sensor_height_m,
                g.azimuth_deg,
                g.ground_offset_m,
                g.cell_size_m
            ),
            (7000.0, 10.0, 90.0, 30.0)
        );
    }

    #[test]
    fn defaults_come_from_input() {
        let args = GeometryArgs {
            height_m: Some(400.0),
            ..Default::default()
        };
        let g = resolve_geometry(&args, 25.0).unwrap();
        assert_eq!(
            (g.azimuth_deg, g.ground_offset_m, g.cell_size_m),
            (0.0, 25.0, 25.0)
        );
        assert!(matches!(
            resolve_geometry(&GeometryArgs::default(), 25.0),
            Err(CliError::Usage(_))
        ));
    }
}
