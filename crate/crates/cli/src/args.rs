use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "sarshadow", version, about = "Radar shadow masks from DEMs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a synthetic DEM (.asc) or 1D profile (.csv) from a JSON spec.
    Synth {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Detect radar shadows on a DEM and write mask.pbm and overlay.png.
    #[command(allow_negative_numbers = true)]
    Detect {
        #[arg(long)]
        dem: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Fixed elevation range for the grayscale stretch.
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
        stretch: Option<Vec<f64>>,
        /// Also write rotated_dem.asc and rotated_mask.pbm.
        #[arg(long)]
        emit_intermediates: bool,
    },
    /// Write the incidence-angle map as incidence.asc and incidence.png.
    #[command(allow_negative_numbers = true)]
    Incidence {
        #[arg(long)]
        dem: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Angle window (degrees) mapped from black to white.
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], default_values_t = [30.0, 36.0])]
        window: Vec<f64>,
    },
    /// Scan a single profile and write terrain, projection line and mask as CSV.
    #[command(allow_negative_numbers = true)]
    Profile {
        #[arg(long, conflicts_with = "dem", required_unless_present = "dem")]
        spec: Option<PathBuf>,
        #[arg(long)]
        dem: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Estimate target height from a shadow length.
    #[command(allow_negative_numbers = true)]
    Height {
        #[arg(long = "shadow-len-m")]
        shadow_len_m: f64,
        #[arg(long = "range-m")]
        range_m: f64,
        #[arg(long = "height-m")]
        height_m: f64,
    },
}

/// Geometry from a JSON file and/or flags; flags win.
#[derive(Debug, Clone, Default, Args)]
pub struct GeometryArgs {
    /// JSON file with sensor_height_m, azimuth_deg, ground_offset_m, cell_size_m.
    #[arg(long)]
    pub geom: Option<PathBuf>,
    #[arg(long = "height-m")]
    pub height_m: Option<f64>,
    #[arg(long = "azimuth-deg")]
    pub azimuth_deg: Option<f64>,
    #[arg(long = "ground-offset-m")]
    pub ground_offset_m: Option<f64>,
}
