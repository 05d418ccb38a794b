//! Synthetic terrains: 1D sinusoid, logarithm and Gaussian profiles, and 2D
//! Gaussian-mixture DEMs.
//!
//! Specs are JSON documents discriminated by `kind`:
//!
//! ```json
//! { "kind": "GAUSSIAN_MIX_2D", "nrows": 128, "ncols": 128, "cell_size_m": 30,
//!   "params": [ { "a": 150, "cx": 1800, "cy": 1800, "sx": 450, "sy": 450 } ] }
//! ```

use std::f64::consts::TAU;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::raster::DemGrid;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinusoidParams {
    pub amplitude_m: f64,
    pub period_m: f64,
    #[serde(default)]
    pub phase_rad: f64,
    #[serde(default)]
    pub offset_m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogarithmParams {
    pub scale_m: f64,
    pub shift: f64,
}

/// One Gaussian bump. `cy`/`sy` are ignored by 1D profiles; `sy` defaults to
/// `sx` (isotropic) when omitted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianComponent {
    pub a: f64,
    pub cx: f64,
    #[serde(default)]
    pub cy: f64,
    pub sx: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sy: Option<f64>,
}

impl GaussianComponent {
    pub fn isotropic(a: f64, cx: f64, cy: f64, sigma: f64) -> Self {
        GaussianComponent {
            a,
            cx,
            cy,
            sx: sigma,
            sy: None,
        }
    }

    fn sigma_y(&self) -> f64 {
        self.sy.unwrap_or(self.sx)
    }

    fn validate(&self, i: usize, two_d: bool) -> Result<()> {
        if !(self.a.is_finite() && self.a >= 0.0) {
            return Err(Error::Spec(format!(
                "component {i}: amplitude must be >= 0, got {}",
                self.a
            )));
        }
        if !(self.cx.is_finite() && self.cy.is_finite()) {
            return Err(Error::Spec(format!("component {i}: center must be finite")));
        }
        let sigmas: &[f64] = if two_d {
            &[self.sx, self.sigma_y()]
        } else {
            &[self.sx]
        };
        if sigmas.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
            return Err(Error::Spec(format!(
                "component {i}: widths must be > 0, got sx={} sy={:?}",
                self.sx, self.sy
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SyntheticSpec {
    #[serde(rename = "SINUSOID")]
    Sinusoid {
        n: usize,
        cell_size_m: f64,
        params: SinusoidParams,
    },
    #[serde(rename = "LOGARITHM")]
    Logarithm {
        n: usize,
        cell_size_m: f64,
        params: LogarithmParams,
    },
    #[serde(rename = "GAUSSIAN_1D")]
    Gaussian1d {
        n: usize,
        cell_size_m: f64,
        params: Vec<GaussianComponent>,
    },
    #[serde(rename = "GAUSSIAN_MIX_2D")]
    GaussianMix2d {
        nrows: usize,
        ncols: usize,
        cell_size_m: f64,
        params: Vec<GaussianComponent>,
    },
}

impl SyntheticSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(format!("synthetic spec: {e}")))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn is_profile(&self) -> bool {
        !matches!(self, SyntheticSpec::GaussianMix2d { .. })
    }

    pub fn cell_size_m(&self) -> f64 {
        match *self {
            SyntheticSpec::Sinusoid { cell_size_m, .. }
            | SyntheticSpec::Logarithm { cell_size_m, .. }
            | SyntheticSpec::Gaussian1d { cell_size_m, .. }
            | SyntheticSpec::GaussianMix2d { cell_size_m, .. } => cell_size_m,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let cell = self.cell_size_m();
        if !(cell.is_finite() && cell > 0.0) {
            return Err(Error::Spec(format!("cell_size_m must be > 0, got {cell}")));
        }
        match self {
            SyntheticSpec::Sinusoid { n, params, .. } => {
                check_len(*n)?;
                let p = params;
                if !(p.amplitude_m.is_finite() && p.amplitude_m >= 0.0) {
                    return Err(Error::Spec(format!(
                        "amplitude_m must be >= 0, got {}",
                        p.amplitude_m
                    )));
                }
                if !(p.period_m.is_finite() && p.period_m > 0.0) {
                    return Err(Error::Spec(format!(
                        "period_m must be > 0, got {}",
                        p.period_m
                    )));
                }
                if !(p.phase_rad.is_finite() && p.offset_m.is_finite()) {
                    return Err(Error::Spec("phase_rad and offset_m must be finite".into()));
                }
            }
            SyntheticSpec::Logarithm { n, params, .. } => {
                check_len(*n)?;
                if !(params.scale_m.is_finite() && params.scale_m >= 0.0) {
                    return Err(Error::Spec(format!(
                        "scale_m must be >= 0, got {}",
                        params.scale_m
                    )));
                }
                if !(params.shift.is_finite() && params.shift > 0.0) {
                    return Err(Error::Spec(format!(
                        "shift must be > 0, got {}",
                        params.shift
                    )));
                }
            }
            SyntheticSpec::Gaussian1d { n, params, .. } => {
                check_len(*n)?;
                check_components(params, false)?;
            }
            SyntheticSpec::GaussianMix2d {
                nrows,
                ncols,
                params,
                ..
            } => {
                if *nrows == 0 || *ncols == 0 {
                    return Err(Error::Spec(format!(
                        "grid dimensions must be positive, got {nrows}x{ncols}"
                    )));
                }
                check_components(params, true)?;
            }
        }
        Ok(())
    }
}

fn check_len(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Spec(format!(
            "profiles need n >= 2 samples, got {n}"
        )));
    }
    Ok(())
}

fn check_components(params: &[GaussianComponent], two_d: bool) -> Result<()> {
    if params.is_empty() {
        return Err(Error::Spec(
            "at least one Gaussian component is required".into(),
        ));
    }
    params
        .iter()
        .enumerate()
        .try_for_each(|(i, c)| c.validate(i, two_d))
}

/// Samples a 1D profile at `x = j * cell_size_m`.
pub fn gen_profile_1d(spec: &SyntheticSpec) -> Result<Vec<f64>> {
    spec.validate()?;
    let cell = spec.cell_size_m();
    let z = match spec {
        SyntheticSpec::Sinusoid { n, params: p, .. } => (0..*n)
            .map(|j| {
                let x = j as f64 * cell;
                (p.offset_m + p.amplitude_m * (TAU * x / p.period_m + p.phase_rad).sin()).max(0.0)
            })
            .collect(),
        SyntheticSpec::Logarithm { n, params: p, .. } => (0..*n)
            .map(|j| {
                let x = j as f64 * cell;
                p.scale_m * (x / p.shift).ln_1p()
            })
            .collect(),
        SyntheticSpec::Gaussian1d { n, params, .. } => (0..*n)
            .map(|j| {
                let x = j as f64 * cell;
                params
                    .iter()
                    .map(|c| {
                        let d = x - c.cx;
                        c.a * (-(d * d) / (2.0 * c.sx * c.sx)).exp()
                    })
                    .sum()
            })
            .collect(),
        SyntheticSpec::GaussianMix2d { .. } => {
            return Err(Error::Spec(
                "GAUSSIAN_MIX_2D is a 2D spec; use gen_gaussian_mix_2d".into(),
            ))
        }
    };
    Ok(z)
}

/// Evaluates the mixture at cell `(row, col)` located at
/// `x = col * cell_size_m`, `y = row * cell_size_m` (row 0 first).
pub fn gen_gaussian_mix_2d(spec: &SyntheticSpec) -> Result<DemGrid> {
    spec.validate()?;
    let SyntheticSpec::GaussianMix2d {
        nrows,
        ncols,
        cell_size_m,
        params,
    } = spec
    else {
        return Err(Error::Spec(
            "expected a GAUSSIAN_MIX_2D spec for grid synthesis".into(),
        ));
    };
    let (nrows, ncols, cell) = (*nrows, *ncols, *cell_size_m);
    let mut z = vec![0.0; nrows * ncols];
    for (r, row) in z.chunks_exact_mut(ncols).enumerate() {
        let y = r as f64 * cell;
        for (c, v) in row.iter_mut().enumerate() {
            let x = c as f64 * cell;
            *v = params
                .iter()
                .map(|g| {
                    let (sx, sy) = (g.sx, g.sigma_y());
                    let dx = x - g.cx;
                    let dy = y - g.cy;
                    g.a * (-(dx * dx / (2.0 * sx * sx) + dy * dy / (2.0 * sy * sy))).exp()
                })
                .sum();
        }
    }
    DemGrid::from_elevations(nrows, ncols, cell, z)
}
