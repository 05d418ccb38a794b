use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image encoding failed: {0}")]
    Image(#[from] image::ImageError),

    /// A header key in an ESRI ASCII grid is missing, unknown or unparseable.
    #[error("malformed header key `{key}`: {reason}")]
    Header { key: String, reason: String },

    #[error("cell count mismatch: expected {expected} values, found {actual}")]
    CellCount { expected: usize, actual: usize },

    #[error("format error: {0}")]
    Format(String),

    #[error("invalid synthetic spec: {0}")]
    Spec(String),

    #[error("invalid radar geometry: {0}")]
    Geometry(String),

    /// A valid elevation reaches or exceeds the sensor altitude.
    #[error("sensor below terrain at {}: elevation {elevation} m >= sensor height {sensor_height} m", fmt_cell(*row, *col))]
    SensorBelowTerrain {
        row: Option<usize>,
        col: usize,
        elevation: f64,
        sensor_height: f64,
    },

    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn header(key: &str, reason: impl Into<String>) -> Self {
        Error::Header {
            key: key.to_string(),
            reason: reason.into(),
        }
    }
}

fn fmt_cell(row: Option<usize>, col: usize) -> String {
    match row {
        Some(r) => format!("row {r}, column {col}"),
        None => format!("column {col}"),
    }
}
