use thiserror::Error;

/// Process exit codes.
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] sarshadow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use sarshadow::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) => match e {
                E::Io { .. }
                | E::Image(_)
                | E::Header { .. }
                | E::CellCount { .. }
                | E::Format(_) => EXIT_IO,
                E::Spec(_) | E::Geometry(_) | E::SensorBelowTerrain { .. } | E::Contract(_) => {
                    EXIT_DOMAIN
                }
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
