use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid sweep config: {0}")]
    Config(String),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] qecmetro::QecError),
}

pub type Result<T> = std::result::Result<T, CliError>;
