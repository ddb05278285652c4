use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid bath: {0}")]
    InvalidBath(String),
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error("frequency grid too coarse: step {step:.3e} exceeds {limit:.3e} (a tenth of the narrowest filter width)")]
    GridResolution { step: f64, limit: f64 },
    #[error("self-consistency did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("steady state is not unique (second singular value {0:.3e})")]
    DegenerateSteadyState(f64),
    #[error("toml parse error: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
