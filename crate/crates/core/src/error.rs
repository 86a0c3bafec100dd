use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid osculation ratio {0}: must lie in (0, 1)")]
    InvalidOsculation(f64),

    #[error("ellipticity solve did not converge (F(rho) = {curvature_difference}, residual = {residual:e})")]
    EllipticityNonConvergence {
        curvature_difference: f64,
        residual: f64,
    },

    #[error("wire lifts off its seat: contact force points out of the seat cone (angle to seat axis {angle_deg:.3} deg)")]
    SeatSeparation { angle_deg: f64 },

    #[error("wire twist saturated: no sliding equilibrium between {phi_from_deg:.4} and {phi_to_deg:.4} deg ({detail})")]
    TwistSaturation {
        phi_from_deg: f64,
        phi_to_deg: f64,
        detail: String,
    },

    #[error("equilibrium iteration diverged after {iterations} iterations (last residuals: {trace:?})")]
    Divergence { iterations: usize, trace: Vec<f64> },

    #[error("sweep failed at step {step}: {source}")]
    Step {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("root not bracketed: {0}")]
    Bracket(String),

    #[error("stiffness curve reaches {reached:.1} N but {required:.1} N is required")]
    Coverage { reached: f64, required: f64 },

    #[error("truncated contact retains no load-carrying area")]
    DegenerateTruncation,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("config parse error: {0}")]
    ConfigParse(String),

    #[error("config validation error: {0}")]
    ConfigValidation(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
