use thiserror::Error;

/// Everything that can go wrong when building or analyzing a scenario.
///
/// Variants distinguish *configuration* problems (caller gave values outside
/// the model's domain) from *model-range* problems (derived quantities left
/// the domain, e.g. a fake delay pushed past the symbol duration) so that a
/// CLI can map them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// A system or scenario parameter is outside its admissible range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A geometric quantity is degenerate (coincident points, zero range).
    #[error("degenerate geometry: {0}")]
    Geometry(String),

    /// A derived parameter left the model's valid range.
    #[error("model range exceeded: {0}")]
    ModelRange(String),

    /// A fake-angle construction asked for |sin| > 1.
    #[error("angle construction overflow: sin magnitude {0} exceeds 1")]
    AngleOverflow(f64),

    /// Array or matrix dimensions do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The received signal carries no energy, so SNR is undefined.
    #[error("zero received signal energy: SNR-relative noise power is undefined")]
    ZeroSignal,

    /// A closed-form bound was requested under a design it does not cover.
    #[error("unsupported design: {0}")]
    UnsupportedDesign(String),

    /// A closed-form bound was requested while a required assumption fails.
    #[error("assumption {flag} violated: {detail}")]
    AssumptionViolated { flag: &'static str, detail: String },

    /// A matrix expected to be a Fisher information matrix is not one.
    #[error("not a valid information matrix: {0}")]
    InvalidInformation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
