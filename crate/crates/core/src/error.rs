use thiserror::Error;

/// Errors raised by state construction, operator algebra and weak-value evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("label error: {0}")]
    Label(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    Normalization { norm_sqr: f64 },

    #[error("pre- and post-selected states are orthogonal (|overlap| = {overlap_abs:e}); weak value undefined")]
    OrthogonalSelection { overlap_abs: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("observable '{name}': {source}")]
    Observable {
        name: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
