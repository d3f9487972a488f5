use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad configuration or arguments, detected before any work.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Run rejected by the desk-scale guard (overridable with `allow_large`).
    #[error("scale guard: {0}")]
    ScaleGuard(String),

    /// A transform needs a triangle entry that is not available.
    #[error("missing data: {0}")]
    MissingData(String),

    /// An entry that must be an integer came out fractional. For the
    /// alpha/beta triangles this is a conjecture violation and is reported,
    /// never rounded away.
    #[error("integrality violation: {0}")]
    Integrality(String),

    /// An entry outside a triangle's support region came out nonzero.
    #[error("support violation: {0}")]
    Support(String),

    /// Two independent computations of the same quantity disagree.
    #[error("cross-method disagreement: {0}")]
    Disagreement(String),

    /// A diagram-level precondition failed (non-strict input, origin/unit
    /// node where a skew node is required, ...).
    #[error("{0}")]
    Diagram(String),

    #[error("unknown table id: {0}")]
    UnknownTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
