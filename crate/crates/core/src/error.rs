use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular coordinate change")]
    InvalidCoordinateChange,
    #[error("ideal is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("empty variety: the ideal is the unit ideal")]
    EmptyVariety,
    #[error("map is undefined on the source: every component lies in the source ideal")]
    Indeterminacy,
    #[error("no point sampler: {0}")]
    NoSampler(String),
    #[error("sampling failed: {0}")]
    SamplingFailure(String),
    #[error("genericity failure after {attempts} attempts: {what}")]
    GenericityFailure { what: String, attempts: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("point does not lie on the variety: {0}")]
    Membership(String),
    #[error("points are linearly dependent")]
    Rank,
    #[error("base point not on the curve: {0}")]
    BadBasepoint(String),
    #[error("map is not an embedding: {0}")]
    NonEmbedding(String),
    #[error("line is contained in the curve")]
    Containment,
    #[error("variety is degenerate: it lies in a hyperplane")]
    Degenerate,
    #[error("syzygy variety extraction failed: {0}")]
    ExtractionFailure(String),
    #[error("bad container: {0}")]
    BadContainer(String),
    #[error("py bounds require a totally real variety")]
    TotallyRealRequired,
    #[error("usage: {0}")]
    Usage(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
