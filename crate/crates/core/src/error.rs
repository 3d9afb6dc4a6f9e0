use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// `Usage` and `Parse` are caller mistakes; the remaining variants report a
/// computation that could not be certified.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("zero polynomial has infinite multiplicity at the origin")]
    InfiniteMultiplicity,

    #[error("inputs share a common component through the origin: gcd = {0}")]
    CommonComponent(String),

    #[error("shear certification failed after {attempts} attempts")]
    CertificationExhausted { attempts: u32 },

    #[error("local algebra did not stabilize up to truncation order {budget}")]
    TruncationBudget { budget: u32 },

    #[error("braid closure has a disconnected Seifert surface: {0}")]
    DisconnectedSurface(String),

    #[error("cannot compose edge {index} ({left}) with edge {next} ({right}): endpoints differ", next = .index + 1)]
    Composition {
        index: usize,
        left: String,
        right: String,
    },

    #[error("verification failed at `{step}`: {detail}")]
    Verification { step: String, detail: String },

    #[error("Milnor oracles disagree: resultant route {resultant}, local algebra route {local_algebra}")]
    OracleDisagreement { resultant: u32, local_algebra: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{0} is not a knot")]
    NotAKnot(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
