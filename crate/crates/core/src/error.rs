use thiserror::Error;

/// Errors raised anywhere in the workbench.
///
/// The CLI maps [`Error::CapExceeded`] to exit code 2, malformed input
/// ([`Error::Parse`], [`Error::InvalidParameter`], [`Error::UnsupportedFamily`],
/// [`Error::Data`]) to exit code 1, and the remaining variants to exit code 4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{what} cap exceeded: need {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        cap: u64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("group is not almost simple: {0}")]
    NotAlmostSimple(String),

    #[error("chief factor is not abelian")]
    NonAbelianFactor,

    #[error("simple group of order {order} is ambiguous without element-order witnesses")]
    AmbiguousOrder { order: u64 },

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("division undefined: divisor has zero coefficient at index 1")]
    DivisionUndefined,

    #[error("no finite quotient within index cap {cap}")]
    NoFiniteQuotient { cap: u64 },

    #[error("malformed data: {0}")]
    Data(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn cap(what: &'static str, needed: impl ToString, cap: u64) -> Self {
        Error::CapExceeded {
            what,
            needed: needed.to_string(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
