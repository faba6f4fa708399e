use thiserror::Error;

/// Errors surfaced by instance constructors, parsers, and checks.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed element text. `pos` is a byte offset into the input.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// Well-formed input denoting a value outside the instance's carrier.
    #[error("invalid value: {0}")]
    Value(String),

    /// Bad instance parameters (zero alphabet, empty carrier, dimension < 1, ...).
    #[error("invalid instance: {0}")]
    Instance(String),

    #[error("empty sample")]
    EmptySample,

    #[error("empty set in position {0}")]
    EmptySet(usize),

    /// A stated hypothesis of the operation does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A result the operation guarantees failed to hold. Indicates the instance
    /// does not actually satisfy the structural assumptions the caller made.
    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("product size cap exceeded: intermediate set has {size} elements, cap is {cap}")]
    ProductCap { size: usize, cap: usize },

    #[error("enumeration cap exceeded: {count} subsets requested, cap is {cap}; shrink the universe or the size range")]
    EnumerationCap { count: u128, cap: u64 },

    /// Configuration object failed validation before any computation started.
    #[error("bad configuration: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialize(#[from] serde_json::Error),
}

impl Error {
    pub fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
