use thiserror::Error;

/// Errors raised by the set operations, reconstruction and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} exceeds the configured maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("word {word:#b} has bits outside a ground set of order {order}")]
    WordOutOfRange { word: u32, order: usize },

    #[error("size {size} is not a power of two")]
    NotPowerOfTwoSize { size: usize },

    #[error("rank is undefined: the zero word is not a member")]
    UndefinedRank,

    #[error("element {element} is not in the ground set [1..={order}]")]
    IndexOutOfRange { element: usize, order: usize },

    #[error("near-frame partner must be a nonzero member of the set")]
    InvalidNearFramePartner,

    #[error("framing requires the zero word to be a member")]
    MissingZeroWord,

    #[error("operands have different orders ({left} and {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("{count} generators exceed the closure cap of {max}")]
    TooManyGenerators { count: usize, max: usize },

    #[error("{what} is not powerful")]
    NotPowerful { what: &'static str },

    #[error("seed {seed} violates the family precondition: {predicate}")]
    SeedPreconditionViolated { seed: usize, predicate: String },

    #[error("line {line}: invalid digit {digit:?}")]
    InvalidDigit { line: usize, digit: char },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("clutter member {word:#b} is invalid: {reason}")]
    InvalidClutter { word: u32, reason: &'static str },

    #[error("worker pool: {0}")]
    Workers(String),

    #[error("census cache rejected: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
