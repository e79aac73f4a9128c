use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Resource-limit outcomes (`DpCapExceeded`, `UndecidedAtCap`, `MemoryCap`)
/// are deliberately distinct from precondition violations so callers can
/// tell "the answer exists but costs too much" apart from "the question was
/// malformed".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("set elements must be positive, found 0")]
    ZeroElement,

    #[error("arithmetic overflow in {op}")]
    Overflow { op: &'static str },

    #[error("window mismatch: {left} vs {right}")]
    WindowMismatch { left: u64, right: u64 },

    #[error("{n} is outside the window 1..={window}")]
    OutOfWindow { n: u64, window: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("subset-sum DP needs {needed} bits, cap is {cap}")]
    DpCapExceeded { needed: u64, cap: u64 },

    #[error("undecided at cap: {0}")]
    UndecidedAtCap(String),

    #[error("sieve window {requested} exceeds the memory cap {cap}")]
    MemoryCap { requested: u64, cap: u64 },

    /// A verified postcondition failed. Reaching this is a bug, never
    /// an input error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn undecided(msg: impl Into<String>) -> Self {
        Error::UndecidedAtCap(msg.into())
    }

    /// True for the resource-limit family of errors ("undecided", not "wrong").
    pub fn is_undecided(&self) -> bool {
        matches!(
            self,
            Error::UndecidedAtCap(_) | Error::DpCapExceeded { .. } | Error::MemoryCap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
