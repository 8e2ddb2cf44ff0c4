use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The zero series has no a-invariant, initial degree, or multiplicity.
    #[error("the zero series has no {0}")]
    ZeroSeries(&'static str),

    /// A series whose first nonzero Taylor coefficient is negative cannot be
    /// the Hilbert series of a graded module.
    #[error("series has a negative coefficient in degree {degree} and is not a module series")]
    NegativeCoefficient { degree: i64 },

    /// Operation requires a pole at t = 1 (Krull dimension >= 1).
    #[error("series is a Laurent polynomial (pole order 0); {0} is undefined")]
    PoleOrderZero(&'static str),

    /// Expression-grammar parse failure. `position` is 1-based; on premature
    /// end of input it points at the last character consumed.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// The expression is outside the grammar the built-in criteria decide.
    #[error("Cohen-Macaulayness of `{0}` is undecidable by built-in criteria")]
    Undecidable(String),

    #[error("c = {c} and d = {d} are not coprime")]
    NotCoprime { c: u32, d: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Two routes that must agree (SV pairings, closed form vs. engine,
    /// enumeration cross-checks) returned different answers. Always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// An enumeration would exceed its explicit budget.
    #[error("enumeration budget exceeded: {what} needs {needed}, limit {limit}")]
    BudgetExceeded {
        what: String,
        needed: u128,
        limit: u128,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
