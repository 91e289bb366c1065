use thiserror::Error;

/// Crate-wide error type. Every fallible operation returns one of these
/// variants rather than panicking, so the CLI can map failures onto exit
/// codes and tests can assert on the failure class.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two polynomials from different variable sets were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A substitution or evaluation produced a fractional exponent of a
    /// coefficient or a fractional power of a non-monomial.
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),

    /// An exactness assertion failed (division with remainder where the
    /// theory guarantees none, or a non-integer coefficient where integers
    /// are required).
    #[error("exactness violation: {0}")]
    Exactness(String),

    /// Input data failed structural validation.
    #[error("invalid data: {0}")]
    Validation(String),

    /// A knot name was not found in the registry and does not parse as a
    /// family form.
    #[error("unknown knot: {0}")]
    UnknownKnot(String),

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(String),

    /// The quiver rewriting engine could not complete or failed its own
    /// consistency checks.
    #[error("rewrite failed: {0}")]
    Rewrite(String),

    /// An enumeration exceeded its safety cap.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// BPS/DT extraction met a non-integer or otherwise impossible value.
    #[error("integrality violation: {0}")]
    Integrality(String),

    /// A series could not be peeled into the expected product form.
    #[error("factorization error: {0}")]
    Factorization(String),

    /// Feature combinations outside the supported surface.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
