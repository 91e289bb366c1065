//! Exact symbolic computation for colored HOMFLY-PT polynomials presented in
//! quiver-like "special form", their rewriting into true symmetric quivers,
//! and the enumerative invariants (motivic Donaldson-Thomas, BPS/LMOV) and
//! quadruply-graded homology structures attached to them.
//!
//! Everything is computed over exact rationals with half-integer exponent
//! lattices; no floating point, no truncation unless a cap is explicit in the
//! API.

pub mod error;
pub mod laurent;
pub mod knotdb;
pub mod quiver;
pub mod ansatz;
pub mod homology;
pub mod verify;
pub mod rewriter;
pub mod lmov;

pub use error::{Error, Result};
