//! Exact Laurent-polynomial arithmetic and q-calculus.
//!
//! - [`poly`]: rings, monomials (half-unit exponents), arithmetic,
//!   substitution, residue-class division.
//! - [`qcalc`]: Pochhammer symbols, Gaussian binomials/multinomials,
//!   lattice-sum prefactors, truncated inverse Pochhammer series.
//! - [`json`]: deterministic JSON encoding of polynomials.

pub mod json;
pub mod poly;
pub mod qcalc;

pub use json::{poly_from_json, poly_to_json};
pub use poly::{LaurentPoly, Monomial, Ring};
pub use qcalc::{
    inverse_pochhammer_series, pochhammer_ratio, q_binomial, q_multinomial, q_pochhammer,
    q_pochhammer_mono, qq_pochhammer,
};
