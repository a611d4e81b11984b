//! Exact linear algebra over prime fields.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod sparse;

pub use field::{is_prime, Field, DEFAULT_FIELD_ORDER};
pub use matrix::{Matrix, RowBasis};
pub use poly::{char_poly, char_poly_factors, factor, is_linear_power, Poly};
pub use sparse::SparseSystem;
