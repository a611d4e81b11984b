//! Exact computations with modules over string algebras: presentations,
//! words, string and band modules, Hom and Ext over prime fields,
//! decomposition into indecomposables, almost split sequences and
//! representation type.

pub mod artheory;
pub mod classify;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod homalg;
pub mod linalg;
pub mod presentation;
pub mod repmod;
pub mod runs;
pub mod words;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Poly};
pub use presentation::{parse_presentation, Presentation, Quiver};
pub use repmod::Representation;
pub use words::{Letter, Walk};
