//! Exact computer algebra for quadratic persistence and related invariants
//! of projective varieties.

pub mod cache;
pub mod error;
pub mod families;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod projection;
pub mod strands;
pub mod univariate;
pub mod varieties;

pub use error::{Error, Result};
pub use field::{Field, FieldConfig, PrimeField, Rationals};
pub use groebner::{HilbertData, Ideal};
pub use linalg::Matrix;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{parse_polynomial, Polynomial};
