//! Exact linear algebra over commutative idempotent semifields.
//!
//! The crate provides element arithmetic for max-plus, min-plus, boolean
//! and ordered-group semifields, dense matrices with permutation-census
//! determinants, a four-way singularity classifier with verified
//! witnesses, tropical rank and kernel duality with a rank theorem check,
//! univariate polynomial roots, and the brute-force definitional oracles
//! that validate all of it at desk scale.

mod assignment;
pub mod cover;
pub mod error;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod rank;
pub mod sample;
pub mod semifield;
pub mod singularity;

pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use semifield::{Semifield, SemifieldValue};
