//! Exact verification of tridiagonal determinant families.
//!
//! The crate computes `det(tI + G)` for Sylvester-type and orthogonal
//! polynomial families, compares it with closed-form products of linear
//! factors, and replays the block-triangularization steps that prove the
//! closed forms by induction on the dimension.

pub mod algebra;
pub mod cli;
pub mod determinant;
pub mod error;
pub mod families;
pub mod matrix;
pub mod reduction;

pub use algebra::{rat, Poly, Rational};
pub use error::{Error, Result};
pub use families::{FamilyId, FamilyParams};
