//! Numerical thresholds used throughout the crate.
//!
//! Every comparison is made after the inputs have been normalised to unit
//! sup-norm, so these are absolute tolerances at unit scale.

/// Default absolute tolerance for identities at unit scale.
pub const ABS: f64 = 1e-9;

/// Residual threshold for subspace classification (times the product of
/// the basis norms, which is 1 after orthonormalisation).
pub const CLASSIFY: f64 = 1e-8;

/// Relative eigenvalue threshold below which a bilinear form is declared
/// degenerate.
pub const DEGENERATE: f64 = 1e-10;

/// Relative pivot threshold for Cholesky factorisations and Gram volumes.
pub const PIVOT: f64 = 1e-12;

/// Relative tolerance for consistency checks inside metric recovery.
pub const RATIO: f64 = 1e-7;
