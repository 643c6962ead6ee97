//! Exterior algebra on ℝⁿ for n ≤ 8: alternating forms, wedge and interior
//! products, induced inner products, the Hodge star and Gram volumes.
//!
//! Axes are 0-based throughout.

mod blade;
mod form;
mod metric;
mod ops;
mod subspace;

pub use blade::binomial;
pub use form::AltForm;
pub use metric::{Metric, Orientation};
pub use subspace::Subspace;
pub use ops::{
    contract, contract_axis, eval, flat, form_inner, form_norm, gram_volume, hodge,
    normalized_gram_volume, orthonormalize, pullback, unit_vector, volume_form, wedge, wedge_all,
};

pub(crate) use metric::compound;

/// Column vector of coordinates.
pub type Vector = nalgebra::DVector<f64>;

/// Dense real matrix.
pub type Matrix = nalgebra::DMatrix<f64>;

/// Builds a [`Vector`] from a slice.
pub fn vector(xs: &[f64]) -> Vector {
    Vector::from_column_slice(xs)
}
