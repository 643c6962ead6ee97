//! Linear algebra of G₂ and Spin(7) structures.
//!
//! The crate is organised bottom-up:
//!
//! * [`multilinear`] — alternating forms on ℝⁿ (n ≤ 8), wedge and interior
//!   products, induced inner products and the Hodge star;
//! * [`g2`] — 3-forms and cross products in dimension 7: metric recovery,
//!   brackets, subspace classification, decompositions and frames;
//! * [`octonion`] — the normed algebra ℝ ⊕ ℝ⁷ built from a cross product,
//!   with triple and fourfold cross products;
//! * [`spin7`] — 4-forms and triple cross products in dimension 8: Cayley
//!   forms, their metric recovery, decompositions, frames and instantons;
//! * [`spinrep`] — the spin representations in dimensions 7 and 8;
//! * [`subridge`] — SU(3)/SU(4) structures and how they induce the above.
//!
//! Axes are 0-based everywhere. Every function is pure and every value is
//! immutable after construction, so all types are `Send + Sync`.
//!
//! ```
//! use calibra_core::g2::CrossStructure7;
//! use calibra_core::multilinear::{hodge, unit_vector};
//!
//! let s = CrossStructure7::standard();
//! let star = hodge(s.phi(), s.metric(), s.orientation()).unwrap();
//! assert_eq!(&star, s.psi());
//! let e3 = s.cross(&unit_vector(7, 0), &unit_vector(7, 1)).unwrap();
//! assert_eq!(e3, unit_vector(7, 2));
//! ```

// `!(x <= tol)` is used on purpose throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod decomp;
pub mod error;
pub mod g2;
pub mod multilinear;
pub mod octonion;
pub mod sample;
pub mod spin7;
pub mod spinrep;
pub mod subridge;
pub mod tol;

pub use decomp::{Component, DecompReport};
pub use error::{Error, Result};
pub use multilinear::{AltForm, Matrix, Metric, Orientation, Vector};
