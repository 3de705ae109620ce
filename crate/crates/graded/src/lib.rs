//! Graded modules over polynomial rings: finite presentations, Hilbert
//! functions, minimal free resolutions, and the Hom/Ext modules derived
//! from them.
//!
//! A [`GradedModule`] is a cokernel presentation `coker(F₁ → F₀)` with
//! recorded generator and relation degrees. On top of that sit
//! [`free_resolution`] (eager minimalization via unit-entry cancellation),
//! [`hom_module`] / [`ext_module`], and numeric invariants — graded piece
//! dimensions, Hilbert polynomial values, Euler characteristics.

mod homext;
mod module;
mod resolution;

pub use homext::{ext_module, hom_module, subquotient};
pub use module::{GradedError, GradedModule};
pub use resolution::{free_resolution, FreeResolution};
