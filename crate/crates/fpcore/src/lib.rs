//! Exact arithmetic foundation: prime-field scalars, graded multivariate
//! polynomial rings with configurable monomial orders, and seeded randomness
//! for generic choices.
//!
//! Everything downstream (Gröbner bases, resolutions, the construction
//! pipeline) works with values from this crate. All arithmetic is exact mod a
//! prime `p`; there is no floating point anywhere.

pub mod field;
pub mod json;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;
pub mod rng;

pub use field::{FieldError, PrimeField, Scalar, DEFAULT_PRIME};
pub use monomial::{Monomial, MAX_EXP, MAX_VARS};
pub use order::MonomialOrder;
pub use poly::{random_homogeneous, random_linear_form, Polynomial, Term};
pub use ring::{binomial, Ring, RingError};
pub use rng::Rng;
