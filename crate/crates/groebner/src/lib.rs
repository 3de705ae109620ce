//! Gröbner machinery over prime fields: a budgeted Buchberger engine for
//! submodules of free modules, ideal arithmetic (intersection, quotient,
//! saturation, elimination, ring-map kernels), determinants and minors,
//! Hilbert series with dimension/degree/genera extraction, and Jacobian
//! singular-locus tests.
//!
//! All computations are deterministic: identical inputs produce identical
//! bases, element by element.

pub mod elim;
pub mod gb;
pub mod hilbert;
pub mod ideal;
pub mod matrix;
pub mod ops;
pub mod sing;

pub use elim::{eliminate, ring_map_kernel, ElimError};
pub use gb::{
    ideal_groebner, module_groebner, normal_form as module_normal_form, poly_normal_form,
    syzygies, syzygy_coordinate_zero, syzygies_watched, Budget, GbError, MTerm, ModPoly,
    DEFAULT_BUDGET,
};
pub use hilbert::{HilbertData, HilbertSeries};
pub use ideal::Ideal;
pub use matrix::{
    det, jacobian, mat_mul, minor_count, minors, minors_batch, minors_seq, transpose, PolyMatrix,
};
#[cfg(feature = "parallel")]
pub use matrix::minors_par;
pub use ops::{intersect, quotient, saturate};
pub use sing::{is_projectively_empty, is_smooth_projective, singular_locus};
