//! Exact integer numerology of general triple planes: the classification
//! table, ramification intersection numbers, cusp-count feasibility, Chern
//! classes, the adjunction iteration with index-bound pruning, the b = 8
//! case enumeration, and moduli dimension counts.
//!
//! Everything here is closed-form arithmetic over `i64` — no polynomial
//! algebra, no randomness. The construction pipeline uses this crate both
//! to predict what it should find and to interpret what it measures.

mod adjunction;
mod numerology;
mod typevii;

pub use adjunction::{adjunction_step, AdjunctionError, AdjunctionState};
pub use numerology::{
    bronowski_check, chern_and_scroll, invariant_table, moduli_dimensions,
    ramification_numbers, BronowskiVerdict, InvariantError, RamificationNumbers,
    TriplePlaneInvariants,
};
pub use typevii::{
    alpha2_from_k2_x2, conjectured_alpha2, type_vii_enumerate, ExcludedCase,
    TypeVIICase, TypeVIIEnumeration,
};
