//! Rank-2 Steiner bundles on the projective plane, presented by matrices
//! of linear forms in three variables.
//!
//! The crate generates presentations — prescribed unstable-line layouts,
//! the logarithmic (Jacobian-syzygy) construction from a line arrangement,
//! and the banded Schwarzenberger normal form — and analyzes them:
//! local freeness, the tensor flip to the dual coordinates, splitting
//! types on lines with candidate and exhaustive unstable-line searches,
//! symmetric powers, section counts against the Riemann–Roch profile, and
//! the vanishing scheme of a generic section.

mod linalg;
mod presentation;
mod sections;
mod splitting;

pub use presentation::{
    all_lines, fliptensor, gen_logarithmic_matrix, gen_schwarzenberger_matrix,
    gen_steiner_matrix, is_locally_free, IntendedAlpha, LineInDualPlane, SplittingType,
    SteinerError, SteinerPresentation, MAX_GENERATION_ATTEMPTS,
};
pub use sections::{
    reflexive_hull, riemann_roch_chi, section_counts, section_scheme_ideal,
    sheaf_sections, sym_power_module, SectionCounts,
};
pub use splitting::{
    restrict_to_line, restrict_with_pivot, splitting_of_matrix, splitting_type,
    unstable_lines, unstable_locus_is_consistent, veronese_rank, LineSearch,
    EXHAUSTIVE_PRIME_CAP,
};
