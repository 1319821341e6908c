//! The star (Y) product, its inverse along 3-edge cuts, isomorphism testing
//! and the family of iterated products of `P(9,2)`.

mod canon;
mod compose;
mod family;

pub use canon::{
    are_isomorphic, canonical_form, canonical_form_colored, orbit_representatives, vertex_orbits, CanonicalForm,
};
pub use compose::{all_specs, sample_specs, star_compose, star_decompose, StarProduct, StarProductSpec, PERMUTATIONS};
pub use family::{base_graph, extend_level, generate_family, FamilyMember, FAMILY_GUARD};
