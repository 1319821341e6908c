//! Surface embeddings and Kuratowski-style certificates.

mod embedding;
mod genus;
mod merge;
mod subdivision;

pub use embedding::{euler_genus_from_faces, face_trace, EmbeddingScheme, FaceTraceResult, FaceWalk};
pub use genus::{min_orientable_genus_exhaustive, orientable_genus_lower_bound, projective_planar_search, GENUS_SEARCH_GUARD};
pub use merge::{member_embedding, merge_embeddings};
pub use subdivision::{
    check_certificate, find_disjoint_k33_subdivisions, find_k33_avoiding_set, find_k33_subdivision,
    find_petersen_subdivision, find_subdivision, pairwise_disjoint, Pattern, SubdivisionCertificate,
};
