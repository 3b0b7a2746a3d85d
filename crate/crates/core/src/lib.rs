//! Clique cover width toolkit.
//!
//! * [`cover`]: ordered clique covers `C_0, ..., C_t`, their width `W(C)`,
//!   the clique cover graph, vertex orderings and exact bandwidth.
//! * [`oracles`]: exact searches for `CCW(G)`, the largest induced star
//!   `s(G)`, transitive orientations and the unit incomparability dimension.
//! * [`decompose`]: splits a graph along an ordered clique cover of width `W`
//!   into `W` unit incomparability graphs whose edge intersection is the graph.
//! * [`incomparability`]: the layered greedy cover built from a transitive
//!   orientation of the complement, which brackets `CCW(G)` within a factor
//!   of two together with an induced-star certificate.
//! * [`ramsey`]: Ramsey-number lookup and the induced-star bounds for
//!   intersections of graphs.

pub mod cover;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod graph;
pub mod incomparability;
pub mod io;
mod layout;
pub mod limits;
pub mod oracles;
pub mod ramsey;

pub use cover::{
    bandwidth_exact, cover_width, ordering_width, quotient_graph, trivial_cover, validate_cover,
    CoverReport, CoverViolation, OrderedCliqueCover, Ordering,
};
pub use decompose::{block_cover, decompose, verify_decomposition, Decomposition, Factor, FactorKind};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use incomparability::{
    ccw_two_approx, extract_star_certificate, greedy_cover_width, greedy_layered_cover, random_poset_graph,
    ApproxResult, LayeredCover,
};
pub use io::{parse_graph, serialize_graph, Format};
pub use limits::SearchLimits;
pub use oracles::{
    ccw_exact, find_transitive_orientation, is_unit_incomparability, s_exact, udim_tiny, verify_transitive,
    Orientation, StarCertificate,
};
pub use ramsey::{check_intersection_bound, corollary_bound, ramsey_lookup, verify_ramsey_tiny, RamseyAnswer, RamseyQuery, RamseyTable};
