//! Combinatorics on the diagram `Gamma(S)`: flexibility, edge classification
//! and the structure sets around an edge of label 5.

mod classify;
mod context;
mod graph;
mod spherical;

pub use classify::{
    find_de1, find_h3_subset, h3_vertices, is_delta_edge, is_h3_vertex, is_h4_vertex,
    is_irreducible, is_tame, is_theta_edge, is_two_spherical, match_path_template,
    match_vertex_template, templates, DeltaReport, DeltaViolation, LabelSpec, PathTemplate,
    TemplateMatch, TemplateTable, TupleSpec, VertexSpec, VertexTemplate,
};
pub use context::{
    degree, edge_context, structure_violations, wild_pieces, EdgeContext, JtComponent, WildPieces,
};
pub use graph::{
    bit, chordfree_circuit_through, components_of, free_elements, is_chordfree_circuit,
    is_flexible, is_flexible_set, j_components, members, perp, perp_fin_inf, set_of, shortest_path,
    size, Diagram, Flexibility, VSet, MAX_RANK,
};
pub use spherical::{is_positive_definite, is_spherical};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("{0} is not an edge of the diagram")]
    NotAnEdge(String),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}
