//! Graph minors, connectivity, Hamiltonicity, and exhaustive search tools
//! for classifying 4-connected graphs without a `W6` minor.
//!
//! Graphs are small (at most 64 vertices) and stored as adjacency bitsets.

pub mod canon;
pub mod chain_lab;
pub mod connectivity;
pub mod constructors;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod minor;

pub use canon::{canonical_form, canonical_graph, canonize, is_isomorphic, CanonicalForm};
pub use connectivity::{
    is_cyclically_4_connected_cubic, is_k_connected, is_planar, vertex_connectivity,
    SeparatorCertificate,
};
pub use constructors::{
    catalog, catalog_lookup, construct, parse_named, special, CatalogEntry, Family,
};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Edge, Graph, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6};
pub use hamilton::{
    chvatal_holds, classify_degree_two_pair, find_hamiltonian_cycle, is_hamiltonian,
    DegreeTwoPairClass, HamiltonCycle,
};
pub use minor::{
    find_minor_model, has_minor, has_topological_minor, verify_minor_model, w6_free_7vertex,
    MinorModel,
};
